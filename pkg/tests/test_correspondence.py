import random

import pytest

from brauerkit import fixtures as F
from brauerkit.canonical import isomorphic
from brauerkit.correspondence import brauer_graph_of, brauer_quiver
from brauerkit.enumerate import random_sb_quiver
from brauerkit.structures import BGVertex, BrauerGraph, Edge, StructureError, validate, validate_graph


def test_triangle_gives_three_digons():
    assert isomorphic(brauer_quiver(F.triangle_graph()), F.three_digons())


def test_three_digons_gives_triangle():
    assert isomorphic(brauer_graph_of(F.three_digons()), F.triangle_graph())


def test_exceptional_leaf_gives_loop():
    q = brauer_quiver(F.looped_path_graph())
    # edge 1 is the graph loop at the vertex of multiplicity 2
    loops = [a for a in q.arrows if a.tail == a.head]
    assert [q.tail(a.id) for a in loops] == [1]
    assert q.mult_of(loops[0].id) == 2


def test_single_external_edge_at_exceptional_vertex():
    g = BrauerGraph(
        (BGVertex("x", 3, ("h",)), BGVertex("y", 1, ("k",))), (Edge(5, ("h", "k")),)
    )
    q = brauer_quiver(g)
    assert q.vertices == (5,)
    assert len(q.arrows) == 1 and len(q.cycles) == 1 and q.cycles[0].mult == 3


def test_trivial_graph_rejected():
    g = BrauerGraph(
        (BGVertex("x", 1, ("h",)), BGVertex("y", 1, ("k",))), (Edge(5, ("h", "k")),)
    )
    with pytest.raises(StructureError):
        brauer_quiver(g)


def test_mutated_digons_give_flipped_triangle():
    assert isomorphic(brauer_graph_of(F.three_digons_mutated()), F.triangle_graph_flipped())


def test_edge_count_matches_vertex_count():
    for name, (src, _, _) in F.FLIP_EXAMPLES.items():
        g = src()
        assert len(g.edges) == len(brauer_quiver(g).vertices), name


def test_round_trip_random():
    rng = random.Random(7)
    for _ in range(200):
        q = random_sb_quiver(rng.randint(1, 8), rng)
        g = brauer_graph_of(q)
        assert validate_graph(g) == []
        q2 = brauer_quiver(g)
        assert validate(q2) == []
        assert isomorphic(q, q2)
        assert isomorphic(brauer_graph_of(q2), g)


def test_repeated_round_trips_keep_half_edges_distinct():
    g = F.digon_with_pendants_graph()
    for _ in range(3):
        g = brauer_graph_of(brauer_quiver(g))
        assert validate_graph(g) == []
    assert isomorphic(g, F.digon_with_pendants_graph())
