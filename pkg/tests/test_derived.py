import random

import pytest

from brauerkit import fixtures as F
from brauerkit.algebra import cartan_matrix
from brauerkit.derived import (
    arrow_matrix, euler_cartan, ext_entry, ext_table, fingerprint, flip_search, okuyama_complex,
    smith_invariants,
)
from brauerkit.canonical import relabel_graph
from brauerkit.correspondence import brauer_quiver
from brauerkit.enumerate import all_sb_quivers, brauer_graphs, is_tree, random_brauer_graph
from brauerkit.mutation import flip_right, mutate_left, mutate_right
from brauerkit.structures import BGVertex, BrauerGraph, Edge, opposite


def test_okuyama_digon():
    T = okuyama_complex(F.digon(1), 1).terms
    assert T == {1: ((2,), (1,)), 2: ((2,), ())}


def test_okuyama_looped_square():
    assert okuyama_complex(F.looped_square(), 1).terms[1] == ((2, 2), (1,))


def test_okuyama_multiplex():
    assert okuyama_complex(F.multiplex_triangle(), 1).terms[1] == ((2, 3), (1,))


@pytest.mark.parametrize("name", sorted(F.MUTATION_EXAMPLES))
def test_identities_on_examples(name):
    src, i, _ = F.MUTATION_EXAMPLES[name]
    q = src()
    target = mutate_right(q, i)
    E = euler_cartan(q, i)
    assert (E == E.T).all()
    assert (E == cartan_matrix(target)).all()
    assert (ext_table(q, i) == arrow_matrix(target)).all()


def test_ext_three_digons():
    assert ext_table(F.three_digons(), 1).tolist() == [[0, 1, 1], [1, 0, 0], [1, 0, 0]]


def test_ext_loop_from_heavy_digon():
    # 1 <-> 2 of multiplicity 2: the mutation at 1 draws a loop at 2
    assert ext_entry(F.digon(2), 1, 2, 2) == 1
    assert ext_entry(F.digon(1), 1, 2, 2) == 0


def test_ext_into_pivot_is_reversed_arrow_count():
    for q in all_sb_quivers(3):
        for i in q.vertices:
            for j in q.vertices:
                if j != i:
                    assert ext_entry(q, i, j, i) == q.arrow_count(i, j)


def test_stalk_pivot():
    # nothing leaves 1 except its own loop: T(1) changes nothing
    q = F.single_loop(3)
    assert (euler_cartan(q, 1) == cartan_matrix(q)).all()


def test_identities_exhaustive_three_vertices():
    for q in all_sb_quivers(3):
        for i in q.vertices:
            target = mutate_right(q, i)
            assert (euler_cartan(q, i) == cartan_matrix(target)).all()
            assert (ext_table(q, i) == arrow_matrix(target)).all()


def test_degenerate_b2_configurations(capsys):
    # a return beta: h -> i whose successor is alpha itself, with h = j
    flagged = 0
    for q in all_sb_quivers(4):
        for i in q.vertices:
            for alpha in q.out_arrows(i):
                h = q.head(alpha)
                if h == i:
                    continue
                for beta in q.in_arrows(i):
                    if q.tail(beta) == h and q.next_arrow(beta) == alpha and q.next_arrow(alpha) != beta:
                        flagged += 1
                        target = mutate_right(q, i)
                        assert (ext_table(q, i) == arrow_matrix(target)).all()
    print(f"degenerate (2)(ii)(b2) configurations checked: {flagged}")


def test_smith_invariants():
    assert smith_invariants([[2, 1, 1], [1, 2, 1], [1, 1, 2]]) == (1, 1, 4)
    assert smith_invariants([[2, 0], [0, 0]]) == (2, 0)


def test_fingerprint_triangle():
    fp = fingerprint(F.triangle_graph())
    assert fp.to_dict() == {
        "edge_count": 3, "multiplicity_multiset": [1, 1, 1], "cartan_invariant_factors": [1, 1, 4],
    }
    assert fingerprint(F.three_digons()) == fp


def test_fingerprint_opposite_and_mutation():
    rng = random.Random(2)
    for _ in range(50):
        g = random_brauer_graph(rng.randint(2, 6), rng)
        fp = fingerprint(g)
        assert fingerprint(opposite(g)) == fp
        q = brauer_quiver(g)
        i = rng.choice(q.vertices)
        assert fingerprint(mutate_right(q, i)) == fp
        assert fingerprint(mutate_left(q, i)) == fp


def test_search_one_flip():
    g = F.triangle_graph()
    r = flip_search(g, flip_right(g, 1), 3)
    assert r.found and len(r.steps) == 1


def test_search_relabelled_copy():
    g = F.digon_with_pendants_graph()
    vmap = {v.id: f"w{v.id}" for v in g.vertices}
    emap = {e.id: e.id + 10 for e in g.edges}
    hmap = {h: ("z",) + h for e in g.edges for h in e.half_edges}
    r = flip_search(g, relabel_graph(g, vmap, emap, hmap), 2)
    assert r.found and r.steps == ()


def test_search_different_fingerprints():
    r = flip_search(F.triangle_graph(), F.looped_path_graph(), 4)
    assert not r.found and r.reason == "not connected under tested invariants"


def test_search_tree_to_star():
    star = BrauerGraph(
        (BGVertex("c", 1, tuple((e, 0) for e in range(4))),)
        + tuple(BGVertex(f"l{e}", 1, ((e, 1),)) for e in range(4)),
        tuple(Edge(e, ((e, 0), (e, 1))) for e in range(4)),
    )
    for g in brauer_graphs(4, mults=(1,)):
        if is_tree(g):
            assert flip_search(g, star, 12).found
