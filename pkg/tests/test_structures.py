import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brauerkit import fixtures as F
from brauerkit.canonical import canonical_form, isomorphic, relabel_graph, relabel_sb
from brauerkit.enumerate import all_brauer_graphs, random_brauer_graph, random_sb_quiver
from brauerkit.structures import (
    BGVertex, BrauerGraph, Cycle, Edge, SBQuiver, StructureError, is_multiplex, opposite,
    validate, validate_graph,
)


def test_three_digons_valid():
    assert validate(F.three_digons()) == []


def test_mult_one_loop_rejected():
    q = SBQuiver.from_cycles([1], {"l": 1}, [["l"]], [1])
    problems = validate(q)
    assert any("condition (3)" in p and "loop" in p for p in problems)


def test_dropping_arrow_from_cycle_breaks_partition():
    q = F.looped_square()
    broken = SBQuiver(q.vertices, q.arrows, (Cycle(("a", "b", "c"), 2),))
    assert any("not partitioned" in p for p in validate(broken))


def test_vertex_on_three_cycles_rejected():
    q = SBQuiver.from_cycles(
        [1, 2, 3, 4], {"a": 1, "b": 2, "c": 1, "d": 3, "e": 1, "f": 4},
        [["a", "b"], ["c", "d"], ["e", "f"]],
    )
    assert any("condition (2)" in p for p in validate(q))


def test_next_arrow():
    assert F.three_digons().next_arrow("a") == "a'"
    assert F.looped_square().next_arrow("c") == "d"
    assert F.single_loop(3).next_arrow("l") == "l"
    with pytest.raises(StructureError):
        F.three_digons().next_arrow("zz")


def test_multiplex():
    assert not is_multiplex(F.three_digons(), 1)
    assert is_multiplex(F.multiplex_triangle(), 1)
    assert not is_multiplex(F.single_loop(2), 1)
    with pytest.raises(StructureError):
        is_multiplex(F.three_digons(), 9)


def test_cycle_lengths_sum_to_arrow_count():
    for name, (src, _, dst) in F.MUTATION_EXAMPLES.items():
        for q in (src(), dst()):
            assert sum(len(c) for c in q.cycles) == len(q.arrows), name


def test_opposite_reverses_cycle():
    op = opposite(F.looped_square())
    assert op.cycles[0].arrows in {("d", "c", "b", "a"), ("a", "d", "c", "b"),
                                   ("b", "a", "d", "c"), ("c", "b", "a", "d")}
    assert op.arrow("a").tail == 2 and op.arrow("a").head == 1


def test_opposite_graph_reverses_orders():
    g = F.triangle_graph()
    op = opposite(g)
    for v in g.vertices:
        assert tuple(reversed(v.order)) == op.vertex(v.id).order or len(v.order) <= 2


def test_opposite_involution():
    q = F.three_digons()
    assert opposite(opposite(q)) == q
    g = F.digon_with_pendants_graph()
    assert opposite(opposite(g)) == g


def test_canonical_form_separates():
    assert canonical_form(F.three_digons()) != canonical_form(F.looped_square())


def test_graph_validation_catches_duplicate_half_edge():
    g = BrauerGraph(
        (BGVertex("u", 1, ("x", "x")), BGVertex("v", 1, ("y",))),
        (Edge(1, ("x", "y")),),
    )
    assert validate_graph(g)


def _shuffled_sb(q, rng):
    vs = list(q.vertices)
    perm = vs[:]
    rng.shuffle(perm)
    ids = [a.id for a in q.arrows]
    new_ids = [f"r{k}" for k in range(len(ids))]
    rng.shuffle(new_ids)
    return relabel_sb(q, dict(zip(vs, perm)), dict(zip(ids, new_ids)))


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 6))
def test_canonical_form_invariant_under_relabelling(seed, n):
    rng = random.Random(seed)
    q = random_sb_quiver(n, rng)
    assert canonical_form(_shuffled_sb(q, rng)) == canonical_form(q)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 6))
def test_graph_canonical_form_invariant(seed, n):
    rng = random.Random(seed)
    g = random_brauer_graph(n, rng)
    vmap = {v.id: f"v{k}" for k, v in enumerate(g.vertices)}
    emap = {e.id: 100 + k for k, e in enumerate(g.edges)}
    halves = [h for e in g.edges for h in e.half_edges]
    new = [f"h{k}" for k in range(len(halves))]
    rng.shuffle(new)
    g2 = relabel_graph(g, vmap, emap, dict(zip(halves, new)))
    assert validate_graph(g2) == []
    assert isomorphic(g, g2)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 6))
def test_opposite_preserves_validity_and_multiplex(seed, n):
    q = random_sb_quiver(n, random.Random(seed))
    op = opposite(q)
    assert validate(op) == []
    for v in q.vertices:
        assert is_multiplex(q, v) == is_multiplex(op, v)


def _brute_isomorphic(g1, g2):
    """Search all half-edge bijections (small graphs only)."""
    s1, p1, s2, p2 = g1.succ, g1.partner, g2.succ, g2.partner
    m1 = {h: g1.mult(v) for h, v in g1.half_vertex.items()}
    m2 = {h: g2.mult(v) for h, v in g2.half_vertex.items()}
    h1, h2 = list(s1), list(s2)
    if len(h1) != len(h2):
        return False
    for perm in itertools.permutations(h2):
        f = dict(zip(h1, perm))
        if all(f[s1[h]] == s2[f[h]] and f[p1[h]] == p2[f[h]] and m1[h] == m2[f[h]] for h in h1):
            return True
    return False


def test_mirror_iso_matches_brute_force():
    chiral = 0
    for g in all_brauer_graphs(3, mults=(1, 2)):
        expected = _brute_isomorphic(g, opposite(g))
        assert isomorphic(g, opposite(g)) == expected
        chiral += not expected
    assert chiral > 0  # mirror images are not identified
