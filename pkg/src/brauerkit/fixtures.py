"""Small named instances used by tests, scripts and the CLI docs."""

from __future__ import annotations

from .structures import BGVertex, BrauerGraph, Edge, SBQuiver


def _sb(vertices, arrows, cycles):
    """``arrows``: id -> (tail, head); ``cycles``: list of (word, mult)."""
    tails = {a: t for a, (t, _) in arrows.items()}
    q = SBQuiver.from_cycles(vertices, tails, [w for w, _ in cycles], [m for _, m in cycles])
    for a, (t, h) in arrows.items():
        assert q.head(a) == h, (a, q.head(a), h)
    return q


def _bg(orders, mults=None):
    """``orders``: vertex -> list of half-edges written ``(edge, k)``."""
    mults = mults or {}
    vertices = tuple(BGVertex(v, mults.get(v, 1), tuple(o)) for v, o in orders.items())
    halves = {}
    for o in orders.values():
        for h in o:
            halves.setdefault(h[0], []).append(h)
    edges = tuple(Edge(e, tuple(sorted(hs))) for e, hs in sorted(halves.items()))
    return BrauerGraph(vertices, edges)


# -- SB quivers ---------------------------------------------------------------


def three_digons() -> SBQuiver:
    """Three 2-cycles 1<->2, 2<->3, 3<->1, all of multiplicity 1."""
    return _sb(
        [1, 2, 3],
        {"a": (1, 2), "a'": (2, 1), "b": (2, 3), "b'": (3, 2), "c": (3, 1), "c'": (1, 3)},
        [(["a", "a'"], 1), (["b", "b'"], 1), (["c", "c'"], 1)],
    )


def looped_square() -> SBQuiver:
    """One cycle 1 -a-> 2 -b-> 3 -c-> 1 -d-> 1 of multiplicity 2."""
    return _sb(
        [1, 2, 3],
        {"a": (1, 2), "b": (2, 3), "c": (3, 1), "d": (1, 1)},
        [(["a", "b", "c", "d"], 2)],
    )


def two_triangles() -> SBQuiver:
    """Triangles 1->2->3->1 and 1->2->4->1 sharing the vertices 1 and 2."""
    return _sb(
        [1, 2, 3, 4],
        {"a": (1, 2), "b": (2, 3), "c": (3, 1), "a'": (1, 2), "b'": (2, 4), "c'": (4, 1)},
        [(["a", "b", "c"], 1), (["a'", "b'", "c'"], 1)],
    )


def multiplex_triangle() -> SBQuiver:
    """Triangle 1->2->3->1 plus the 2-cycle 1->3->1; multiplex at 1."""
    return _sb(
        [1, 2, 3],
        {"a1": (1, 2), "a2": (2, 3), "a3": (3, 1), "b": (1, 3), "b'": (3, 1)},
        [(["a1", "a2", "a3"], 1), (["b", "b'"], 1)],
    )


def single_loop(m: int = 2) -> SBQuiver:
    return _sb([1], {"l": (1, 1)}, [(["l"], m)])


def digon(m: int = 1) -> SBQuiver:
    return _sb([1, 2], {"a": (1, 2), "b": (2, 1)}, [(["a", "b"], m)])


# expected right mutations at vertex 1


def three_digons_mutated() -> SBQuiver:
    """A single 4-cycle 1->2->1->3->1."""
    return _sb(
        [1, 2, 3],
        {"p": (1, 2), "q": (2, 1), "r": (1, 3), "s": (3, 1)},
        [(["p", "q", "r", "s"], 1)],
    )


def looped_square_mutated() -> SBQuiver:
    """Cycle 1 -loop-> 1 -> 2 -> 1 (mult 1) and the 2-cycle 2<->3 (mult 2)."""
    return _sb(
        [1, 2, 3],
        {"l": (1, 1), "p": (1, 2), "q": (2, 1), "r": (2, 3), "s": (3, 2)},
        [(["l", "p", "q"], 1), (["r", "s"], 2)],
    )


def two_triangles_mutated() -> SBQuiver:
    """Triangles 1->3->2->1 and 1->4->2->1."""
    return _sb(
        [1, 2, 3, 4],
        {"p": (1, 3), "q": (3, 2), "r": (2, 1), "p'": (1, 4), "q'": (4, 2), "r'": (2, 1)},
        [(["p", "q", "r"], 1), (["p'", "q'", "r'"], 1)],
    )


def multiplex_triangle_mutated() -> SBQuiver:
    """Triangle 1->2->3->1 plus the 2-cycle 1->2->1."""
    return _sb(
        [1, 2, 3],
        {"a1": (1, 2), "a2": (2, 3), "a3": (3, 1), "x": (2, 1), "y": (1, 2)},
        [(["a1", "a2", "a3"], 1), (["y", "x"], 1)],
    )


# -- Brauer graphs ------------------------------------------------------------


def triangle_graph() -> BrauerGraph:
    """Triangle with edges 1, 2, 3; all multiplicities 1."""
    return _bg({
        "L": [(1, 0), (2, 0)], "R": [(2, 1), (3, 0)], "T": [(3, 1), (1, 1)],
    })


def triangle_graph_flipped() -> BrauerGraph:
    """Path 2 - 3 whose middle vertex carries the graph loop 1 around the far end."""
    return _bg({"L": [(2, 0)], "M": [(2, 1), (1, 0), (3, 0), (1, 1)], "R": [(3, 1)]})


def looped_path_graph() -> BrauerGraph:
    """Path 3 - * - 2 with a graph loop 1 at the exceptional centre * (m=2)."""
    return _bg(
        {"A": [(3, 0)], "X": [(1, 0), (2, 0), (3, 1), (1, 1)], "B": [(2, 1)]},
        {"X": 2},
    )


def looped_path_graph_flipped() -> BrauerGraph:
    return _bg(
        {"A": [(3, 0)], "X": [(2, 0), (3, 1)], "B": [(2, 1), (1, 1), (1, 0)]},
        {"X": 2},
    )


def digon_with_pendants_graph() -> BrauerGraph:
    """Vertices X, Y joined by edges 1 and 2; pendant 3 at X, pendant 4 at Y."""
    return _bg({
        "A": [(3, 0)], "X": [(1, 0), (2, 0), (3, 1)],
        "Y": [(1, 1), (2, 1), (4, 0)], "C": [(4, 1)],
    })


def digon_with_pendants_flipped() -> BrauerGraph:
    return _bg({
        "A": [(3, 0)], "X": [(2, 0), (1, 0), (3, 1)],
        "Y": [(2, 1), (1, 1), (4, 0)], "C": [(4, 1)],
    })


def double_edge_path_graph() -> BrauerGraph:
    """Edges 1 and 3 joining L and M, and edge 2 from M to R."""
    return _bg({"L": [(1, 0), (3, 0)], "M": [(1, 1), (2, 0), (3, 1)], "R": [(2, 1)]})


def double_edge_path_flipped() -> BrauerGraph:
    """Edge 3 from L to M, and edges 1 and 2 joining M and R."""
    return _bg({"L": [(3, 0)], "M": [(3, 1), (1, 1), (2, 0)], "R": [(2, 1), (1, 0)]})


MUTATION_EXAMPLES = {
    "three_digons": (three_digons, 1, three_digons_mutated),
    "looped_square": (looped_square, 1, looped_square_mutated),
    "two_triangles": (two_triangles, 1, two_triangles_mutated),
    "multiplex_triangle": (multiplex_triangle, 1, multiplex_triangle_mutated),
}

FLIP_EXAMPLES = {
    "triangle": (triangle_graph, 1, triangle_graph_flipped),
    "looped_path": (looped_path_graph, 1, looped_path_graph_flipped),
    "digon_with_pendants": (digon_with_pendants_graph, 1, digon_with_pendants_flipped),
    "double_edge_path": (double_edge_path_graph, 1, double_edge_path_flipped),
}
