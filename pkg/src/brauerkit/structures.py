"""Value types for SB quivers and Brauer graphs.

An SB quiver is a special quiver together with a cycle-decomposition; a
Brauer graph is a ribbon graph (cyclic orders of half-edges around each
vertex) with vertex multiplicities.  Both are immutable.

Identifiers may be ints or strings.  Everything that needs an ordering uses
:func:`sort_key`, so mixed identifiers stay deterministic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable

Id = Hashable


def sort_key(x):
    """Total order on ints, strings and (nested) tuples of those."""
    if isinstance(x, tuple):
        return (2, tuple(sort_key(y) for y in x))
    return (1, x) if isinstance(x, str) else (0, x)


def fresh_ids(used: Iterable[Id], count: int) -> list[int]:
    """Smallest ``count`` non-negative integers not in ``used``."""
    used = set(used)
    out = []
    n = 0
    while len(out) < count:
        if n not in used:
            out.append(n)
        n += 1
    return out


class StructureError(ValueError):
    """Raised for unknown ids or inputs an operation cannot accept."""


# ---------------------------------------------------------------------------
# SB quivers


@dataclass(frozen=True)
class Arrow:
    id: Id
    tail: Id
    head: Id


@dataclass(frozen=True)
class Cycle:
    arrows: tuple
    mult: int = 1

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))

    def __len__(self):
        return len(self.arrows)


@dataclass(frozen=True, eq=False)
class SBQuiver:
    """A special quiver with a cycle-decomposition.

    ``cycles`` is ordered; operations that transform an SB quiver keep the
    positions of surviving cycles where they can (the reduction driver
    relies on this to track a cycle across mutations).
    """

    vertices: tuple
    arrows: tuple  # of Arrow
    cycles: tuple  # of Cycle

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "cycles", tuple(self.cycles))

    @classmethod
    def from_cycles(cls, vertices, tails: dict, cycles, mults=None) -> SBQuiver:
        """Build from cyclic arrow words; heads are read off the successors.

        ``tails`` maps every arrow id to its tail vertex.  ``cycles`` is a
        list of arrow-id sequences and ``mults`` the matching multiplicities
        (default 1).
        """
        cycles = [tuple(c) for c in cycles]
        mults = [1] * len(cycles) if mults is None else list(mults)
        arrows = []
        for word in cycles:
            for k, a in enumerate(word):
                nxt = word[(k + 1) % len(word)]
                arrows.append(Arrow(a, tails[a], tails[nxt]))
        arrows.sort(key=lambda a: sort_key(a.id))
        return cls(
            tuple(vertices), tuple(arrows),
            tuple(Cycle(w, m) for w, m in zip(cycles, mults)),
        )

    # -- lookups ------------------------------------------------------------

    @cached_property
    def _arrow_map(self) -> dict:
        return {a.id: a for a in self.arrows}

    @cached_property
    def _cycle_index(self) -> dict:
        return {a: k for k, c in enumerate(self.cycles) for a in c.arrows}

    @cached_property
    def _succ(self) -> dict:
        out = {}
        for c in self.cycles:
            w = c.arrows
            for k, a in enumerate(w):
                out[a] = w[(k + 1) % len(w)]
        return out

    @cached_property
    def _pred(self) -> dict:
        return {b: a for a, b in self._succ.items()}

    @cached_property
    def _out(self) -> dict:
        out = {v: [] for v in self.vertices}
        for a in self.arrows:
            out.setdefault(a.tail, []).append(a.id)
        return out

    @cached_property
    def _in(self) -> dict:
        out = {v: [] for v in self.vertices}
        for a in self.arrows:
            out.setdefault(a.head, []).append(a.id)
        return out

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def arrow(self, a) -> Arrow:
        try:
            return self._arrow_map[a]
        except KeyError:
            raise StructureError(f"unknown arrow {a!r}") from None

    def tail(self, a):
        return self.arrow(a).tail

    def head(self, a):
        return self.arrow(a).head

    def next_arrow(self, a):
        """``na(a)``: the successor of ``a`` in its cycle."""
        self.arrow(a)
        return self._succ[a]

    def prev_arrow(self, a):
        self.arrow(a)
        return self._pred[a]

    def cycle_of(self, a) -> int:
        """Index into ``cycles`` of the unique cycle containing ``a``."""
        self.arrow(a)
        return self._cycle_index[a]

    def mult_of(self, a) -> int:
        return self.cycles[self.cycle_of(a)].mult

    def out_arrows(self, v) -> list:
        self.check_vertex(v)
        return list(self._out.get(v, []))

    def in_arrows(self, v) -> list:
        self.check_vertex(v)
        return list(self._in.get(v, []))

    def check_vertex(self, v):
        if v not in self._vertex_set:
            raise StructureError(f"unknown vertex {v!r}")

    @cached_property
    def _vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def visits(self, v) -> int:
        """Number of times the cycles pass through ``v``."""
        return len(self._out.get(v, []))

    def arrow_count(self, a, b) -> int:
        return sum(1 for x in self._out.get(a, []) if self._arrow_map[x].head == b)

    def cycle_vertices(self, k) -> set:
        return {self._arrow_map[a].tail for a in self.cycles[k].arrows}

    def __eq__(self, other):
        if not isinstance(other, SBQuiver):
            return NotImplemented
        return (
            set(self.vertices) == set(other.vertices)
            and set(self.arrows) == set(other.arrows)
            and Counter(_normal_word(c) for c in self.cycles)
            == Counter(_normal_word(c) for c in other.cycles)
        )

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self.arrows)))

    def __repr__(self):
        cyc = ", ".join(
            "(" + " ".join(map(str, c.arrows)) + f")^{c.mult}" for c in self.cycles
        )
        return f"SBQuiver(vertices={list(self.vertices)}, cycles=[{cyc}])"


def _normal_word(c: Cycle):
    """Rotation-invariant key for a cycle."""
    w = c.arrows
    if not w:
        return ((), c.mult)
    rots = [w[k:] + w[:k] for k in range(len(w))]
    return (min(rots, key=lambda r: [sort_key(x) for x in r]), c.mult)


def validate(q: SBQuiver) -> list[str]:
    """Return the violated SB-quiver conditions; an empty list means valid."""
    problems = []
    verts = set(q.vertices)
    if len(verts) != len(q.vertices):
        problems.append("duplicate vertex ids")
    ids = [a.id for a in q.arrows]
    if len(set(ids)) != len(ids):
        problems.append("duplicate arrow ids")
    amap = {a.id: a for a in q.arrows}
    for a in q.arrows:
        if a.tail not in verts or a.head not in verts:
            problems.append(f"arrow {a.id!r} has an endpoint outside the vertex set")

    if not q.arrows:
        if len(verts) != 1 or q.cycles:
            problems.append("a quiver without arrows must be a single vertex")
        return problems

    # special
    outdeg, indeg = Counter(a.tail for a in q.arrows), Counter(a.head for a in q.arrows)
    for v in q.vertices:
        if outdeg[v] > 2 or indeg[v] > 2:
            problems.append(f"vertex {v!r} is not special (in/out-degree > 2)")

    # connected (undirected)
    if verts:
        adj = {v: set() for v in verts}
        for a in q.arrows:
            if a.tail in adj and a.head in adj:
                adj[a.tail].add(a.head)
                adj[a.head].add(a.tail)
        start = next(iter(verts))
        seen, stack = {start}, [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != verts:
            problems.append("quiver is not connected")

    # cycles
    counted = Counter()
    for k, c in enumerate(q.cycles):
        if not c.arrows:
            problems.append(f"cycle {k} is empty")
            continue
        if c.mult < 1:
            problems.append(f"cycle {k} has multiplicity < 1")
        if len(set(c.arrows)) != len(c.arrows):
            problems.append(f"cycle {k} repeats an arrow")
        for t, a in enumerate(c.arrows):
            counted[a] += 1
            b = c.arrows[(t + 1) % len(c.arrows)]
            if a in amap and b in amap and amap[a].head != amap[b].tail:
                problems.append(f"cycle {k} is not a closed walk at arrow {a!r}")
        if len(c.arrows) == 1 and c.mult <= 1:
            problems.append(f"condition (3): loop cycle {k} needs mult>1")
    if set(counted) != set(amap) or any(n != 1 for n in counted.values()):
        problems.append("arrows not partitioned by the cycles")

    visits = Counter()
    for c in q.cycles:
        for a in c.arrows:
            if a in amap:
                visits[amap[a].tail] += 1
    for v in q.vertices:
        if visits[v] == 0:
            problems.append(f"vertex {v!r} lies on no cycle")
        elif visits[v] > 2:
            problems.append(f"condition (2): vertex {v!r} belongs to more than two cycles")
    return problems


def opposite_sb(q: SBQuiver) -> SBQuiver:
    """Reverse all arrows and all cycles."""
    arrows = tuple(Arrow(a.id, a.head, a.tail) for a in q.arrows)
    cycles = tuple(Cycle(tuple(reversed(c.arrows)), c.mult) for c in q.cycles)
    return SBQuiver(q.vertices, arrows, cycles)


def is_multiplex(q: SBQuiver, i) -> bool:
    """True iff there are arrows i->j, j->i (j != i) neither following the other."""
    return multiplex_pair(q, i) is not None


def multiplex_pair(q: SBQuiver, i):
    """First pair ``(alpha, beta)`` witnessing multiplexity at ``i``, or None."""
    q.check_vertex(i)
    for a in sorted(q.out_arrows(i), key=sort_key):
        j = q.head(a)
        if j == i:
            continue
        for b in sorted(q.out_arrows(j), key=sort_key):
            if q.head(b) == i and q.next_arrow(a) != b and q.next_arrow(b) != a:
                return a, b
    return None


# ---------------------------------------------------------------------------
# Brauer graphs


@dataclass(frozen=True)
class BGVertex:
    id: Id
    mult: int
    order: tuple  # cyclic order of half-edge ids

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))


@dataclass(frozen=True)
class Edge:
    id: Id
    half_edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "half_edges", tuple(self.half_edges))


@dataclass(frozen=True, eq=False)
class BrauerGraph:
    """A ribbon graph with vertex multiplicities.

    Every edge owns two half-edges; each vertex lists its half-edges in
    (clockwise) cyclic order.  The graph with a single edge whose two ends
    both have multiplicity 1 is the trivial graph: its Brauer quiver has
    no arrows.
    """

    vertices: tuple  # of BGVertex
    edges: tuple  # of Edge

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    @cached_property
    def _vmap(self):
        return {v.id: v for v in self.vertices}

    @cached_property
    def _emap(self):
        return {e.id: e for e in self.edges}

    @cached_property
    def half_vertex(self) -> dict:
        return {h: v.id for v in self.vertices for h in v.order}

    @cached_property
    def half_edge(self) -> dict:
        return {h: e.id for e in self.edges for h in e.half_edges}

    @cached_property
    def partner(self) -> dict:
        out = {}
        for e in self.edges:
            a, b = e.half_edges
            out[a], out[b] = b, a
        return out

    @cached_property
    def succ(self) -> dict:
        out = {}
        for v in self.vertices:
            o = v.order
            for k, h in enumerate(o):
                out[h] = o[(k + 1) % len(o)]
        return out

    def vertex(self, v) -> BGVertex:
        try:
            return self._vmap[v]
        except KeyError:
            raise StructureError(f"unknown vertex {v!r}") from None

    def edge(self, e) -> Edge:
        try:
            return self._emap[e]
        except KeyError:
            raise StructureError(f"unknown edge {e!r}") from None

    def valence(self, v) -> int:
        return len(self.vertex(v).order)

    def mult(self, v) -> int:
        return self.vertex(v).mult

    def endpoints(self, e) -> tuple:
        a, b = self.edge(e).half_edges
        return self.half_vertex[a], self.half_vertex[b]

    def is_external(self, e) -> bool:
        return any(self.valence(v) == 1 for v in self.endpoints(e))

    @property
    def is_trivial(self) -> bool:
        return len(self.edges) == 1 and all(v.mult == 1 for v in self.vertices)

    def multiplicities(self) -> list[int]:
        return sorted((v.mult for v in self.vertices), reverse=True)

    def __eq__(self, other):
        if not isinstance(other, BrauerGraph):
            return NotImplemented
        return (
            set(self.edges) == set(other.edges)
            and {(v.id, v.mult, _normal_order(v.order)) for v in self.vertices}
            == {(v.id, v.mult, _normal_order(v.order)) for v in other.vertices}
        )

    def __hash__(self):
        return hash(frozenset(self.edges))

    def __repr__(self):
        vs = ", ".join(f"{v.id}(m={v.mult}):{list(v.order)}" for v in self.vertices)
        es = ", ".join(f"{e.id}={list(e.half_edges)}" for e in self.edges)
        return f"BrauerGraph(vertices=[{vs}], edges=[{es}])"


def _normal_order(order):
    if not order:
        return ()
    rots = [order[k:] + order[:k] for k in range(len(order))]
    return min(rots, key=lambda r: [sort_key(x) for x in r])


def validate_graph(g: BrauerGraph) -> list[str]:
    problems = []
    if not g.edges:
        problems.append("a Brauer graph needs at least one edge")
    halves = Counter(h for e in g.edges for h in e.half_edges)
    for e in g.edges:
        if len(e.half_edges) != 2:
            problems.append(f"edge {e.id!r} must own exactly two half-edges")
    if any(n != 1 for n in halves.values()):
        problems.append("a half-edge belongs to more than one edge")
    placed = Counter(h for v in g.vertices for h in v.order)
    if set(placed) != set(halves) or any(n != 1 for n in placed.values()):
        problems.append("every half-edge must appear exactly once in one cyclic order")
    for v in g.vertices:
        if v.mult < 1:
            problems.append(f"vertex {v.id!r} has multiplicity < 1")
        if not v.order:
            problems.append(f"vertex {v.id!r} has no incident half-edges")
    if len({v.id for v in g.vertices}) != len(g.vertices):
        problems.append("duplicate vertex ids")
    if len({e.id for e in g.edges}) != len(g.edges):
        problems.append("duplicate edge ids")
    if problems:
        return problems
    # connected
    hv, he = g.half_vertex, g.half_edge
    adj = {v.id: set() for v in g.vertices}
    for e in g.edges:
        a, b = (hv[h] for h in e.half_edges)
        adj[a].add(b)
        adj[b].add(a)
    start = g.vertices[0].id
    seen, stack = {start}, [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(g.vertices):
        problems.append("graph is not connected")
    del he
    return problems


def opposite_graph(g: BrauerGraph) -> BrauerGraph:
    """Reverse every cyclic order."""
    return BrauerGraph(
        tuple(BGVertex(v.id, v.mult, tuple(reversed(v.order))) for v in g.vertices),
        g.edges,
    )


def opposite(x):
    if isinstance(x, SBQuiver):
        return opposite_sb(x)
    if isinstance(x, BrauerGraph):
        return opposite_graph(x)
    raise TypeError(f"cannot take the opposite of {type(x).__name__}")


def ribbon(g: BrauerGraph):
    """Permutation data ``(halves, succ, partner, mult)`` of a Brauer graph."""
    mult = {h: g.mult(g.half_vertex[h]) for h in g.half_vertex}
    return list(g.half_vertex), g.succ, g.partner, mult


def graph_from_ribbon(succ: dict, partner: dict, mult: dict,
                      edge_names=None) -> BrauerGraph:
    """Rebuild a Brauer graph from permutation data.

    Vertices are the orbits of ``succ`` (named 0, 1, ... in order of their
    smallest half-edge); edges are the orbits of ``partner``.
    """
    halves = sorted(succ, key=sort_key)
    seen = set()
    vertices = []
    for h in halves:
        if h in seen:
            continue
        orbit = [h]
        seen.add(h)
        x = succ[h]
        while x != h:
            orbit.append(x)
            seen.add(x)
            x = succ[x]
        vertices.append(BGVertex(len(vertices), mult[h], tuple(orbit)))
    edges, done = [], set()
    for h in halves:
        if h in done:
            continue
        p = partner[h]
        done.update((h, p))
        name = edge_names[h] if edge_names else len(edges)
        edges.append(Edge(name, (h, p)))
    return BrauerGraph(tuple(vertices), tuple(edges))
