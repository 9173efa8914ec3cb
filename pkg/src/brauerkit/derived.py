"""Numerical checks of the derived equivalence ``A ~ End(T(i))``.

* :func:`okuyama_complex` describes the two-term tilting complex ``T(i)``.
* :func:`euler_cartan` predicts the Cartan matrix of the mutated algebra by
  the alternating sum of Hom dimensions between the terms of ``T(i)``.
* :func:`ext_table` predicts its quiver: the dimension of ``Ext^1`` between
  simple modules, evaluated from local configurations around ``i``.
* :func:`fingerprint` collects derived invariants.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .algebra import cartan_matrix, local_module
from .canonical import canonical_form
from .correspondence import brauer_graph_of, brauer_quiver
from .mutation import flip_left, flip_right, mutation_case
from .structures import BrauerGraph, SBQuiver, StructureError, sort_key


@dataclass(frozen=True)
class OkuyamaComplex:
    """Summands of ``T(i) = T_i + sum_{j != i} P_j`` by degree.

    ``terms[j] = (degree-0 summands, degree-1 summands)`` as sorted tuples
    of vertices; only ``terms[pivot]`` has a degree-1 part.
    """

    pivot: object
    terms: dict


def okuyama_complex(q: SBQuiver, i) -> OkuyamaComplex:
    _, tops = local_module(q, i)
    terms = {j: ((j,), ()) for j in q.vertices}
    terms[i] = (tuple(tops), (i,))
    return OkuyamaComplex(i, terms)


def euler_cartan(q: SBQuiver, i) -> np.ndarray:
    """Entry ``(a, b)`` is ``sum (-1)^(l+m) dim Hom(T_a^l, T_b^m)``.

    ``dim Hom(P_x, P_y)`` is read as ``C[y, x]``.
    """
    C = cartan_matrix(q)
    idx = {v: k for k, v in enumerate(q.vertices)}
    n = len(q.vertices)
    # signed multiplicity of each P_x in T_a, as a matrix S[a, x]
    S = np.zeros((n, n), dtype=np.int64)
    for a, parts in okuyama_complex(q, i).terms.items():
        for degree, summands in enumerate(parts):
            for x in summands:
                S[idx[a], idx[x]] += -1 if degree % 2 else 1
    return S @ C.T @ S.T


# ---------------------------------------------------------------------------
# Ext^1 between simples of the mutated algebra


def _walk(q: SBQuiver, a, length):
    out = [a]
    for _ in range(length - 1):
        out.append(q.next_arrow(out[-1]))
    return out


def _segments(q: SBQuiver, length: int) -> Counter:
    key = f"_segments{length}"
    cached = q.__dict__.get(key)
    if cached is None:
        cached = Counter()
        for c in q.cycles:
            if len(c.arrows) * c.mult < length:
                continue
            for a in c.arrows:
                cached[tuple((q.tail(x), q.head(x)) for x in _walk(q, a, length))] += 1
        q.__dict__[key] = cached
    return cached


def _count_segments(q: SBQuiver, shape) -> int:
    """Occurrences of consecutive arrows in a cycle matching ``shape``,
    a list of (tail, head) pairs."""
    return _segments(q, len(shape))[tuple(shape)]


def _zero_paths(q: SBQuiver, src, dst) -> int:
    """Paths ``src -> h -> dst`` of two arrows whose product vanishes."""
    n = 0
    for a in q.out_arrows(src):
        for b in q.out_arrows(q.head(a)):
            if q.head(b) == dst and b != q.next_arrow(a):
                n += 1
    return n


def ext_entry(q: SBQuiver, i, j, jp) -> int:
    """``dim Ext^1(S_j, S_jp)`` over the right mutation at ``i``."""
    arrows = q.arrow_count
    if j == i and jp == i:
        return arrows(i, i)
    if jp == i:
        return arrows(i, j)
    if j == i:
        # Ext(S_i, S_jp)
        if not arrows(i, jp):
            return _zero_paths(q, i, jp)
        return _ext_pivot_to_target(q, i, jp)
    to_j, to_jp = arrows(i, j) > 0, arrows(i, jp) > 0
    if not to_j and not to_jp:
        return arrows(j, jp)
    if not to_j and to_jp:
        return (
            arrows(j, jp)
            + _count_segments(q, [(j, i), (i, jp)])
            + _count_segments(q, [(j, i), (i, i), (i, jp)])
        )
    if to_j and not to_jp:
        if arrows(i, j) == 2:
            return 0
        return 1 if _count_segments(q, [(i, j), (j, jp)]) else 0
    if j != jp:
        return (
            _count_segments(q, [(i, j), (j, i), (i, jp)])
            + _count_segments(q, [(i, j), (j, jp)])
        )
    # a return arrow j -> i paired with a non-successor i -> j (multiplex)
    # carries the other end of i back onto its cycle: no loop from that one
    paired = _multiplex_returns(q, i)
    n = 0
    for c in q.cycles:
        if c.mult <= 1 or paired & set(c.arrows):
            continue
        ends = sorted((q.tail(a), q.head(a)) for a in c.arrows)
        if ends in (sorted([(i, j), (j, i)]), sorted([(i, j), (j, i), (i, i)])):
            n += 1
    n += _count_segments(q, [(i, j), (j, j)])
    return n


def _multiplex_returns(q: SBQuiver, i) -> set:
    out = set()
    for a in q.out_arrows(i):
        j = q.head(a)
        if j == i:
            continue
        for b in q.out_arrows(j):
            if q.head(b) == i and q.next_arrow(a) != b and q.next_arrow(b) != a:
                out.add(b)
    return out


def _ext_pivot_to_target(q: SBQuiver, i, j) -> int:
    # alpha: i -> h, beta: h -> i with alpha*beta = 0 and beta continuing to j,
    # possibly through a loop at i
    def returning():
        n = 0
        for alpha in q.out_arrows(i):
            h = q.head(alpha)
            if h == i:
                continue
            for beta in q.out_arrows(h):
                if q.head(beta) != i or beta == q.next_arrow(alpha):
                    continue
                gamma = q.next_arrow(beta)
                if q.head(gamma) == i and q.tail(gamma) == i:
                    gamma = q.next_arrow(gamma)
                if q.head(gamma) == j:
                    n += 1
        return n

    if q.visits(j) == 1:
        return 2 if returning() else 1
    direct = sum(
        1
        for alpha in q.out_arrows(i) if q.head(alpha) != i
        for beta in q.out_arrows(q.head(alpha))
        if q.head(beta) == j and beta != q.next_arrow(alpha)
    )
    return direct + returning()


def ext_table(q: SBQuiver, i) -> np.ndarray:
    """Matrix of ``dim Ext^1(S_a, S_b)``, indexed like ``q.vertices``."""
    q.check_vertex(i)
    if mutation_case(q, i) == "identity":
        return arrow_matrix(q)
    n = len(q.vertices)
    out = np.zeros((n, n), dtype=np.int64)
    for x, a in enumerate(q.vertices):
        for y, b in enumerate(q.vertices):
            out[x, y] = ext_entry(q, i, a, b)
    return out


def arrow_matrix(q: SBQuiver) -> np.ndarray:
    idx = {v: k for k, v in enumerate(q.vertices)}
    n = len(q.vertices)
    out = np.zeros((n, n), dtype=np.int64)
    for a in q.arrows:
        out[idx[a.tail], idx[a.head]] += 1
    return out


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True)
class Fingerprint:
    edge_count: int
    multiplicities: tuple
    cartan_invariant_factors: tuple

    def to_dict(self) -> dict:
        return {
            "edge_count": self.edge_count,
            "multiplicity_multiset": list(self.multiplicities),
            "cartan_invariant_factors": list(self.cartan_invariant_factors),
        }


def smith_invariants(M) -> tuple:
    """Invariant factors of an integer matrix, zeros included, ascending."""
    M = np.asarray(M, dtype=np.int64)
    n = min(M.shape)
    factors = [abs(int(x)) for x in invariant_factors(Matrix(M.tolist()), domain=ZZ)]
    factors += [0] * (n - len(factors))
    return tuple(sorted(factors, key=lambda x: (x == 0, x)))


def fingerprint(x) -> Fingerprint:
    if isinstance(x, SBQuiver):
        g = brauer_graph_of(x)
        q = x
    elif isinstance(x, BrauerGraph):
        g = x
        q = None if x.is_trivial else brauer_quiver(x)
    else:
        raise TypeError(f"no fingerprint for {type(x).__name__}")
    if q is None or q.is_trivial:
        factors = (1,)  # the algebra k
    else:
        factors = smith_invariants(cartan_matrix(q))
    return Fingerprint(len(g.edges), tuple(g.multiplicities()), factors)


# ---------------------------------------------------------------------------
# search over flips


@dataclass(frozen=True)
class SearchResult:
    found: bool
    steps: tuple  # of (edge id, "right" | "left")
    explored: int
    reason: str = ""


def flip_search(g1: BrauerGraph, g2: BrauerGraph, max_depth: int,
                max_states: int = 200_000) -> SearchResult:
    """Breadth-first search for a flip sequence carrying ``g1`` to ``g2``."""
    if fingerprint(g1) != fingerprint(g2):
        return SearchResult(False, (), 0, "not connected under tested invariants")
    target = canonical_form(g2)
    start = canonical_form(g1)
    if start == target:
        return SearchResult(True, (), 1)
    parent = {start: None}
    queue = deque([(g1, 0)])
    while queue:
        g, depth = queue.popleft()
        if depth >= max_depth:
            continue
        key = canonical_form(g)
        for e in sorted((e.id for e in g.edges), key=sort_key):
            for direction, op in (("right", flip_right), ("left", flip_left)):
                h = op(g, e)
                k = canonical_form(h)
                if k in parent:
                    continue
                parent[k] = (key, e, direction)
                if k == target:
                    return SearchResult(True, _path(parent, k), len(parent))
                if len(parent) >= max_states:
                    raise StructureError(f"search budget of {max_states} states exceeded")
                queue.append((h, depth + 1))
    return SearchResult(False, (), len(parent), f"exhausted at depth {max_depth}")


def _path(parent, k):
    steps = []
    while parent[k] is not None:
        k, e, d = parent[k]
        steps.append((e, d))
    return tuple(reversed(steps))
