"""Exact combinatorial model of the algebra attached to an SB quiver.

For a visit of vertex ``i`` on a cycle ``C`` (an arrow ``a`` leaving ``i``
in ``C``) the maximal walk is ``a, na(a), na(na(a)), ...`` of length
``mult(C) * len(C)``.  The right module ``e_i A`` has basis

* the idempotent ``e_i``,
* every proper, non-empty prefix of every maximal walk from ``i``,
* one socle element (all maximal walks from ``i`` agree in ``A``).

No ground field is needed: every relation has coefficients +-1, so all
dimensions are field independent.  :func:`oracle_quotient` recomputes the
same numbers by brute force from the defining relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .structures import SBQuiver, StructureError, sort_key


@dataclass(frozen=True)
class BasisPath:
    """One basis element of ``e_i A``.

    ``arrows`` is empty for the idempotent; for the socle it holds one
    representative maximal walk.
    """

    start: object
    arrows: tuple
    end: object
    socle: bool = False

    @property
    def length(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class PathBasis:
    vertices: tuple
    elements: dict  # vertex -> tuple[BasisPath]

    def dim(self, i) -> int:
        return len(self.elements[i])

    def total_dim(self) -> int:
        return sum(len(v) for v in self.elements.values())


def maximal_walks(q: SBQuiver, i) -> list[tuple]:
    """One maximal walk per visit of ``i``, ordered by starting arrow id."""
    walks = []
    for a in sorted(q.out_arrows(i), key=sort_key):
        c = q.cycles[q.cycle_of(a)]
        n = c.mult * len(c)
        w, x = [], a
        for _ in range(n):
            w.append(x)
            x = q.next_arrow(x)
        walks.append(tuple(w))
    return walks


def _require_nontrivial(q: SBQuiver):
    if q.is_trivial:
        raise StructureError("the trivial SB quiver has no arrows")


def path_basis(q: SBQuiver) -> PathBasis:
    _require_nontrivial(q)
    elements = {i: _vertex_basis(q, i, maximal_walks(q, i)) for i in q.vertices}
    return PathBasis(tuple(q.vertices), elements)


def _vertex_basis(q: SBQuiver, i, walks) -> tuple:
    basis = [BasisPath(i, (), i)]
    for w in walks:
        for L in range(1, len(w)):
            basis.append(BasisPath(i, w[:L], q.head(w[L - 1])))
    basis.append(BasisPath(i, walks[0], i, socle=True))
    return tuple(basis)


def cartan_matrix(q: SBQuiver) -> np.ndarray:
    """``C[i, j] = dim e_i A e_j`` in the vertex order of ``q``."""
    cached = q.__dict__.get("_cartan")
    if cached is not None:
        return cached.copy()
    _require_nontrivial(q)
    index = {v: k for k, v in enumerate(q.vertices)}
    n = len(q.vertices)
    C = np.zeros((n, n), dtype=np.int64)
    succ, tail = q._succ, {a.id: a.tail for a in q.arrows}
    for c in q.cycles:
        m, s = c.mult, len(c.arrows)
        for a in c.arrows:
            # the proper prefixes of the walk from a end at the tails of
            # the arrows that follow a
            row = index[tail[a]]
            x = succ[a]
            for _ in range(m * s - 1):
                C[row, index[tail[x]]] += 1
                x = succ[x]
    for k in index.values():
        C[k, k] += 2  # idempotent and socle
    q.__dict__["_cartan"] = C
    return C.copy()


# ---------------------------------------------------------------------------
# brute-force oracle


def _relations(q: SBQuiver):
    """Monomial generators (as words) and binomial generators of the ideal."""
    monomials = set()
    for c in q.cycles:
        w, m, s = c.arrows, c.mult, len(c.arrows)
        for t in range(s):
            monomials.add(tuple(w[(t + k) % s] for k in range(m * s + 1)))
    for a in q.arrows:
        for b in q.out_arrows(a.head):
            if b != q.next_arrow(a.id):
                monomials.add((a.id, b))
    binomials = []
    for i in q.vertices:
        outs = sorted(q.out_arrows(i), key=sort_key)
        if len(outs) == 2:
            walks = []
            for a in outs:
                c = q.cycles[q.cycle_of(a)]
                w, x = [], a
                for _ in range(c.mult * len(c)):
                    w.append(x)
                    x = q.next_arrow(x)
                walks.append(tuple(w))
            binomials.append((walks[0], walks[1]))
    return monomials, binomials


def _contains_any(word, monomials, lengths):
    n = len(word)
    for L in lengths:
        for s in range(n - L + 1):
            if word[s:s + L] in monomials:
                return True
    return False


def _normal_words(q: SBQuiver, monomials, max_len):
    """Paths of length <= max_len with no monomial generator as a subword."""
    lengths = sorted({len(m) for m in monomials})
    words = [()]
    layer = [(a.id,) for a in q.arrows]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            if _contains_any(w[-lengths[-1]:] if lengths else w, monomials, lengths):
                continue
            words.append(w)
            last = q.head(w[-1])
            for b in q.out_arrows(last):
                nxt.append(w + (b,))
        layer = nxt
    return words


def _rank(rows: list[dict]) -> int:
    """Rank over Q of sparse integer rows (dict column -> value)."""
    pivots = {}
    rank = 0
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v}
        while r:
            col = min(r, key=repr)
            if col in pivots:
                p = pivots[col]
                f = r[col] / p[col]
                for k, v in p.items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            else:
                pivots[col] = r
                rank += 1
                break
    return rank


def _quotient_dims(q: SBQuiver, max_len: int) -> dict:
    monomials, binomials = _relations(q)
    lengths = sorted({len(m) for m in monomials})
    words = _normal_words(q, monomials, max_len)
    start = {}
    end = {}
    for w in words:
        if w:
            start[w], end[w] = q.tail(w[0]), q.head(w[-1])
    rel_rows: dict = {}
    # u * (w1 - w2) * v with u, v normal words, both terms within the bound
    for w1, w2 in binomials:
        i = q.tail(w1[0])
        for u in words:
            if u and end[u] != i:
                continue
            for v in words:
                if v and start[v] != i:
                    continue
                L = len(u) + len(v) + max(len(w1), len(w2))
                if L > max_len:
                    continue
                row = {}
                for term, sign in ((u + w1 + v, 1), (u + w2 + v, -1)):
                    if not _contains_any(term, monomials, lengths):
                        row[term] = row.get(term, 0) + sign
                if any(row.values()):
                    a = u[0] if u else w1[0]
                    z = v[-1] if v else w1[-1]
                    key = (q.tail(a), q.head(z))
                    rel_rows.setdefault(key, []).append(row)
    dims = {}
    for i in q.vertices:
        for j in q.vertices:
            count = sum(1 for w in words if w and start[w] == i and end[w] == j)
            if i == j:
                count += 1
            dims[(i, j)] = count - _rank(rel_rows.get((i, j), []))
    return dims


def oracle_quotient(q: SBQuiver, max_len: int | None = None) -> np.ndarray:
    """``dim e_i A e_j`` by enumeration of paths and exact elimination.

    Paths are enumerated up to ``max_len``, discarding those containing a
    monomial generator; the binomial generators, multiplied on both sides
    by surviving paths, are reduced by Gaussian elimination over the
    rationals.  Raises :class:`StructureError` when the dimensions at
    ``max_len - 1`` and ``max_len`` differ (bound too small).
    """
    _require_nontrivial(q)
    need = 2 * max(c.mult * len(c) for c in q.cycles)
    if max_len is None:
        max_len = need
    if max_len < 2:
        raise StructureError("max_len must be at least 2")
    hi = _quotient_dims(q, max_len)
    lo = _quotient_dims(q, max_len - 1)
    if hi != lo:
        raise StructureError(f"dimensions did not stabilize at max_len={max_len}")
    index = {v: k for k, v in enumerate(q.vertices)}
    n = len(q.vertices)
    C = np.zeros((n, n), dtype=np.int64)
    for (i, j), d in hi.items():
        C[index[i], index[j]] = d
    return C


# ---------------------------------------------------------------------------
# the module e_i A / e_i A (1 - e_i) A


@dataclass(frozen=True)
class CombinatorialModule:
    """A module with a basis of paths and a partial right action by arrows.

    ``action[(b, arrow)]`` is the index of ``b * arrow`` in ``basis``;
    missing keys mean the product is zero.
    """

    basis: tuple
    action: dict = field(default_factory=dict)

    def dim(self) -> int:
        return len(self.basis)


def local_module(q: SBQuiver, i):
    """``(M, omega_top)`` for ``M = e_i A / e_i A (1 - e_i) A``.

    ``omega_top`` lists (sorted) the end vertices of the minimal generators
    of the kernel of ``P_i -> M``; these are the summands of the
    degree-0 term of the Okuyama-Rickard complex at ``i``.

    A prefix of a maximal walk lies in the kernel once it has left ``i``,
    so each walk contributes one generator: its first arrow ending away
    from ``i``.  The socle is in the kernel as soon as one walk leaves ``i``
    and is then generated by that walk's longest proper prefix.
    """
    _require_nontrivial(q)
    q.check_vertex(i)
    walks = maximal_walks(q, i)
    tops = []
    for w in walks:
        for a in w[:-1]:
            if q.head(a) != i:
                tops.append(q.head(a))
                break
    socle_in_kernel = any(q.head(a) != i for w in walks for a in w)
    elems = _vertex_basis(q, i, walks)
    keep = [
        b for b in elems
        if not (socle_in_kernel if b.socle else any(q.head(a) != i for a in b.arrows))
    ]
    pos = {(b.arrows, b.socle): n for n, b in enumerate(keep)}
    socle_pos = pos.get((walks[0], True))
    action = {}
    for n, b in enumerate(keep):
        if b.socle:
            continue
        for a in q.out_arrows(b.end):
            if b.arrows and q.next_arrow(b.arrows[-1]) != a:
                continue
            target = b.arrows + (a,)
            t = pos.get((target, False))
            if t is None and len(target) == q.mult_of(a) * len(q.cycles[q.cycle_of(a)]):
                t = socle_pos
            if t is not None:
                action[(n, a)] = t
    M = CombinatorialModule(tuple(keep), action)
    return M, sorted(tops, key=sort_key)
