"""Exhaustive and random generation of Brauer graphs and SB quivers.

Connected ribbon graphs with ``n`` edges are grown from those with
``n - 1`` edges by adding either a pendant edge in some corner or an edge
joining two corners (possibly the same one).  Every connected ribbon graph
arises this way: delete a non-bridge edge, or a leaf edge of a tree.
Isomorphism classes are kept via :func:`ribbon_canonical`; multiplicities
are then assigned up to the automorphism group of the underlying graph.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .canonical import _encode_from, ribbon_canonical
from .correspondence import brauer_quiver
from .structures import BrauerGraph, graph_from_ribbon

Ribbon = tuple  # (succ tuple, partner tuple) on half-edges 0..2n-1


def _insert_after(succ: list, h: int, new: int):
    succ[new] = succ[h]
    succ[h] = new


def _grow(succ: tuple, partner: tuple):
    n = len(succ)
    p, q = n, n + 1
    for h in range(n):
        # pendant edge in the corner after h
        s = list(succ) + [None, None]
        pa = list(partner) + [q, p]
        _insert_after(s, h, p)
        s[q] = q
        yield tuple(s), tuple(pa)
        # edge between the corners after h and after k
        for k in range(h, n):
            s = list(succ) + [None, None]
            _insert_after(s, h, p)
            _insert_after(s, k if k != h else p, q)
            yield tuple(s), tuple(pa)


def _key(r: Ribbon) -> bytes:
    succ, partner = r
    n = len(succ)
    return ribbon_canonical(dict(enumerate(succ)), dict(enumerate(partner)), dict.fromkeys(range(n), 1))


def _relabel(r: Ribbon) -> Ribbon:
    succ, partner = r
    n = len(succ)
    d_s, d_p, ones = dict(enumerate(succ)), dict(enumerate(partner)), dict.fromkeys(range(n), 1)
    best = min(_encode_from(h, d_s, d_p, ones) for h in range(n))
    return tuple(x[0] for x in best), tuple(x[1] for x in best)


@lru_cache(maxsize=None)
def ribbon_graphs(n_edges: int) -> tuple:
    """All connected ribbon graphs with ``n_edges`` edges, up to isomorphism."""
    if n_edges < 1:
        return ()
    if n_edges == 1:
        # a single edge between two vertices, and a single loop
        return (((0, 1), (1, 0)), ((1, 0), (1, 0)))
    seen = {}
    for r in ribbon_graphs(n_edges - 1):
        for g in _grow(*r):
            k = _key(g)
            if k not in seen:
                seen[k] = _relabel(g)
    return tuple(seen[k] for k in sorted(seen))


def _vertex_orbits(succ: tuple) -> list[tuple]:
    seen, out = set(), []
    for h in range(len(succ)):
        if h in seen:
            continue
        orb, x = [h], succ[h]
        seen.add(h)
        while x != h:
            orb.append(x)
            seen.add(x)
            x = succ[x]
        out.append(tuple(orb))
    return out


def _automorphisms(succ: tuple, partner: tuple) -> list[dict]:
    """Half-edge permutations commuting with succ and partner."""
    n = len(succ)
    d_s, d_p, ones = dict(enumerate(succ)), dict(enumerate(partner)), dict.fromkeys(range(n), 1)
    base = _encode_from(0, d_s, d_p, ones)
    autos = []
    for h in range(n):
        if _encode_from(h, d_s, d_p, ones) != base:
            continue
        # map the BFS order from 0 onto the BFS order from h
        m = {0: h}
        stack = [0]
        while stack:
            x = stack.pop()
            for f in (succ, partner):
                y, z = f[x], f[m[x]]
                if y not in m:
                    m[y] = z
                    stack.append(y)
        autos.append(m)
    return autos


def brauer_graphs(n_edges: int, mults=(1, 2, 3), include_trivial=False):
    """Yield every Brauer graph with ``n_edges`` edges and multiplicities in ``mults``."""
    for succ, partner in ribbon_graphs(n_edges):
        orbits = _vertex_orbits(succ)
        vindex = {h: k for k, o in enumerate(orbits) for h in o}
        perms = []
        for m in _automorphisms(succ, partner):
            perms.append([vindex[m[o[0]]] for o in orbits])
        for assign in itertools.product(mults, repeat=len(orbits)):
            if any(tuple(assign[p[k]] for k in range(len(orbits))) < assign for p in perms):
                continue
            mult = {h: assign[vindex[h]] for h in range(len(succ))}
            g = graph_from_ribbon(dict(enumerate(succ)), dict(enumerate(partner)), mult)
            if not include_trivial and g.is_trivial:
                continue
            yield g


def all_brauer_graphs(max_edges: int, mults=(1, 2, 3), include_trivial=False):
    for n in range(1, max_edges + 1):
        yield from brauer_graphs(n, mults, include_trivial)


def all_sb_quivers(max_vertices: int, mults=(1, 2, 3)):
    """Every non-trivial SB quiver with at most ``max_vertices`` vertices."""
    for g in all_brauer_graphs(max_vertices, mults):
        yield brauer_quiver(g)


# -- random instances -----------------------------------------------------------


def random_ribbon(n_edges: int, rng: random.Random) -> Ribbon:
    succ, partner = ((0, 1), (1, 0)) if rng.random() < 0.7 else ((1, 0), (1, 0))
    for _ in range(n_edges - 1):
        options = list(_grow(succ, partner))
        succ, partner = options[rng.randrange(len(options))]
    return succ, partner


def random_brauer_graph(n_edges: int, rng: random.Random, mults=(1, 2, 3),
                        p_exceptional: float = 0.3) -> BrauerGraph:
    while True:
        succ, partner = random_ribbon(n_edges, rng)
        orbits = _vertex_orbits(succ)
        mult = {}
        for o in orbits:
            m = rng.choice(mults[1:]) if len(mults) > 1 and rng.random() < p_exceptional else mults[0]
            for h in o:
                mult[h] = m
        # random relabelling of half-edges keeps ids from carrying structure
        perm = list(range(len(succ)))
        rng.shuffle(perm)
        s = {perm[h]: perm[succ[h]] for h in range(len(succ))}
        p = {perm[h]: perm[partner[h]] for h in range(len(succ))}
        mu = {perm[h]: mult[h] for h in range(len(succ))}
        g = graph_from_ribbon(s, p, mu)
        if not g.is_trivial:
            return g


def random_sb_quiver(n_vertices: int, rng: random.Random, **kw):
    return brauer_quiver(random_brauer_graph(n_vertices, rng, **kw))


def is_tree(g: BrauerGraph) -> bool:
    return len(g.vertices) == len(g.edges) + 1
