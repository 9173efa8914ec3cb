"""Canonical encodings and isomorphism tests.

Both structures reduce to the same permutation data: a set of half-edges
with a "next around the vertex" permutation, a fixed-point-free pairing
into edges, and a multiplicity per half-edge.  For an SB quiver the
half-edges are the arrows (``na`` plays the role of the cyclic order, and
two arrows pair up when they share a tail); a vertex visited only once gets
a phantom half-edge fixed by the cyclic permutation, carrying multiplicity 1.

Isomorphisms must commute with both permutations and preserve
multiplicities.  Because the data is connected, an isomorphism is pinned
down by the image of one half-edge, so trying every root and keeping the
smallest breadth-first relabeling is an exact canonical form.  The search
is pruned to roots whose local signature (multiplicity, vertex size) is
minimal.
"""

from __future__ import annotations

from collections import deque

from .structures import BrauerGraph, SBQuiver, sort_key


def _orbit_len(succ, h):
    n, x = 1, succ[h]
    while x != h:
        n += 1
        x = succ[x]
    return n


def _encode_from(root, succ, partner, mult):
    label = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in (succ[x], partner[x]):
            if y not in label:
                label[y] = len(order)
                order.append(y)
                queue.append(y)
    if len(order) != len(succ):
        raise ValueError("structure is not connected")
    return tuple((label[succ[x]], label[partner[x]], mult[x]) for x in order)


def ribbon_canonical(succ: dict, partner: dict, mult: dict) -> bytes:
    halves = list(succ)
    sig = {h: (mult[h], _orbit_len(succ, h), mult[partner[h]],
               _orbit_len(succ, partner[h])) for h in halves}
    best_sig = min(sig.values())
    best = None
    for h in halves:
        if sig[h] != best_sig:
            continue
        enc = _encode_from(h, succ, partner, mult)
        if best is None or enc < best:
            best = enc
    return repr(best).encode()


def sb_ribbon(q: SBQuiver):
    """Permutation data of an SB quiver (phantom half-edges are ``("leaf", v)``)."""
    succ, partner, mult = {}, {}, {}
    for c in q.cycles:
        w = c.arrows
        for k, a in enumerate(w):
            succ[a] = w[(k + 1) % len(w)]
            mult[a] = c.mult
    for v in q.vertices:
        outs = q.out_arrows(v)
        if len(outs) == 2:
            a, b = outs
            partner[a], partner[b] = b, a
        elif len(outs) == 1:
            leaf = ("leaf", v)
            succ[leaf] = leaf
            mult[leaf] = 1
            partner[leaf], partner[outs[0]] = outs[0], leaf
    return succ, partner, mult


def canonical_form(x) -> bytes:
    """Encoding equal for two inputs exactly when they are isomorphic.

    Isomorphism preserves orientation: a Brauer graph and its opposite
    usually get different encodings.
    """
    if isinstance(x, SBQuiver):
        if x.is_trivial:
            return b"sb:trivial"
        return b"sb:" + ribbon_canonical(*sb_ribbon(x))
    if isinstance(x, BrauerGraph):
        mult = {h: x.mult(v) for h, v in x.half_vertex.items()}
        return b"bg:" + ribbon_canonical(x.succ, x.partner, mult)
    raise TypeError(f"no canonical form for {type(x).__name__}")


def isomorphic(x, y) -> bool:
    return canonical_form(x) == canonical_form(y)


def relabel_sb(q: SBQuiver, vmap: dict, amap: dict) -> SBQuiver:
    """Rename vertices and arrows (both maps must be bijective)."""
    tails = {amap[a.id]: vmap[a.tail] for a in q.arrows}
    return SBQuiver.from_cycles(
        [vmap[v] for v in q.vertices], tails,
        [[amap[a] for a in c.arrows] for c in q.cycles],
        [c.mult for c in q.cycles],
    )


def relabel_graph(g: BrauerGraph, vmap: dict, emap: dict, hmap: dict) -> BrauerGraph:
    from .structures import BGVertex, Edge

    return BrauerGraph(
        tuple(BGVertex(vmap[v.id], v.mult, tuple(hmap[h] for h in v.order))
              for v in g.vertices),
        tuple(Edge(emap[e.id], tuple(hmap[h] for h in e.half_edges)) for e in g.edges),
    )


def normalize_graph(g: BrauerGraph) -> BrauerGraph:
    """Relabel a Brauer graph canonically (vertices, edges and half-edges by integers).

    Isomorphic inputs give structurally equal outputs; edge names are lost.
    """
    mult = {h: g.mult(v) for h, v in g.half_vertex.items()}
    succ, partner = g.succ, g.partner
    halves = list(succ)
    best = min(_encode_from(h, succ, partner, mult) for h in halves)
    from .structures import graph_from_ribbon

    n = len(best)
    nsucc = {k: best[k][0] for k in range(n)}
    npartner = {k: best[k][1] for k in range(n)}
    nmult = {k: best[k][2] for k in range(n)}
    return graph_from_ribbon(nsucc, npartner, nmult)


__all__ = [
    "canonical_form", "isomorphic", "relabel_sb", "relabel_graph",
    "normalize_graph", "ribbon_canonical", "sb_ribbon", "sort_key",
]
