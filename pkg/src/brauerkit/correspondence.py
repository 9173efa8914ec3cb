"""Brauer graphs <-> SB quivers.

The Brauer quiver of a graph has one vertex per edge.  Each half-edge ``h``
at a vertex ``v`` yields the arrow ``edge(h) -> edge(succ h)`` of the cycle
``C_v`` (multiplicity ``m_v``), except when ``v`` has valence 1 and
multiplicity 1: such a vertex contributes nothing.  A valence-1 vertex of
multiplicity > 1 gives a loop cycle.
"""

from __future__ import annotations

from .structures import (
    BGVertex, BrauerGraph, Edge, SBQuiver, StructureError, sort_key,
    validate, validate_graph,
)


def brauer_quiver(g: BrauerGraph) -> SBQuiver:
    """The SB quiver ``(Q_G, C_G)``; arrows are named after half-edges."""
    if validate_graph(g):
        raise StructureError("invalid Brauer graph: " + "; ".join(validate_graph(g)))
    if g.is_trivial:
        raise StructureError("the trivial single-edge graph has no arrows")
    he = g.half_edge
    tails, words, mults = {}, [], []
    for v in g.vertices:
        if len(v.order) == 1 and v.mult == 1:
            continue
        for h in v.order:
            tails[h] = he[h]
        words.append(v.order)
        mults.append(v.mult)
    vertices = sorted((e.id for e in g.edges), key=sort_key)
    return SBQuiver.from_cycles(vertices, tails, words, mults)


def brauer_graph_of(q: SBQuiver) -> BrauerGraph:
    """Inverse of :func:`brauer_quiver` up to isomorphism.

    Cycles become vertices (numbered in cycle order), arrows become
    half-edges, and every quiver vertex visited once gets a fresh leaf
    vertex of multiplicity 1 holding its second half-edge.
    """
    problems = validate(q)
    if problems:
        raise StructureError("invalid SB quiver: " + "; ".join(problems))
    if q.is_trivial:
        (v,) = q.vertices
        return BrauerGraph(
            (BGVertex(0, 1, (("leaf", v, 0),)), BGVertex(1, 1, (("leaf", v, 1),))),
            (Edge(v, (("leaf", v, 0), ("leaf", v, 1))),),
        )
    vertices = [BGVertex(k, c.mult, c.arrows) for k, c in enumerate(q.cycles)]
    edges = []
    used = {a.id for a in q.arrows}
    for x in q.vertices:
        outs = sorted(q.out_arrows(x), key=sort_key)
        if len(outs) == 1:
            leaf = ("leaf", x)
            while leaf in used:  # arrows may carry leaf names from an earlier round trip
                leaf = ("leaf", leaf)
            vertices.append(BGVertex(len(vertices), 1, (leaf,)))
            outs.append(leaf)
        edges.append(Edge(x, tuple(outs)))
    return BrauerGraph(tuple(vertices), tuple(edges))
