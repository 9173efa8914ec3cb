"""Right/left mutation of SB quivers and right/left flip of Brauer graphs.

Both operations move the two ends of ``i`` one step along the cyclic
orders.  On a Brauer graph, an end ``a`` of edge ``i`` at a vertex of
valence >= 2 is detached and re-attached right after ``partner(succ(a))``,
i.e. at the far end of the edge ``e_v(i)`` that followed it.  An end sitting
alone at its vertex stays.  When ``succ(a)`` is the other end of ``i`` (two
adjacent ends of a graph loop), ``a`` travels with it and lands right in
front of it.

On an SB quiver the ends of ``i`` are the arrows leaving ``i``, a vertex of
the graph is a cycle, and ``partner(succ(a))`` is the other arrow leaving
``head(a)``.  Relocating arrows this way produces exactly the arrows of
(QM1)-(QM3): an arrow ``alpha: h -> i`` loses its successor and becomes
``x: h -> j``; the arrow ``delta`` leaving ``h`` next to ``beta: i -> h``
receives ``beta`` behind it, giving ``x: h -> i`` and ``y: i -> j``; a
vertex ``h`` visited once grows the new 2-cycle ``i -> h -> i``.  Arrows
whose endpoints change are renamed with fresh integer ids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .structures import (
    BGVertex, BrauerGraph, SBQuiver, StructureError, fresh_ids, multiplex_pair,
    opposite_graph, opposite_sb, sort_key, validate, validate_graph,
)


@dataclass(frozen=True)
class MutationResult:
    quiver: SBQuiver
    cycle_map: dict  # old cycle index -> new cycle index (absent when dropped)
    case: str


def mutation_case(q: SBQuiver, i) -> str:
    """Which definition applies at ``i``: ``"QM"``, ``"QM'"`` or ``"identity"``."""
    pair = multiplex_pair(q, i)
    if pair is None:
        return "QM"
    alpha, beta = pair
    beta_next = q.next_arrow(beta)
    j_prime = q.tail(q.prev_arrow(alpha))
    h = q.head(beta_next)
    # the two ends of i must sit on different cycles; otherwise the arrows
    # still move (checked against the alternating Cartan sum)
    if j_prime == h and q.cycle_of(alpha) != q.cycle_of(beta_next):
        return "identity"
    return "QM'"


def _check_input(q: SBQuiver, i):
    problems = validate(q)
    if problems:
        raise StructureError("invalid SB quiver: " + "; ".join(problems))
    if q.is_trivial:
        raise StructureError("mutation needs at least one arrow")
    q.check_vertex(i)


def mutate_right_tracked(q: SBQuiver, i, check: bool = True) -> MutationResult:
    """Right mutation at ``i`` plus the fate of every old cycle.

    ``check=False`` skips validation of ``q`` (for callers iterating on
    quivers they produced themselves).
    """
    if check:
        _check_input(q, i)
    else:
        q.check_vertex(i)
    case = mutation_case(q, i)
    identity = MutationResult(q, {k: k for k in range(len(q.cycles))}, case)
    if case == "identity":
        return identity

    ends = sorted(q.out_arrows(i), key=sort_key)
    words = [list(c.arrows) for c in q.cycles]
    mults = [c.mult for c in q.cycles]
    origin = list(range(len(q.cycles)))
    tails = {a.id: a.tail for a in q.arrows}

    # where each end goes, decided on the original quiver
    plan = {}
    for a in ends:
        c = q.cycles[q.cycle_of(a)]
        nxt = q.next_arrow(a)
        if len(c) == 1:
            continue
        if nxt in ends:
            if q.next_arrow(nxt) == a:
                return identity  # a 2-cycle made of the two ends only
            plan[a] = ("before", nxt)
        else:
            h = q.tail(nxt)
            others = [d for d in q.out_arrows(h) if d != nxt]
            plan[a] = ("after", others[0]) if others else ("leaf", h)
    if not plan:
        return identity

    used = set(tails)
    for a in plan:
        words[q.cycle_of(a)].remove(a)
    for a, (kind, ref) in sorted(plan.items(), key=lambda t: sort_key(t[0])):
        if kind == "after":
            w = next(w for w in words if ref in w)
            w.insert(w.index(ref) + 1, a)
        elif kind == "leaf":
            (z,) = fresh_ids(used, 1)
            used.add(z)
            tails[z] = ref
            words.append([z, a])
            mults.append(1)
            origin.append(None)
    for a, (kind, ref) in plan.items():
        if kind == "before":
            w = next(w for w in words if ref in w)
            w.insert(w.index(ref), a)

    keep = [k for k, w in enumerate(words) if not (len(w) == 1 and mults[k] == 1)]
    words = [words[k] for k in keep]
    mults = [mults[k] for k in keep]
    cycle_map = {origin[k]: n for n, k in enumerate(keep) if origin[k] is not None}

    moved = _rename_changed(q, tails, words)
    words = [[moved.get(a, a) for a in w] for w in words]
    tails = {moved.get(a, a): t for a, t in tails.items()}
    live = {a for w in words for a in w}
    tails = {a: t for a, t in tails.items() if a in live}
    out = SBQuiver.from_cycles(q.vertices, tails, words, mults)
    return MutationResult(out, cycle_map, case)


def _rename_changed(q: SBQuiver, tails: dict, words) -> dict:
    """Fresh ids for arrows that are new or whose head moved."""
    head = {}
    for w in words:
        for k, a in enumerate(w):
            head[a] = tails[w[(k + 1) % len(w)]]
    old = {a.id: a.head for a in q.arrows}
    changed = [a for a in head if old.get(a, object()) != head[a]]
    stable = set(head) - set(changed)
    ids = fresh_ids(stable, len(changed))
    return dict(zip(sorted(changed, key=sort_key), ids))


def mutate_right(q: SBQuiver, i) -> SBQuiver:
    """The right mutation of ``q`` at vertex ``i``."""
    return mutate_right_tracked(q, i).quiver


def mutate_left(q: SBQuiver, i) -> SBQuiver:
    return opposite_sb(mutate_right(opposite_sb(q), i))


def mutate_left_tracked(q: SBQuiver, i) -> MutationResult:
    r = mutate_right_tracked(opposite_sb(q), i)
    return MutationResult(opposite_sb(r.quiver), r.cycle_map, r.case)


# ---------------------------------------------------------------------------
# Brauer graphs


def flip_case(g: BrauerGraph, i) -> str:
    """Label (i)-(vii) of the local picture of the flip at edge ``i``."""
    a, b = g.edge(i).half_edges
    succ, partner, hv, he = g.succ, g.partner, g.half_vertex, g.half_edge

    def next_other(x):
        # the first half-edge after x not belonging to i
        y = succ[x]
        while he[y] == i and y != x:
            y = succ[y]
        return None if he[y] == i else y

    v, u = hv[a], hv[b]
    if v != u:
        if g.valence(v) == 1 or g.valence(u) == 1:
            return "iv"
        na, nb = next_other(a), next_other(b)
        if he[na] == he[nb]:
            return "iii"
        if hv[partner[na]] == u or hv[partner[nb]] == v:
            return "ii"
        return "i"
    nexts = [n for n in (next_other(a), next_other(b)) if n is not None]
    if len({he[n] for n in nexts}) == 2:
        far = {hv[partner[n]] for n in nexts}
        return "vi" if len(far) == 1 and far != {v} else "v"
    return "vii"


def flip_right(g: BrauerGraph, i) -> BrauerGraph:
    problems = validate_graph(g)
    if problems:
        raise StructureError("invalid Brauer graph: " + "; ".join(problems))
    if g.is_trivial:
        raise StructureError("flip needs a non-trivial Brauer graph")
    ends = g.edge(i).half_edges
    succ, partner, hv = g.succ, g.partner, g.half_vertex
    orders = {v.id: list(v.order) for v in g.vertices}

    plan = {}
    for a in ends:
        if g.valence(hv[a]) == 1:
            continue
        nxt = succ[a]
        if nxt in ends:
            if succ[nxt] == a:
                return g
            plan[a] = ("before", nxt)
        else:
            plan[a] = ("after", partner[nxt])
    for a in plan:
        orders[hv[a]].remove(a)
    for a, (kind, ref) in plan.items():
        if kind == "after":
            o = orders[hv[ref]]
            o.insert(o.index(ref) + 1, a)
    for a, (kind, ref) in plan.items():
        if kind == "before":
            o = next(o for o in orders.values() if ref in o)
            o.insert(o.index(ref), a)
    return BrauerGraph(
        tuple(BGVertex(v.id, v.mult, tuple(orders[v.id])) for v in g.vertices),
        g.edges,
    )


def flip_left(g: BrauerGraph, i) -> BrauerGraph:
    return opposite_graph(flip_right(opposite_graph(g), i))
