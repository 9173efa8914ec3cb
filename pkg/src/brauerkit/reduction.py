"""Reduction of an SB quiver to double-star normal form by right mutations.

The moves (R1)-(R3) all keep track of a distinguished cycle ``C0``.  After
every mutation the tracked cycle is re-identified through the cycle map of
:func:`mutate_right_tracked`: the arrows that carried ``C0`` still sit in the
word that used to be ``C0``.

:func:`to_double_star` follows the constructive proof: first (R1) until
``C0`` covers every vertex, then (R2) on the non-loop cycles of smallest
multiplicity, inserting (R3) where the side condition of (R2) fails.  When
no move makes progress it falls back to a breadth-first search over right
mutations for a quiver meeting the target conditions, so the log stays a
plain replayable sequence of right mutations.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .canonical import canonical_form
from .correspondence import brauer_graph_of
from .mutation import mutate_right_tracked, mutation_case
from .structures import BrauerGraph, SBQuiver, StructureError, sort_key, validate


class ReductionError(StructureError):
    pass


@dataclass(frozen=True)
class LogEntry:
    step: int
    vertex: object
    case: str  # "<rule>/<mutation case>", e.g. "R1/QM"
    tracked: int  # index of C0 after the step

    def to_dict(self) -> dict:
        return {"step": self.step, "vertex": self.vertex, "case-tag": self.case,
                "tracked-cycle": self.tracked}


def sort_cycles(q: SBQuiver) -> SBQuiver:
    """Copy of ``q`` with cycles in weakly decreasing multiplicity (stable)."""
    order = sorted(range(len(q.cycles)), key=lambda k: -q.cycles[k].mult)
    tails = {a.id: a.tail for a in q.arrows}
    return SBQuiver.from_cycles(
        q.vertices, tails, [q.cycles[k].arrows for k in order], [q.cycles[k].mult for k in order]
    )


def _on(q: SBQuiver, k) -> set:
    return q.cycle_vertices(k)


def _step(q: SBQuiver, i, c0: int, rule: str, log: list, others=()):
    """Mutate at ``i``; returns the new quiver and the new indices of
    ``c0`` and of each cycle in ``others`` (``None`` once a cycle is gone)."""
    case = mutation_case(q, i)
    r = mutate_right_tracked(q, i, check=False)
    if c0 not in r.cycle_map:
        raise ReductionError(f"tracked cycle vanished when mutating at {i!r}")
    new0 = r.cycle_map[c0]
    log.append(LogEntry(len(log), i, f"{rule}/{case}", new0))
    return r.quiver, new0, [r.cycle_map.get(k) for k in others]


# -- (R1) ---------------------------------------------------------------------


def _r1_candidate(q: SBQuiver, c0: int):
    covered = _on(q, c0)
    for i in sorted(set(q.vertices) - covered, key=sort_key):
        if mutation_case(q, i) == "identity":
            continue
        if any(q.head(a) in covered for a in q.out_arrows(i)):
            return i
    return None


def apply_r1(q: SBQuiver, c0: int, log: list | None = None):
    """One (R1) step: absorb a vertex adjacent to ``C0`` into it."""
    log = [] if log is None else log
    i = _r1_candidate(q, c0)
    if i is None:
        raise ReductionError("R1 complete")
    q2, new0, _ = _step(q, i, c0, "R1", log)
    if i not in _on(q2, new0):
        raise ReductionError(f"R1 at {i!r} did not bring it onto C0")
    return q2, log


# -- (R2) ---------------------------------------------------------------------


def _other_out(q: SBQuiver, v, a):
    rest = [b for b in q.out_arrows(v) if b != a]
    return rest[0] if rest else None


def _r2_start(q: SBQuiver, c0: int, c: int):
    """An arrow ``gamma_1`` of ``C`` from which (R2) may start, or ``None``."""
    for g in sorted(q.cycles[c].arrows, key=sort_key):
        i1, i_last = q.tail(g), q.tail(q.prev_arrow(g))
        if i1 == q.head(g):
            continue
        alpha = _other_out(q, i1, g)
        if alpha is None or q.cycle_of(alpha) != c0:
            continue
        h = q.head(alpha)
        if q.visits(h) == 1:
            return g
        off_c0 = [b for b in q.out_arrows(h) if q.cycle_of(b) != c0]
        if off_c0 and h != i_last:
            return g
    return None


def _r2_check_pre(q: SBQuiver, c0: int, c: int):
    if set(q.vertices) - _on(q, c0):
        raise ReductionError("R2 needs every vertex on C0")
    if c == c0:
        raise ReductionError("R2 needs a cycle other than C0")
    if len(q.cycles[c]) == 1:
        raise ReductionError("R2 inapplicable to a loop")


def apply_r2(q: SBQuiver, c0: int, c: int, log: list | None = None):
    """(R2) for the cycle ``C``: mutate along ``C`` until it is a loop or gone."""
    log = [] if log is None else log
    _r2_check_pre(q, c0, c)
    g = _r2_start(q, c0, c)
    if g is None:
        raise ReductionError("R2 side condition fails for every start of C")
    word = list(q.cycles[c].arrows)
    k = word.index(g)
    word = word[k:] + word[:k]
    path = [q.tail(a) for a in word]  # i_1, ..., i_l
    mult = q.cycles[c].mult
    for v in path[:-1]:
        if c is None or len(q.cycles[c]) == 1:
            break
        q, c0, (c,) = _step(q, v, c0, "R2", log, (c,))
    i_last = path[-1]
    if set(q.vertices) - _on(q, c0):
        raise ReductionError("R2 left a vertex off C0")
    loops = [k for k in range(len(q.cycles)) if k != c0 and len(q.cycles[k]) == 1
             and i_last in _on(q, k)]
    if mult > 1 and not any(q.cycles[k].mult == mult for k in loops):
        raise ReductionError(f"R2 left no loop of multiplicity {mult} at {i_last!r}")
    if mult == 1 and q.visits(i_last) != 1:
        raise ReductionError(f"R2 left {i_last!r} on a second cycle")
    return q, log


# -- (R3) ---------------------------------------------------------------------


def _loop_at(q: SBQuiver, i, c0: int):
    for a in q.out_arrows(i):
        if q.head(a) == i and q.cycle_of(a) != c0 and len(q.cycles[q.cycle_of(a)]) == 1:
            return a
    return None


def apply_r3(q: SBQuiver, c0: int, i, log: list | None = None):
    """(R3): slide ``i`` along ``C0`` past its successor, keeping its loop."""
    log = [] if log is None else log
    if set(q.vertices) - _on(q, c0):
        raise ReductionError("R3 needs every vertex on C0")
    if _loop_at(q, i, c0) is None:
        raise ReductionError(f"no loop outside C0 at {i!r}")
    into = [a for a in q.in_arrows(i) if q.cycle_of(a) == c0]
    out = [a for a in q.out_arrows(i) if q.cycle_of(a) == c0]
    h, j = q.tail(into[0]), q.head(out[0])
    for _ in range(2):
        q, c0, _ = _step(q, i, c0, "R3", log)
    if set(q.vertices) - _on(q, c0):
        raise ReductionError("R3 left a vertex off C0")
    if not any(q.head(a) == j and q.cycle_of(a) == c0 for a in q.out_arrows(h)):
        raise ReductionError(f"R3 produced no arrow {h!r}->{j!r} in C0")
    if _loop_at(q, i, c0) is None:
        raise ReductionError(f"R3 lost the loop at {i!r}")
    return q, log


# -- targets ------------------------------------------------------------------


def _arrange(q: SBQuiver, c0: int):
    """Order the cycles as ``C'_0, C'_1, ...``: C0 first, then by decreasing
    multiplicity, non-loops ahead of loops of the same multiplicity."""
    rest = [k for k in range(len(q.cycles)) if k != c0]
    rest.sort(key=lambda k: (-q.cycles[k].mult, len(q.cycles[k]) == 1, k))
    return [c0] + rest


def target_violations(q: SBQuiver, c0: int, mults: list) -> list[str]:
    """Which of the conditions (1)-(4) fail for ``q`` with ``C'_0 = c0``;
    ``mults`` are the input multiplicities in decreasing order."""
    out = []
    if set(q.vertices) - _on(q, c0):
        out.append("(1) some vertex is not on C'_0")
    s = len(mults) - 1
    if s < 2 or mults[2] == 1:
        v_ok = lambda v: v <= 1  # noqa: E731
    else:
        v_want = max(k for k in range(2, s + 1) if mults[k] != 1)
        v_ok = lambda v: v == v_want  # noqa: E731
    order = _arrange(q, c0)
    v = len(order) - 1
    if not v_ok(v):
        out.append(f"(2) v = {v}")
    if [q.cycles[k].mult for k in order] != mults[:v + 1]:
        out.append("(3) multiplicities differ")
    if any(len(q.cycles[k]) != 1 for k in order[2:]):
        out.append("(4) C'_l for l >= 2 is not a loop")
    return out


def _find_target(q: SBQuiver, mults: list):
    for k in sorted(range(len(q.cycles)), key=lambda k: (-q.cycles[k].mult, k)):
        if q.cycles[k].mult == mults[0] and not target_violations(q, k, mults):
            return k
    return None


# -- driver ---------------------------------------------------------------------


def step_budget(q: SBQuiver) -> int:
    env = os.environ.get("BRAUERKIT_BUDGET")
    if env:
        return int(env)
    return 50 * len(q.arrows) ** 2


@dataclass(frozen=True)
class ReductionResult:
    quiver: SBQuiver
    log: tuple
    tracked: int  # index of C'_0
    start: SBQuiver  # the input with cycles sorted; the log replays from here
    used_search: bool = False


def _reduce_candidates(q: SBQuiver, c0: int):
    """Non-loop cycles to shrink, the one to keep as ``C'_1`` excluded."""
    order = _arrange(q, c0)
    keep = order[1] if len(order) > 1 else None
    cands = [k for k in order[1:] if len(q.cycles[k]) > 1 and k != keep]
    # smallest multiplicity first, the later cycle among equals
    return sorted(cands, key=lambda k: (q.cycles[k].mult, -k))


def to_double_star(q: SBQuiver, budget: int | None = None) -> ReductionResult:
    problems = validate(q)
    if problems:
        raise StructureError("invalid SB quiver: " + "; ".join(problems))
    if q.is_trivial:
        raise StructureError("the trivial SB quiver is already reduced")
    start = sort_cycles(q)
    mults = [c.mult for c in start.cycles]
    budget = step_budget(start) if budget is None else budget
    q, c0, log = start, 0, []
    seen = set()
    while True:
        if len(log) > budget:
            raise ReductionError(f"step budget of {budget} mutations exceeded")
        if not target_violations(q, c0, mults):
            return ReductionResult(q, tuple(log), c0, start)
        # the driver is deterministic, so a repeated labelled state is a loop
        state = (q, c0)
        if state in seen:
            break
        seen.add(state)
        try:
            if _r1_candidate(q, c0) is not None:
                q, _ = apply_r1(q, c0, log)
                c0 = log[-1].tracked
                continue
            if set(q.vertices) - _on(q, c0):
                break
            moved = _advance(q, c0, log)
            if moved is None:
                break
            q, c0 = moved
        except ReductionError:
            break
    q, c0, tail = _search(q, mults, budget - len(log))
    log.extend(LogEntry(len(log) + n, e.vertex, e.case, e.tracked) for n, e in enumerate(tail))
    return ReductionResult(q, tuple(log), c0, start, used_search=True)


def _c0_walk(q: SBQuiver, c0: int) -> list:
    return [q.tail(a) for a in q.cycles[c0].arrows]


def _leaf_mult(q: SBQuiver, v, c0: int) -> int:
    a = _loop_at(q, v, c0)
    return 1 if a is None else q.cycles[q.cycle_of(a)].mult


def to_star(q: SBQuiver, budget: int | None = None) -> ReductionResult:
    """Normal form of a generalized Brauer tree: the double star of
    :func:`to_double_star`, its leaves then sorted around the centre by
    (R3) moves into weakly increasing multiplicity."""
    r = to_double_star(q, budget)
    q, c0, log = r.quiver, r.tracked, list(r.log)
    walk = _c0_walk(q, c0)
    if len(set(walk)) != len(walk) or len(set(walk)) != len(q.vertices) or any(
        len(c) != 1 for k, c in enumerate(q.cycles) if k != c0
    ):
        raise ReductionError("not a generalized Brauer tree")
    budget = step_budget(r.start) if budget is None else budget
    ms = [_leaf_mult(q, v, c0) for v in walk]
    done = len(walk) <= 2  # two leaves have one cyclic order
    while not done:
        done = True
        for p in range(len(walk) - 1):
            if ms[p] <= ms[p + 1]:
                continue
            if len(log) + 2 > budget:
                raise ReductionError(f"step budget of {budget} mutations exceeded")
            q, _ = apply_r3(q, c0, walk[p], log)
            c0 = log[-1].tracked
            walk[p], walk[p + 1], ms[p], ms[p + 1] = walk[p + 1], walk[p], ms[p + 1], ms[p]
            done = False
    now = _c0_walk(q, c0)
    k = now.index(walk[0])
    if now[k:] + now[:k] != walk:
        raise ReductionError("leaf order around the centre is not the expected one")
    return ReductionResult(q, tuple(log), c0, r.start, r.used_search)


def _advance(q: SBQuiver, c0: int, log: list):
    for c in _reduce_candidates(q, c0):
        if _r2_start(q, c0, c) is not None:
            mark = len(log)
            try:
                q2, _ = apply_r2(q, c0, c, log)
            except ReductionError:
                del log[mark:]
                continue
            return q2, log[-1].tracked
        # (R3) at the loop vertices that block the side condition
        for g in sorted(q.cycles[c].arrows, key=sort_key):
            alpha = _other_out(q, q.tail(g), g)
            if alpha is None:
                continue
            h = q.head(alpha)
            if _loop_at(q, h, c0) is not None:
                mark = len(log)
                try:
                    q2, _ = apply_r3(q, c0, h, log)
                except ReductionError:
                    del log[mark:]
                    continue
                return q2, log[-1].tracked
    return None


def _search(q: SBQuiver, mults: list, budget: int):
    """Shortest right-mutation sequence from ``q`` to a target quiver."""
    found = _find_target(q, mults)
    if found is not None:
        return q, found, []
    seen = {canonical_form(q)}
    queue = deque([(q, ())])
    while queue:
        cur, path = queue.popleft()
        if len(path) >= budget:
            raise ReductionError(f"step budget of {budget} mutations exceeded in search")
        for i in sorted(cur.vertices, key=sort_key):
            nxt = mutate_right_tracked(cur, i, check=False).quiver
            key = canonical_form(nxt)
            if key in seen:
                continue
            seen.add(key)
            p = path + ((i, mutation_case(cur, i)),)
            k = _find_target(nxt, mults)
            if k is not None:
                return nxt, k, [LogEntry(n, v, f"search/{c}", k) for n, (v, c) in enumerate(p)]
            queue.append((nxt, p))
    raise ReductionError("no target reachable by right mutations")


def replay(start: SBQuiver, log) -> SBQuiver:
    """Apply the vertices of ``log`` in order by right mutation."""
    q = start
    for e in log:
        q = mutate_right_tracked(q, e.vertex if isinstance(e, LogEntry) else e["vertex"],
                                 check=False).quiver
    return q


# -- double stars ---------------------------------------------------------------


def double_star_centres(g: BrauerGraph):
    """Every ``(center, vice-center)`` pair making ``g`` a double star."""
    out = []
    vids = [v.id for v in g.vertices]
    ends = [g.endpoints(e.id) for e in g.edges]
    for c in vids:
        if any(c not in pair for pair in ends):
            continue
        for u in vids:
            if u == c:
                continue
            ok = all(
                a == b == c
                or {a, b} == {c, u}
                or (g.valence(b if a == c else a) == 1)
                for a, b in ends
            )
            if ok:
                out.append((c, u))
        if len(vids) == 1:
            out.append((c, None))
    return out


def is_double_star(g: BrauerGraph) -> tuple[bool, bool]:
    """(double-star shape, multiplicity condition for some choice of centres)."""
    pairs = double_star_centres(g)
    if not pairs:
        return False, False
    ms = sorted((v.mult for v in g.vertices), reverse=True)
    for c, u in pairs:
        if g.mult(c) != ms[0]:
            continue
        if u is None or g.mult(u) == ms[1]:
            return True, True
    return True, False
