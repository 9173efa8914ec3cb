"""Exhaustive and randomized checks over families of small instances.

Each ``check_*`` function returns a :class:`Census`; the test suite and the
scripts under ``scripts/`` share them.
"""

from __future__ import annotations

import random
import time
from collections import defaultdict
from dataclasses import dataclass, field

from . import fixtures
from .algebra import cartan_matrix, oracle_quotient
from .canonical import canonical_form, isomorphic
from .correspondence import brauer_graph_of, brauer_quiver
from .derived import arrow_matrix, euler_cartan, ext_table, fingerprint
from .enumerate import all_brauer_graphs, all_sb_quivers, brauer_graphs, is_tree, random_brauer_graph
from .enumerate import random_sb_quiver
from .mutation import flip_left, flip_right, mutate_left, mutate_right
from .reduction import ReductionError, is_double_star, replay, target_violations, to_double_star
from .reduction import to_star


@dataclass
class Census:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures

    def fail(self, what):
        if len(self.failures) < 20:
            self.failures.append(what)
        else:
            self.notes["more_failures"] = self.notes.get("more_failures", 0) + 1

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "".join(f", {k}={v}" for k, v in self.notes.items())
        nfail = len(self.failures) + self.notes.get("more_failures", 0)
        return f"{status} {self.name}: {self.checked} checked, {nfail} failed, {self.seconds:.1f}s{extra}"


class _timer:
    def __init__(self, census):
        self.census = census

    def __enter__(self):
        self.t = time.perf_counter()
        return self.census

    def __exit__(self, *exc):
        self.census.seconds = time.perf_counter() - self.t
        return False


def check_examples() -> Census:
    c = Census("worked examples")
    with _timer(c):
        for name, (src, i, dst) in fixtures.MUTATION_EXAMPLES.items():
            c.checked += 1
            if not isomorphic(mutate_right(src(), i), dst()):
                c.fail(name)
        for name, (src, e, dst) in fixtures.FLIP_EXAMPLES.items():
            c.checked += 1
            if not isomorphic(flip_right(src(), e), dst()):
                c.fail(name)
    return c


def check_bijection(max_edges=5, mults=(1, 2, 3)) -> Census:
    c = Census("graph/quiver bijection")
    with _timer(c):
        for g in all_brauer_graphs(max_edges, mults):
            c.checked += 1
            q = brauer_quiver(g)
            if not isomorphic(brauer_graph_of(q), g):
                c.fail(g)
            elif not isomorphic(brauer_quiver(brauer_graph_of(q)), q):
                c.fail(q)
    return c


def check_compatibility(max_edges=5, mults=(1, 2, 3)) -> Census:
    c = Census("flip matches mutation")
    with _timer(c):
        for g in all_brauer_graphs(max_edges, mults):
            q = brauer_quiver(g)
            for e in g.edges:
                c.checked += 1
                if not isomorphic(brauer_quiver(flip_right(g, e.id)), mutate_right(q, e.id)):
                    c.fail((g, e.id))
    return c


def check_mutation_numerics(max_vertices=5, mults=(1, 2, 3)) -> Census:
    c = Census("Cartan and Ext predictions")
    with _timer(c):
        quivers = 0
        for q in all_sb_quivers(max_vertices, mults):
            quivers += 1
            for i in q.vertices:
                c.checked += 1
                r = mutate_right(q, i)
                if not (euler_cartan(q, i) == cartan_matrix(r)).all():
                    c.fail(("cartan", q, i))
                if not (ext_table(q, i) == arrow_matrix(r)).all():
                    c.fail(("ext", q, i))
        c.notes["quivers"] = quivers
    return c


def check_cartan_oracle(n=200, max_vertices=6, seed=0) -> Census:
    c = Census("Cartan closed form vs quotient oracle")
    rng = random.Random(seed)
    with _timer(c):
        for _ in range(n):
            q = random_sb_quiver(rng.randint(1, max_vertices), rng)
            c.checked += 1
            if not (cartan_matrix(q) == oracle_quotient(q)).all():
                c.fail(q)
    return c


def _reduction_ok(q) -> str | None:
    try:
        r = to_double_star(q)
    except ReductionError as e:
        return f"reduction: {e}"
    if target_violations(r.quiver, r.tracked, [x.mult for x in r.start.cycles]):
        return "target conditions"
    if is_double_star(brauer_graph_of(r.quiver)) != (True, True):
        return "double star / multiplicity condition"
    if fingerprint(r.quiver) != fingerprint(q):
        return "fingerprint"
    if canonical_form(replay(r.start, r.log)) != canonical_form(r.quiver):
        return "replay"
    return "search" if r.used_search else None


def check_reduction(families=((5, (1, 2, 3), True), (6, (1, 2), False))) -> Census:
    """``families``: ``(edges, mults, cumulative)``; cumulative means all
    graphs with at most that many edges."""
    c = Census("reduction to double-star normal form")
    searched = 0
    with _timer(c):
        for n, mults, cumulative in families:
            graphs = all_brauer_graphs(n, mults) if cumulative else brauer_graphs(n, mults)
            for g in graphs:
                c.checked += 1
                why = _reduction_ok(brauer_quiver(g))
                if why == "search":
                    searched += 1
                elif why is not None:
                    c.fail((why, g))
    c.notes["via_search"] = searched
    return c


def check_star_normal_form(max_edges=5, mults=(1, 2, 3)) -> Census:
    c = Census("generalized Brauer trees reduce to one star")
    groups = defaultdict(set)
    with _timer(c):
        for g in all_brauer_graphs(max_edges, mults):
            if not is_tree(g):
                continue
            c.checked += 1
            key = (len(g.edges), tuple(sorted(v.mult for v in g.vertices)))
            try:
                r = to_star(brauer_quiver(g))
            except ReductionError as e:
                c.fail((str(e), g))
                continue
            h = brauer_graph_of(r.quiver)
            if not is_tree(h) or is_double_star(h) != (True, True):
                c.fail(("not a star", g))
            groups[key].add(canonical_form(h))
        for key, forms in groups.items():
            if len(forms) > 1:
                c.fail(("several stars", key, len(forms)))
    c.notes["classes"] = len(groups)
    return c


def check_invariance(steps=1000, walk=100, max_edges=6, seed=0) -> Census:
    c = Census("fingerprint under random mutations and flips")
    rng = random.Random(seed)
    with _timer(c):
        while c.checked < steps:
            g = random_brauer_graph(rng.randint(2, max_edges), rng)
            fp = fingerprint(g)
            for _ in range(min(walk, steps - c.checked)):
                e = rng.choice(g.edges).id
                op = rng.randrange(4)
                if op == 0:
                    g = flip_right(g, e)
                elif op == 1:
                    g = flip_left(g, e)
                else:
                    mutate = mutate_right if op == 2 else mutate_left
                    g = brauer_graph_of(mutate(brauer_quiver(g), e))
                c.checked += 1
                if fingerprint(g) != fp:
                    c.fail((fp, g))
                    break
    return c
