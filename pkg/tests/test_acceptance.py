"""The eight acceptance criteria, each at its stated scale and time limit."""

import conftest
from brauerkit import census


def _report(n, c, limit=None):
    within = limit is None or c.seconds < limit
    line = c.line()
    if not within:
        line = line.replace("PASS", "FAIL", 1) + f" (limit {limit}s)"
    line = f"criterion {n}: {line}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert c.ok, c.failures[:3]
    assert within, f"took {c.seconds:.1f}s, limit {limit}s"


def test_criterion_1_worked_examples():
    _report(1, census.check_examples(), limit=1)


def test_criterion_2_bijection():
    _report(2, census.check_bijection(5, (1, 2, 3)), limit=60)


def test_criterion_3_flip_matches_mutation():
    _report(3, census.check_compatibility(5, (1, 2, 3)))


def test_criterion_4_cartan_and_ext_after_mutation():
    _report(4, census.check_mutation_numerics(5, (1, 2, 3)), limit=300)


def test_criterion_5_cartan_oracle():
    _report(5, census.check_cartan_oracle(200, 6, seed=0))


def test_criterion_6_reduction():
    # every graph with <= 5 edges and multiplicities in {1,2,3}, plus every
    # 6-edge graph with multiplicities in {1,2}
    _report(6, census.check_reduction(((5, (1, 2, 3), True), (6, (1, 2), False))))


def test_criterion_7_trees_reduce_to_one_star():
    _report(7, census.check_star_normal_form(5, (1, 2, 3)))


def test_criterion_8_fingerprint_invariance():
    _report(8, census.check_invariance(1000, seed=0))
