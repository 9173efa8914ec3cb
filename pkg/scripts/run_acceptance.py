"""Run every acceptance check and print one line each.

    python scripts/run_acceptance.py            # the standard scales
    python scripts/run_acceptance.py --only 1 5 8
"""

import argparse
import sys

from brauerkit import census

CHECKS = {
    1: lambda: census.check_examples(),
    2: lambda: census.check_bijection(5, (1, 2, 3)),
    3: lambda: census.check_compatibility(5, (1, 2, 3)),
    4: lambda: census.check_mutation_numerics(5, (1, 2, 3)),
    5: lambda: census.check_cartan_oracle(200, 6, seed=0),
    6: lambda: census.check_reduction(((5, (1, 2, 3), True), (6, (1, 2), False))),
    7: lambda: census.check_star_normal_form(5, (1, 2, 3)),
    8: lambda: census.check_invariance(1000, seed=0),
}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--only", type=int, nargs="+", choices=sorted(CHECKS))
    args = p.parse_args()
    ok = True
    for n in args.only or sorted(CHECKS):
        c = CHECKS[n]()
        print(f"criterion {n}: {c.line()}", flush=True)
        for f in c.failures[:3]:
            print(f"    {f}")
        ok &= c.ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
