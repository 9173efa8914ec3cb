"""Reduce every Brauer graph with a given number of edges and report how
often the breadth-first fallback was needed.

    python scripts/reduction_census.py 6 --mults 1 2 3
"""

import argparse
import time
from collections import Counter

from brauerkit.correspondence import brauer_quiver
from brauerkit.enumerate import brauer_graphs
from brauerkit.reduction import ReductionError, to_double_star


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("edges", type=int)
    p.add_argument("--mults", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--every", type=int, default=10000, help="progress interval")
    args = p.parse_args()
    t = time.perf_counter()
    stats, steps = Counter(), Counter()
    for n, g in enumerate(brauer_graphs(args.edges, tuple(args.mults)), 1):
        try:
            r = to_double_star(brauer_quiver(g))
        except ReductionError as e:
            stats[f"error: {e}"] += 1
            continue
        stats["search" if r.used_search else "direct"] += 1
        steps[len(r.log)] += 1
        if n % args.every == 0:
            print(f"{n} graphs, {time.perf_counter() - t:.0f}s, {dict(stats)}", flush=True)
    print(f"done in {time.perf_counter() - t:.0f}s: {dict(stats)}")
    print("log lengths:", dict(sorted(steps.items())))


if __name__ == "__main__":
    main()
