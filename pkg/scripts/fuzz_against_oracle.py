#!/usr/bin/env python3
"""Differential fuzz: every solver against the brute-force oracle.

Generates seeded small instances across the random, high-penalty, and
windowed families and checks that full-range value iteration, windowed value
iteration (where applicable), and the penalty-guessing exact solver all
reproduce the enumeration oracle exactly.  Exits non-zero on the first
mismatch.
"""

import argparse
import sys

from energygames import brute_force_energies, full_list, solve_with_list, window_list
from energygames.exact import solve
from energygames.generators import GenSpec, high_penalty_family, random_game, windowed_game


def check(graph, context: str, window=None) -> bool:
    exact = brute_force_energies(graph)
    full = solve_with_list(graph, full_list(graph.default_bound()))
    ok = True
    if full.energies != exact:
        print(f"MISMATCH value-iteration {context}: {full.energies} != {exact}")
        ok = False
    report = solve(graph)
    if report.energies != exact:
        print(f"MISMATCH exact-solve {context}: {report.energies} != {exact}")
        ok = False
    if window is not None:
        centers, delta = window
        lst = window_list(list(centers), delta, graph.n, graph.default_bound())
        windowed = solve_with_list(graph, lst)
        if windowed.energies != exact:
            print(f"MISMATCH windowed {context}: {windowed.energies} != {exact}")
            ok = False
    return ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=2000, help="instances per family")
    parser.add_argument("--offset", type=int, default=0, help="first seed")
    args = parser.parse_args()

    failures = 0
    for seed in range(args.offset, args.offset + args.count):
        n = 2 + seed % 5
        cap = min(3, n - 1)
        graph = random_game(
            GenSpec(
                "random",
                n=n,
                m=n + seed % (n * cap - n + 1),
                max_weight=1 + seed % 10,
                seed=seed,
                max_out=3,
            )
        )
        failures += not check(graph, f"random seed={seed}")

        graph = high_penalty_family(2 + seed % 3, (4, 8, 32)[seed % 3], seed)
        failures += not check(graph, f"penalty seed={seed}")

        spec = GenSpec(
            "window",
            n=3 + seed % 3,
            m=(3 + seed % 3) + seed % 4,
            max_weight=12,
            seed=seed,
            d=1 + seed % 2,
            delta=seed % 3,
            center_lo=-7,
            center_hi=7,
        )
        graph, centers = windowed_game(spec)
        failures += not check(graph, f"window seed={seed}", window=(centers, spec.delta))

    total = 3 * args.count
    print(f"{total - failures}/{total} instances agree with the oracle")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
