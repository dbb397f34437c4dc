#!/usr/bin/env python3
"""Classify seeded random instances, tally the verdicts, and cross-check
every nonessential verdict against a direct comparison of the efficient
vertex sets before and after deleting the candidate."""

from __future__ import annotations

import argparse
import collections
import pathlib
import random
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from objred import MolpProblem, Outcome, classify, efficient_vertices
from objred.instances import random_problem


def check_nonessential(problem: MolpProblem, candidate: int) -> bool:
    region = problem.region()
    full = problem.stack()
    reduced = full.drop(candidate)
    return efficient_vertices(region, full) == efficient_vertices(region, reduced)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--count", type=int, default=50)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    tally: collections.Counter[str] = collections.Counter()
    mismatches = 0
    started = time.perf_counter()
    for _ in range(args.count):
        problem = random_problem(rng)
        verdict = classify(problem)
        key = f"{verdict.outcome.value}@{int(verdict.decided_at)}"
        tally[key] += 1
        if verdict.outcome is Outcome.NONESSENTIAL:
            if not check_nonessential(problem, verdict.candidate):
                mismatches += 1
                print(f"MISMATCH on {problem}")
    elapsed = time.perf_counter() - started

    for key in sorted(tally):
        print(f"{key:20s} {tally[key]}")
    print(f"{args.count} instances in {elapsed:.2f}s, {mismatches} mismatch(es)")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
