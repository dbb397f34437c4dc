#!/usr/bin/env python3
"""Run the classifier over every problem file in problems/ and print the
verdict lines; with --reduce, also run the iterative deletion workflow."""

from __future__ import annotations

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from objred import Error, classify, parse_document, reduce_objectives
from objred.problem_io import format_outcome, format_verdict


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--problems",
        default=str(pathlib.Path(__file__).resolve().parents[1] / "problems"),
        help="directory with problem documents",
    )
    parser.add_argument(
        "--reduce", action="store_true", help="also run objective reduction"
    )
    args = parser.parse_args()

    for path in sorted(pathlib.Path(args.problems).glob("*.json")):
        print(f"== {path.name}")
        doc = parse_document(path.read_bytes())
        try:
            verdict = classify(doc.problem)
        except Error as exc:
            print(f"   classify: {type(exc).__name__}: {exc}")
            continue
        print("   " + format_verdict(verdict, doc.objective_names))
        if args.reduce:
            result = reduce_objectives(doc.problem)
            for original, v in result.history:
                print("   " + format_outcome(doc.objective_names[original], v))
            kept = ", ".join(doc.objective_names[i] for i in result.survivors)
            print(f"   kept: {kept}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
