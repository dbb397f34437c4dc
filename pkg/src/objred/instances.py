"""Seeded random problem generation for stress and property tests.

Instances keep the origin feasible (b >= 0) and are capped to a bounded
region by default, so classify always runs to a verdict on them.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .engine import MolpProblem
from .linalg import Vector
from .polytope import is_bounded


def _row(rng: random.Random, width: int, spread: int) -> Vector:
    while True:
        row = tuple(Fraction(rng.randint(-spread, spread)) for _ in range(width))
        if any(row):
            return row


def random_problem(
    rng: random.Random,
    max_variables: int = 4,
    max_constraints: int = 6,
    max_objectives: int = 4,
    spread: int = 3,
    ensure_bounded: bool = True,
) -> MolpProblem:
    """A small random instance with integer data; bounded unless asked not
    to be, and never infeasible (the origin always satisfies Ax <= b)."""
    k = rng.randint(2, max_variables)
    m = rng.randint(1, max_constraints)
    n = rng.randint(2, max_objectives)
    a = tuple(_row(rng, k, spread) for _ in range(m))
    b = tuple(Fraction(rng.randint(0, 5)) for _ in range(m))
    objectives = tuple(_row(rng, k, spread) for _ in range(n))
    problem = MolpProblem(objectives, a, b)
    if ensure_bounded and not is_bounded(problem.region()):
        cap = Fraction(rng.randint(2, 4) * k)
        problem = MolpProblem(
            objectives, a + ((Fraction(1),) * k,), b + (cap,)
        )
    return problem


def plant_combination(
    rng: random.Random, base: MolpProblem | None = None, spread: int = 3
) -> tuple[MolpProblem, Vector]:
    """Append a candidate built as a nonnegative combination of the existing
    objective rows; returns the extended problem and the multipliers used."""
    if base is None:
        base = random_problem(rng)
    while True:
        alpha = tuple(
            Fraction(rng.randint(0, spread)) for _ in range(base.n_objectives)
        )
        if any(alpha):
            break
    candidate = tuple(
        sum((a * row[j] for a, row in zip(alpha, base.objectives)), Fraction(0))
        for j in range(base.n_variables)
    )
    extended = MolpProblem(base.objectives + (candidate,), base.a, base.b)
    return extended, alpha
