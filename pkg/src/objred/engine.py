"""Classification of a single objective as essential or nonessential.

An objective is nonessential when deleting it leaves the efficient set of
max {F(x) : Ax <= b, x >= 0} unchanged.  classify() walks a fixed decision
tree of eight tests (steps 0 to 7); each test is an exact LP or an exact
linear-algebra computation, and every answer is recorded in a trace together
with a checkable certificate where one exists.

Tree shape.  Step 0 asks whether the candidate gradient is a nonnegative
combination of the others (sufficient for nonessential).  Step 1 asks for a
direction improving the full stack semipositively; if none exists every
feasible point is efficient and the routine continues with steps 2-4, which
compare that situation against the reduced stack.  Otherwise steps 5-7
examine the candidate's optimal face and a kernel condition that certifies
the reduced objective map is one-to-one on the efficient set.  The kernel
condition alone only proves that deletion cannot shrink the efficient set,
so before reporting nonessential the classifier also confirms, face by
face, that deletion does not grow it; a face that is efficient before
deletion but not after is decisive evidence the other way and yields an
essential verdict at step 7.

Boundedness.  Several terminal conclusions rest on theorems whose
hypotheses need a bounded region.  Exits backed by a direct witness (a
combination vector, an interior point plus an improving direction, an
inefficient vertex) stay valid on unbounded regions and are reported
normally.  The step-4 and step-6 conclusions raise UnboundedRegion when
the region is unbounded, and so does step 5 when the candidate itself has
no finite maximum.  Step 7 instead degrades to the inconclusive verdict,
which claims nothing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .efficiency import (
    ObjectiveStack,
    cone_nonempty,
    efficient_point_outside,
    equalizing_weights,
    find_cone_point,
    is_efficient,
)
from .errors import InfeasibleRegion, UnboundedObjective, UnboundedRegion
from .linalg import Matrix, Vector, intersect_spans, null_space, span_basis, vsub
from .polytope import (
    Polytope,
    enumerate_vertices,
    find_interior_point,
    interior_nonempty,
    is_bounded,
    nonempty,
    optimal_face_vertices,
)
from .simplex import LpStatus, Relation, VarKind, feasible_point

# Containment notes attached to verdicts.  The first one is proven on its
# branch; the second restates what is known when step 7 cannot decide.
REDUCED_WITHIN_FULL = "X_E^n ⊆ X_E^{n+1}"
FULL_WITHIN_REDUCED = "X_E^{n+1} ⊆ X_E^n"


class Step(enum.IntEnum):
    COMBINATION = 0
    IMPROVEMENT_CONE = 1
    REDUCED_CONE = 2
    INTERIOR = 3
    ALL_EFFICIENT = 4
    OPTIMAL_FACE = 5
    FACE_EFFICIENT = 6
    KERNEL = 7


class Outcome(enum.Enum):
    NONESSENTIAL = "nonessential"
    ESSENTIAL = "essential"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class TraceEntry:
    step: Step
    answer: bool
    certificate: Any = None


@dataclass(frozen=True)
class Verdict:
    """Classification of one objective, with the executed step trace."""

    candidate: int  # 0-based row index into the problem's objectives
    outcome: Outcome
    decided_at: Step
    relation: str | None = None
    trace: tuple[TraceEntry, ...] = ()


@dataclass(frozen=True)
class MolpProblem:
    """max {F(x) : Ax <= b, x >= 0} with F given row-wise."""

    objectives: Matrix
    a: Matrix
    b: Vector

    def __post_init__(self) -> None:
        if not self.objectives:
            raise ValueError("need at least one objective")
        region = Polytope(self.a, self.b)  # validates A and b
        if any(len(row) != region.dim for row in self.objectives):
            raise ValueError("objective length != variable count")

    @property
    def n_objectives(self) -> int:
        return len(self.objectives)

    @property
    def n_variables(self) -> int:
        return len(self.a[0])

    def region(self) -> Polytope:
        return Polytope(self.a, self.b)

    def stack(self) -> ObjectiveStack:
        return ObjectiveStack(self.objectives)


def combination_multipliers(stack: ObjectiveStack) -> Vector | None:
    """alpha >= 0 with sum(alpha_i * c^i) equal to the last objective row,
    or None when no such multipliers exist."""
    if stack.count < 2:
        raise ValueError("need a second objective to combine from")
    others = stack.rows[:-1]
    target = stack.rows[-1]
    rows = tuple(
        (tuple(row[j] for row in others), Relation.EQ, target[j])
        for j in range(stack.dim)
    )
    out = feasible_point(rows, (VarKind.NONNEG,) * len(others))
    return out.point if out.status is LpStatus.OPTIMAL else None


def kernel_separation(
    region: Polytope, reduced: ObjectiveStack
) -> tuple[bool, dict[str, tuple[Vector, ...]]]:
    """Step-7 test with its certificate bases.

    True when the kernel of the reduced stack meets the span of efficient
    vertex differences only at the origin; then the reduced objective map
    is one-to-one on the efficient set.
    """
    kernel = null_space(reduced.rows)
    if not kernel:
        return True, {"kernel": (), "differences": (), "intersection": ()}
    efficient = tuple(
        v for v in enumerate_vertices(region) if is_efficient(region, reduced, v)
    )
    diffs = tuple(vsub(v, efficient[0]) for v in efficient[1:]) if efficient else ()
    differences = span_basis(diffs)
    meet = intersect_spans(kernel, differences) if differences else ()
    certificate = {
        "kernel": kernel,
        "differences": differences,
        "intersection": meet,
    }
    return not meet, certificate


def _split(problem: MolpProblem, candidate: int) -> tuple[ObjectiveStack, ObjectiveStack]:
    """(full stack with candidate rotated last, reduced stack without it)."""
    others = tuple(
        row for i, row in enumerate(problem.objectives) if i != candidate
    )
    if not others:
        raise ValueError("need a second objective to compare against")
    full = ObjectiveStack(others + (problem.objectives[candidate],))
    return full, ObjectiveStack(others)


def classify(problem: MolpProblem, candidate: int | None = None) -> Verdict:
    """Decide whether the candidate objective (default: the last one) is
    essential, nonessential, or undecidable by this procedure.

    Raises InfeasibleRegion when the region is empty and UnboundedRegion
    when an exit would need a boundedness hypothesis that does not hold;
    the combination test at step 0 is region-independent and is reported
    before either check.
    """
    if candidate is None:
        candidate = problem.n_objectives - 1
    if not 0 <= candidate < problem.n_objectives:
        raise ValueError(f"objective index {candidate} out of range")
    full, reduced = _split(problem, candidate)
    region = problem.region()
    trace: list[TraceEntry] = []

    def verdict(outcome: Outcome, step: Step, relation: str | None = None) -> Verdict:
        return Verdict(candidate, outcome, step, relation, tuple(trace))

    alpha = combination_multipliers(full)
    trace.append(TraceEntry(Step.COMBINATION, alpha is not None, alpha))
    if alpha is not None:
        return verdict(Outcome.NONESSENTIAL, Step.COMBINATION)

    if not nonempty(region):
        raise InfeasibleRegion("the region Ax <= b, x >= 0 is empty")
    bounded = is_bounded(region)

    def require_bounded(what: str) -> None:
        if not bounded:
            raise UnboundedRegion(
                f"{what} needs a bounded region, and this one is unbounded"
            )

    direction = find_cone_point(full.rows)
    trace.append(TraceEntry(Step.IMPROVEMENT_CONE, direction is not None, direction))

    if direction is None:
        # No semipositive improving direction for the full stack exists, so
        # every feasible point is efficient before deletion.
        reduced_direction = find_cone_point(reduced.rows)
        trace.append(
            TraceEntry(Step.REDUCED_CONE, reduced_direction is not None, reduced_direction)
        )
        if reduced_direction is None:
            return verdict(Outcome.NONESSENTIAL, Step.REDUCED_CONE)

        interior = find_interior_point(region)
        trace.append(TraceEntry(Step.INTERIOR, interior is not None, interior))
        if interior is not None:
            # Moving from the interior point along the improving direction
            # stays feasible and leaves the reduced efficient set.
            return verdict(Outcome.ESSENTIAL, Step.INTERIOR)

        vertices = enumerate_vertices(region)
        bad = next(
            (v for v in vertices if not is_efficient(region, reduced, v)), None
        )
        if bad is not None:
            trace.append(TraceEntry(Step.ALL_EFFICIENT, False, bad))
            return verdict(Outcome.ESSENTIAL, Step.ALL_EFFICIENT, REDUCED_WITHIN_FULL)
        require_bounded("the equal-weight criterion")
        weights = equalizing_weights(reduced, vertices)
        trace.append(TraceEntry(Step.ALL_EFFICIENT, weights is not None, weights))
        if weights is not None:
            return verdict(Outcome.NONESSENTIAL, Step.ALL_EFFICIENT)
        return verdict(Outcome.ESSENTIAL, Step.ALL_EFFICIENT, REDUCED_WITHIN_FULL)

    try:
        face = optimal_face_vertices(region, full.rows[-1])
    except UnboundedObjective as exc:
        raise UnboundedRegion(str(exc)) from exc
    trace.append(TraceEntry(Step.OPTIMAL_FACE, True, face))

    witness = next((v for v in face if is_efficient(region, reduced, v)), None)
    if witness is None:
        require_bounded("the optimal-face separation argument")
        trace.append(TraceEntry(Step.FACE_EFFICIENT, False, None))
        return verdict(Outcome.ESSENTIAL, Step.FACE_EFFICIENT)
    trace.append(TraceEntry(Step.FACE_EFFICIENT, True, witness))

    separated, certificate = kernel_separation(region, reduced)
    if separated and bounded:
        # Separation gives one direction: every reduced-efficient point stays
        # efficient for the full stack.  Deletion preserves the efficient set
        # only if the other direction holds as well, so confirm it face by
        # face before concluding; a point that is efficient for the full
        # stack but not the reduced one settles the question the other way.
        escaped = efficient_point_outside(region, full, reduced)
        if escaped is not None:
            certificate = {**certificate, "uncontained": (escaped,)}
        trace.append(TraceEntry(Step.KERNEL, separated, certificate))
        if escaped is None:
            return verdict(Outcome.NONESSENTIAL, Step.KERNEL)
        return verdict(Outcome.ESSENTIAL, Step.KERNEL, REDUCED_WITHIN_FULL)
    trace.append(TraceEntry(Step.KERNEL, separated, certificate))
    # Either the kernel meets the efficient-vertex span, or the region is
    # unbounded and the theorems behind a nonessential conclusion do not
    # apply; both ways this procedure cannot decide.
    return verdict(Outcome.INCONCLUSIVE, Step.KERNEL, FULL_WITHIN_REDUCED)


# Step-level entry points mirroring the decision tree, mainly for tests and
# interactive use.  Each takes the full stack with the candidate last.


def step0(stack: ObjectiveStack) -> bool:
    return combination_multipliers(stack) is not None


def step1(stack: ObjectiveStack) -> bool:
    return cone_nonempty(stack.rows)


def step2(stack: ObjectiveStack) -> bool:
    return cone_nonempty(stack.drop(stack.count - 1).rows)


def step3(region: Polytope) -> bool:
    return interior_nonempty(region)


def step4(region: Polytope, stack: ObjectiveStack) -> bool:
    reduced = stack.drop(stack.count - 1)
    vertices = enumerate_vertices(region)
    if not all(is_efficient(region, reduced, v) for v in vertices):
        return False
    return equalizing_weights(reduced, vertices) is not None


def step5(region: Polytope, stack: ObjectiveStack) -> tuple[Vector, ...]:
    return optimal_face_vertices(region, stack.rows[-1])


def step6(
    region: Polytope, stack: ObjectiveStack, face: tuple[Vector, ...] | None = None
) -> bool:
    reduced = stack.drop(stack.count - 1)
    if face is None:
        face = step5(region, stack)
    return any(is_efficient(region, reduced, v) for v in face)


def step7(region: Polytope, stack: ObjectiveStack) -> bool:
    return kernel_separation(region, stack.drop(stack.count - 1))[0]


@dataclass(frozen=True)
class Removal:
    objective: int  # index into the original problem's objectives, 0-based
    step: Step


@dataclass(frozen=True)
class ReduceResult:
    """Outcome of iterated deletion of nonessential objectives."""

    problem: MolpProblem
    removals: tuple[Removal, ...]
    survivors: tuple[int, ...]  # original 0-based indices, in original order
    history: tuple[tuple[int, Verdict], ...] = field(repr=False, default=())


def reduce_objectives(problem: MolpProblem) -> ReduceResult:
    """Repeatedly delete one nonessential objective until none is found.

    Each pass tries candidates from the highest index down and restarts
    after a deletion, so later (typically auxiliary) objectives go first;
    history records every classification performed, keyed by the original
    objective index.
    """
    rows = list(problem.objectives)
    labels = list(range(len(rows)))
    removals: list[Removal] = []
    history: list[tuple[int, Verdict]] = []
    removed = True
    while removed and len(rows) > 1:
        removed = False
        for pos in reversed(range(len(rows))):
            current = MolpProblem(tuple(rows), problem.a, problem.b)
            result = classify(current, pos)
            history.append((labels[pos], result))
            if result.outcome is Outcome.NONESSENTIAL:
                removals.append(Removal(labels[pos], result.decided_at))
                del rows[pos]
                del labels[pos]
                removed = True
                break
    reduced = MolpProblem(tuple(rows), problem.a, problem.b)
    return ReduceResult(reduced, tuple(removals), tuple(labels), tuple(history))
