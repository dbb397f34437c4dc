"""Efficiency machinery for linear multiobjective maximization.

Holds the objective stack, the cone test for directions that improve some
objective without hurting any other, the vertex efficiency test (via the
auxiliary slack-maximization LP), and the search for strictly positive
weights that equalize the weighted objective value across vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InfeasibleInput
from .linalg import ONE, ZERO, Matrix, Vector, dot, mat_vec
from .polytope import Polytope, contains, enumerate_vertices, face_vertex_sets
from .simplex import Constraint, LpProblem, LpStatus, Relation, VarKind, solve


@dataclass(frozen=True)
class ObjectiveStack:
    """Rows are objective gradients; F(x) stacks their values at x."""

    rows: Matrix

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("need at least one objective")
        widths = {len(row) for row in self.rows}
        if len(widths) != 1 or widths == {0}:
            raise ValueError("objective rows must share a positive length")

    @property
    def count(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows[0])

    def values(self, x: Vector) -> Vector:
        return mat_vec(self.rows, x)

    def drop(self, index: int) -> "ObjectiveStack":
        if not 0 <= index < self.count:
            raise IndexError("objective index out of range")
        kept = tuple(row for i, row in enumerate(self.rows) if i != index)
        return ObjectiveStack(kept)


def find_cone_point(c: Matrix) -> Vector | None:
    """Some x with Cx >= 0 and Cx != 0, or None when no such x exists.

    Introduces v = Cx and maximizes sum(v) under sum(v) <= 1; the cone is
    nontrivial exactly when the optimum is positive (any witness rescales).
    """
    p = len(c)
    k = len(c[0])
    rows: list[Constraint] = []
    for i, row in enumerate(c):
        coeff = tuple(-a for a in row) + tuple(
            ONE if j == i else ZERO for j in range(p)
        )
        rows.append((coeff, Relation.EQ, ZERO))
    rows.append(((ZERO,) * k + (ONE,) * p, Relation.LE, ONE))
    objective = (ZERO,) * k + (ONE,) * p
    kinds = (VarKind.FREE,) * k + (VarKind.NONNEG,) * p
    out = solve(LpProblem(objective, tuple(rows), kinds))
    if out.status is not LpStatus.OPTIMAL or out.value is None or out.value <= 0:
        return None
    assert out.point is not None
    return out.point[:k]


def cone_nonempty(c: Matrix) -> bool:
    return find_cone_point(c) is not None


def is_efficient(p: Polytope, f: ObjectiveStack, x0: Vector) -> bool:
    """Vertex efficiency test: maximize the total slack by which another
    feasible point dominates x0; x0 is efficient exactly when that optimum
    is zero (an unbounded auxiliary problem means domination without limit).
    """
    if not contains(p, x0):
        raise InfeasibleInput("point is not in the region")
    k = p.dim
    n = f.count
    base = f.values(x0)
    rows: list[Constraint] = []
    for row, rhs in zip(p.a, p.b):
        rows.append((tuple(row) + (ZERO,) * n, Relation.LE, Fraction(rhs)))
    for i, row in enumerate(f.rows):
        coeff = tuple(row) + tuple(
            Fraction(-1) if j == i else ZERO for j in range(n)
        )
        rows.append((coeff, Relation.EQ, base[i]))
    objective = (ZERO,) * k + (ONE,) * n
    kinds = (VarKind.NONNEG,) * (k + n)
    out = solve(LpProblem(objective, tuple(rows), kinds))
    if out.status is LpStatus.UNBOUNDED:
        return False
    assert out.status is LpStatus.OPTIMAL and out.value is not None
    return out.value == 0


def efficient_vertices(p: Polytope, f: ObjectiveStack) -> tuple[Vector, ...]:
    """The efficient vertices of the region, sorted lexicographically."""
    return tuple(v for v in enumerate_vertices(p) if is_efficient(p, f, v))


def efficient_point_outside(
    p: Polytope, outer: ObjectiveStack, inner: ObjectiveStack
) -> Vector | None:
    """A point efficient under the outer stack but not under the inner one,
    or None when every outer-efficient point is inner-efficient.

    The efficient set of a bounded region is a union of faces, and a face is
    efficient exactly when the centroid of its vertices is, so sweeping one
    relative-interior representative per face decides the containment
    exactly.  Faces whose vertices are not all outer-efficient cannot be
    outer-efficient and are skipped.  Only valid on bounded regions.
    """
    outer_eff = set(efficient_vertices(p, outer))
    for v in sorted(outer_eff):
        if not is_efficient(p, inner, v):
            return v
    for face in face_vertex_sets(p):
        if len(face) < 2 or not outer_eff.issuperset(face):
            continue
        size = Fraction(len(face))
        centroid = tuple(sum(column) / size for column in zip(*face))
        if is_efficient(p, outer, centroid) and not is_efficient(p, inner, centroid):
            return centroid
    return None


def equalizing_weights(f: ObjectiveStack, points: tuple[Vector, ...]) -> Vector | None:
    """Strictly positive weights summing to one that give every listed point
    the same weighted objective value, or None when no such weights exist.

    Maximizes the smallest weight subject to the equal-value constraints;
    a positive optimum certifies strict positivity.
    """
    if not points:
        raise ValueError("need at least one point")
    n = f.count
    rows: list[Constraint] = [((ONE,) * n + (ZERO,), Relation.EQ, ONE)]
    for i in range(n):
        coeff = tuple(ONE if j == i else ZERO for j in range(n)) + (Fraction(-1),)
        rows.append((coeff, Relation.GE, ZERO))
    first = f.values(points[0])
    for other in points[1:]:
        diff = tuple(a - b for a, b in zip(first, f.values(other)))
        rows.append((diff + (ZERO,), Relation.EQ, ZERO))
    objective = (ZERO,) * n + (ONE,)
    kinds = (VarKind.NONNEG,) * (n + 1)
    out = solve(LpProblem(objective, tuple(rows), kinds))
    if out.status is not LpStatus.OPTIMAL or out.value is None or out.value <= 0:
        return None
    assert out.point is not None
    return out.point[:n]
