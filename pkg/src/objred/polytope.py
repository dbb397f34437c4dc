"""Feasible regions of the form {x : Ax <= b, x >= 0} with exact geometry.

Vertices come from basis enumeration on the slack-extended system, so the
results are exact rational points, deterministic, and sorted; nothing here
depends on floating point.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InfeasibleRegion, UnboundedObjective
from .linalg import ONE, ZERO, Matrix, Vector, dot, solve_square
from .simplex import (
    Constraint,
    LpProblem,
    LpStatus,
    Relation,
    VarKind,
    feasible_point,
    solve,
)


@dataclass(frozen=True)
class Polytope:
    """Region Ax <= b together with x >= 0; may be empty or unbounded."""

    a: Matrix
    b: Vector

    def __post_init__(self) -> None:
        if len(self.a) != len(self.b):
            raise ValueError("row count of A != length of b")
        if not self.a:
            raise ValueError("need at least one constraint row")
        widths = {len(row) for row in self.a}
        if len(widths) != 1 or widths == {0}:
            raise ValueError("A must be rectangular with at least one column")

    @property
    def dim(self) -> int:
        return len(self.a[0])


def contains(p: Polytope, x: Vector) -> bool:
    """Exact membership test, no tolerance."""
    if len(x) != p.dim:
        return False
    if any(c < 0 for c in x):
        return False
    return all(dot(row, x) <= rhs for row, rhs in zip(p.a, p.b))


@functools.lru_cache(maxsize=512)
def enumerate_vertices(p: Polytope) -> tuple[Vector, ...]:
    """All vertices of the region, sorted lexicographically.

    Works on the slack form [A | I] y = b, y >= 0: every choice of m basic
    columns whose square system is nonsingular and solves nonnegatively is a
    basic feasible solution, and its x-part is a vertex.  Cached because the
    classifier revisits the same region several times along one path.
    """
    m = len(p.a)
    k = p.dim
    full = [
        tuple(p.a[i]) + tuple(ONE if j == i else ZERO for j in range(m))
        for i in range(m)
    ]
    seen: set[Vector] = set()
    for cols in itertools.combinations(range(k + m), m):
        square = tuple(tuple(full[i][c] for c in cols) for i in range(m))
        sol = solve_square(square, p.b)
        if sol is None or any(v < 0 for v in sol):
            continue
        y = [ZERO] * (k + m)
        for c, v in zip(cols, sol):
            y[c] = v
        seen.add(tuple(y[:k]))
    return tuple(sorted(seen))


def find_interior_point(p: Polytope) -> Vector | None:
    """A point with Ax < b and x > 0 strictly, or None if the interior is empty.

    Maximizes a common slack margin a with Ax + a*1 <= b, x >= a*1, a <= 1;
    the interior is nonempty exactly when the optimal margin is positive.
    """
    k = p.dim
    rows: list[Constraint] = []
    for row, rhs in zip(p.a, p.b):
        rows.append((tuple(row) + (ONE,), Relation.LE, Fraction(rhs)))
    for j in range(k):
        margin = tuple(ONE if i == j else ZERO for i in range(k)) + (Fraction(-1),)
        rows.append((margin, Relation.GE, ZERO))
    rows.append(((ZERO,) * k + (ONE,), Relation.LE, ONE))
    objective = (ZERO,) * k + (ONE,)
    kinds = (VarKind.FREE,) * k + (VarKind.NONNEG,)
    out = solve(LpProblem(objective, tuple(rows), kinds))
    if out.status is not LpStatus.OPTIMAL or out.value is None or out.value <= 0:
        return None
    assert out.point is not None
    return out.point[:k]


def interior_nonempty(p: Polytope) -> bool:
    return find_interior_point(p) is not None


def nonempty(p: Polytope) -> bool:
    """True when some x >= 0 satisfies Ax <= b."""
    rows: tuple[Constraint, ...] = tuple(
        (tuple(row), Relation.LE, Fraction(rhs)) for row, rhs in zip(p.a, p.b)
    )
    out = feasible_point(rows, (VarKind.NONNEG,) * p.dim)
    return out.status is LpStatus.OPTIMAL


def is_bounded(p: Polytope) -> bool:
    """True when the region is bounded (x >= 0 makes sum(x) a valid gauge)."""
    rows: tuple[Constraint, ...] = tuple(
        (tuple(row), Relation.LE, Fraction(rhs)) for row, rhs in zip(p.a, p.b)
    )
    objective = (ONE,) * p.dim
    out = solve(LpProblem(objective, rows, (VarKind.NONNEG,) * p.dim))
    return out.status is not LpStatus.UNBOUNDED


@functools.lru_cache(maxsize=256)
def face_vertex_sets(p: Polytope) -> tuple[tuple[Vector, ...], ...]:
    """Vertex sets of every nonempty face of a bounded region, sorted.

    Each constraint row (including the sign bounds x_j >= 0) supports a face
    whose vertices are exactly the vertices lying on that hyperplane, and the
    remaining faces are intersections of those, so the full face lattice is
    the closure of the facet vertex sets under intersection.  The region
    itself appears as the set of all vertices.  Faces are returned as tuples
    of vertices, ordered by size and then lexicographically; only meaningful
    when the region is bounded, since an unbounded face is not spanned by its
    vertices.
    """
    vertices = enumerate_vertices(p)
    everything = frozenset(range(len(vertices)))
    facets: list[frozenset[int]] = []
    for row, rhs in zip(p.a, p.b):
        facets.append(frozenset(i for i, v in enumerate(vertices) if dot(row, v) == rhs))
    for j in range(p.dim):
        facets.append(frozenset(i for i, v in enumerate(vertices) if v[j] == ZERO))
    closed: set[frozenset[int]] = {everything} if vertices else set()
    queue = [everything] if vertices else []
    while queue:
        current = queue.pop()
        for facet in facets:
            meet = current & facet
            if meet and meet not in closed:
                closed.add(meet)
                queue.append(meet)
    faces = [tuple(vertices[i] for i in sorted(members)) for members in closed]
    return tuple(sorted(faces, key=lambda face: (len(face), face)))


def optimal_face_vertices(p: Polytope, c: Vector) -> tuple[Vector, ...]:
    """Vertices of the region where c . x attains its maximum, sorted.

    Raises InfeasibleRegion on an empty region and UnboundedObjective when
    c . x has no finite maximum.
    """
    rows: tuple[Constraint, ...] = tuple(
        (tuple(row), Relation.LE, Fraction(rhs)) for row, rhs in zip(p.a, p.b)
    )
    out = solve(LpProblem(tuple(c), rows, (VarKind.NONNEG,) * p.dim))
    if out.status is LpStatus.INFEASIBLE:
        raise InfeasibleRegion("region is empty")
    if out.status is LpStatus.UNBOUNDED:
        raise UnboundedObjective("objective has no finite maximum on the region")
    assert out.value is not None
    return tuple(v for v in enumerate_vertices(p) if dot(c, v) == out.value)
