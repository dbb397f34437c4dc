"""Fixture problems and the independent efficiency oracle shared by tests."""

from fractions import Fraction

from objred import MolpProblem, ObjectiveStack, Polytope
from objred.linalg import ONE, ZERO, dot
from objred.simplex import LpProblem, LpStatus, Relation, VarKind, solve


def fvec(xs):
    return tuple(Fraction(x) for x in xs)


def frows(*rs):
    return tuple(fvec(r) for r in rs)


SEGMENT = Polytope(frows([1, 1], [-1, -1]), fvec([1, -1]))
SQUARE = Polytope(frows([1, 0], [0, 1]), fvec([1, 1]))
CUBE = Polytope(frows([1, 0, 0], [0, 1, 0], [0, 0, 1]), fvec([1, 1, 1]))


def segment_4obj():
    """Four objectives on the segment x1+x2 = 1; the last two drop out."""
    return MolpProblem(
        frows([1, 3], [2, 1], [3, 0], [-3, -1]), SEGMENT.a, SEGMENT.b
    )


def segment_3obj():
    """Three objectives on the segment; the last is essential."""
    return MolpProblem(frows([1, 1], [1, 0], [-3, -1]), SEGMENT.a, SEGMENT.b)


def slab3_3obj():
    """3 variables, 5 rows, empty interior; all vertices efficient but the
    equal-weight criterion fails, so the last objective is essential."""
    a = frows([0, 1, 1], [0, -1, -1], [1, 1, 1], [-1, -1, -1], [1, 1, 0])
    b = fvec([2, -2, 3, -2, 2])
    return MolpProblem(frows([-1, -2, 2], [2, 3, 0], [-1, -1, -2]), a, b)


def cube_3obj():
    return MolpProblem(frows([1, 1, 1], [-1, 1, 1], [1, 1, 0]), CUBE.a, CUBE.b)


def simplex_3obj():
    """Essential at the interior test."""
    return MolpProblem(
        frows([1, 1, 0], [1, 1, 1], [-3, -3, -1]), frows([1, 1, 1]), fvec([1])
    )


def box5_4obj():
    """Nonessential at the kernel test."""
    a = frows(
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    )
    objectives = frows(
        [1, 1, 1, 1, 1], [-1, 1, 1, 1, 1], [-1, -1, 1, 1, 1], [1, 1, 0, 0, 0]
    )
    return MolpProblem(objectives, a, fvec([1, 1, 1, 1, 1]))


def unbounded6_3obj():
    """Unbounded region on which the classifier ends inconclusive."""
    a = frows(
        [1, 3, 0, 0, 0, 0],
        [3, 1, 0, 0, 0, 0],
        [1, 4, 1, -1, 0, 0],
        [-1, 4, -1, 1, 0, 0],
        [4, 1, 0, 0, 1, -1],
        [-4, -1, 0, 0, -1, 1],
    )
    b = fvec([24, 24, 40, -40, 40, -40])
    objectives = frows(
        [0, 0, -1, -1, 0, 0], [0, 0, 0, 0, -1, -1], [0, 0, 0, -1, 0, -1]
    )
    return MolpProblem(objectives, a, b)


def wide7_3obj():
    """7 variables, 4 rows; no optimal-face vertex of the last objective
    stays efficient, so it is essential."""
    a = frows(
        [1, 2, 1, 1, 2, 1, 2],
        [-2, -1, 0, 1, 2, 0, 1],
        [-1, 0, 1, 0, 2, 0, -2],
        [0, 1, 2, -1, 1, -2, -1],
    )
    objectives = frows(
        [1, 2, -1, 3, 2, 0, 1], [0, 1, 1, 2, 3, 1, 0], [1, 0, 1, -1, 0, -1, -1]
    )
    return MolpProblem(objectives, a, fvec([16, 16, 16, 1]))


def dominance_oracle(
    vertices: tuple, stack: ObjectiveStack, x0
) -> bool:
    """Efficiency decided from the vertex representation: on a bounded
    region, x0 is efficient iff no convex combination of vertices gives a
    componentwise-greater objective image.  Independent formulation used to
    cross-check the halfspace-based test."""
    q = len(vertices)
    n = stack.count
    base = stack.values(x0)
    images = [stack.values(v) for v in vertices]
    rows = []
    for i in range(n):
        coeff = tuple(images[j][i] for j in range(q)) + tuple(
            Fraction(-1) if t == i else ZERO for t in range(n)
        )
        rows.append((coeff, Relation.EQ, base[i]))
    rows.append(((ONE,) * q + (ZERO,) * n, Relation.EQ, ONE))
    objective = (ZERO,) * q + (ONE,) * n
    out = solve(
        LpProblem(objective, tuple(rows), (VarKind.NONNEG,) * (q + n))
    )
    assert out.status is LpStatus.OPTIMAL
    return out.value == 0
