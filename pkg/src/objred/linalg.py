"""Exact linear algebra over the rationals.

Vectors and matrices are plain tuples of ``fractions.Fraction``, so every
value is immutable, hashable and exact.  The routines here are dense
Gaussian-elimination style; problem sizes in this package are tiny (tens of
rows at most), so exactness is worth far more than speed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x: int | str | Fraction) -> Fraction:
    """Coerce an exact rational literal (int, 'p/q', finite decimal string)."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rational literals")
    if isinstance(x, float):
        raise TypeError("floats are inexact; pass a string or Fraction")
    return Fraction(x)


def vec(xs: Iterable[int | str | Fraction]) -> Vector:
    return tuple(frac(x) for x in xs)


def mat(rows: Iterable[Iterable[int | str | Fraction]]) -> Matrix:
    m = tuple(vec(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    assert len(u) == len(v)
    return sum((a * b for a, b in zip(u, v)), ZERO)


def mat_vec(m: Matrix, x: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, x) for row in m)


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Fraction, u: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in u)


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def is_zero_vector(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def _normalized(u: Sequence[Fraction]) -> Vector:
    """Scale so the first nonzero component is +1 (zero vectors pass through)."""
    for a in u:
        if a != 0:
            return vscale(ONE / a, u)
    return tuple(u)


def _rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in m]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [inv * a for a in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    """Dimension of the row space, by exact Gaussian elimination."""
    return len(_rref(m)[1])


def null_space(m: Matrix) -> list[Vector]:
    """Basis of {x : m x = 0}; empty list iff the kernel is trivial.

    Basis vectors are normalized so their first nonzero component is +1,
    which makes the output deterministic and directly comparable.
    """
    if not m:
        return []
    n_cols = len(m[0])
    rows, pivots = _rref(m)
    free_cols = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free_cols:
        v = [ZERO] * n_cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(_normalized(v))
    return basis


def span_basis(vs: Sequence[Vector]) -> list[Vector]:
    """Maximal linearly independent subset of vs, greedy in input order."""
    kept: list[Vector] = []
    echelon: list[list[Fraction]] = []
    for v in vs:
        residue = list(v)
        for row in echelon:
            lead = next(i for i, a in enumerate(row) if a != 0)
            if residue[lead] != 0:
                f = residue[lead] / row[lead]
                residue = [a - f * b for a, b in zip(residue, row)]
        if any(a != 0 for a in residue):
            kept.append(v)
            echelon.append(residue)
            echelon.sort(key=lambda r: next(i for i, a in enumerate(r) if a != 0))
    return kept


def intersect_spans(b1: Sequence[Vector], b2: Sequence[Vector]) -> list[Vector]:
    """Basis of span(b1) ∩ span(b2); empty list iff the intersection is {0}.

    Uses the stacked-coefficient construction: kernel vectors (lam, mu) of
    the matrix whose columns are b1 and -b2 satisfy sum(lam_i b1_i) =
    sum(mu_j b2_j), i.e. they parameterize the intersection.
    """
    if not b1 or not b2:
        return []
    dim = len(b1[0])
    assert all(len(v) == dim for v in b1) and all(len(v) == dim for v in b2)
    stacked = tuple(
        tuple(v[i] for v in b1) + tuple(-v[i] for v in b2) for i in range(dim)
    )
    members = []
    for coeffs in null_space(stacked):
        lam = coeffs[: len(b1)]
        point = zeros(dim)
        for c, v in zip(lam, b1):
            point = vadd(point, vscale(c, v))
        if not is_zero_vector(point):
            members.append(point)
    return [_normalized(v) for v in span_basis(members)]


def solve_square(m: Matrix, rhs: Vector) -> Vector | None:
    """Unique solution of a square system m x = rhs, or None if singular."""
    n = len(m)
    assert n == 0 or len(m[0]) == n
    rows = [list(r) + [rhs[i]] for i, r in enumerate(m)]
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot_row is None:
            return None
        rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
        inv = ONE / rows[c][c]
        rows[c] = [inv * a for a in rows[c]]
        for i in range(n):
            if i != c and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return tuple(rows[i][n] for i in range(n))
