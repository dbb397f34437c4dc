from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from objred.linalg import (
    dot,
    frac,
    intersect_spans,
    mat,
    mat_vec,
    null_space,
    rank,
    solve_square,
    span_basis,
    vec,
)

from helpers import frows, fvec


def test_frac_coercions():
    assert frac(3) == Fraction(3)
    assert frac("1/3") == Fraction(1, 3)
    assert frac("0.5") == Fraction(1, 2)
    assert frac(Fraction(7, 2)) == Fraction(7, 2)


def test_frac_rejects_bool_and_float():
    with pytest.raises(TypeError):
        frac(True)
    with pytest.raises(TypeError):
        frac(0.5)


def test_mat_rejects_ragged_rows():
    with pytest.raises(ValueError):
        mat([[1, 2], [3]])


def test_dot_and_mat_vec():
    assert dot(fvec([1, 2, 3]), fvec([4, 5, 6])) == 32
    assert mat_vec(frows([1, 0], [0, 2]), fvec([3, 4])) == fvec([3, 8])


def test_rank_fixtures():
    assert rank(frows([1, 1, 1], [-1, 1, 1])) == 2
    assert rank(frows([1, 2], [2, 4])) == 1
    assert rank(frows([0, 0], [0, 0])) == 0
    assert rank(frows([1, 1, 1, 1, 1], [-1, 1, 1, 1, 1], [-1, -1, 1, 1, 1])) == 3


def test_null_space_of_reduced_cube_stack():
    basis = null_space(frows([1, 1, 1], [-1, 1, 1]))
    assert basis == [fvec([0, 1, -1])]


def test_null_space_trivial_when_full_column_rank():
    assert null_space(frows([1, 3], [2, 1])) == []


def test_null_space_dimension():
    m = frows([1, 1, 1, 1, 1], [-1, 1, 1, 1, 1], [-1, -1, 1, 1, 1])
    basis = null_space(m)
    assert len(basis) == 2
    for v in basis:
        assert mat_vec(m, v) == fvec([0, 0, 0])


def test_span_basis_keeps_original_vectors():
    vs = frows([1, 0], [2, 0], [1, 1])
    basis = span_basis(vs)
    assert basis == [fvec([1, 0]), fvec([1, 1])]


def test_span_basis_of_nothing():
    assert span_basis(()) == []
    assert span_basis(frows([0, 0, 0])) == []


def test_intersect_spans_disjoint():
    assert intersect_spans((fvec([1, 0, 0]),), (fvec([0, 1, -1]),)) == []


def test_intersect_spans_overlap():
    left = frows([1, 0], [0, 1])
    right = frows([1, 1])
    meet = intersect_spans(left, right)
    assert len(meet) == 1
    assert meet[0] == fvec([1, 1])


def test_solve_square():
    m = frows([2, 1], [1, 3])
    rhs = fvec([5, 10])
    x = solve_square(m, rhs)
    assert mat_vec(m, x) == rhs
    assert solve_square(frows([1, 2], [2, 4]), fvec([1, 1])) is None


fractions_st = st.fractions(min_value=-4, max_value=4, max_denominator=4)


@st.composite
def matrices(draw, max_rows=3, max_cols=3):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return tuple(
        tuple(draw(fractions_st) for _ in range(c)) for _ in range(r)
    )


@settings(deadline=None, max_examples=80)
@given(matrices())
def test_null_space_annihilates_and_counts(m):
    basis = null_space(m)
    zero = (Fraction(0),) * len(m)
    for v in basis:
        assert mat_vec(m, v) == zero
    assert rank(m) + len(basis) == len(m[0])


@settings(deadline=None, max_examples=80)
@given(matrices())
def test_span_basis_is_independent_subset(m):
    basis = span_basis(m)
    assert len(basis) == rank(m)
    for v in basis:
        assert v in m
    if basis:
        assert rank(basis) == len(basis)


@settings(deadline=None, max_examples=60)
@given(matrices(max_rows=3, max_cols=3))
def test_intersect_spans_with_itself(m):
    basis = span_basis(m)
    if not basis:
        return
    meet = intersect_spans(basis, basis)
    assert len(meet) == len(basis)


@settings(deadline=None, max_examples=80)
@given(matrices(max_rows=3, max_cols=3), st.data())
def test_solve_square_roundtrip(m, data):
    if len(m) != len(m[0]):
        return
    n = len(m)
    x = fvec([data.draw(fractions_st) for _ in range(n)])
    rhs = mat_vec(m, x)
    sol = solve_square(m, rhs)
    if rank(m) == n:
        assert sol is not None
        assert sol == x
    elif sol is not None:
        assert mat_vec(m, sol) == rhs
