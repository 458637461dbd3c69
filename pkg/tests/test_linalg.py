"""Exact linear algebra: rank, kernel, inverse, and solver properties."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosimplex import linalg
from cosimplex.linalg import Matrix, from_columns, rank, rank_kernel, solve_columns
from cosimplex.scalars import ONE, ZERO, scalar

small_entries = st.integers(min_value=-4, max_value=4)


def small_matrix(rows, cols):
    return st.lists(
        st.lists(small_entries, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    ).map(Matrix.from_rows)


def test_known_kernel():
    # the kernel of [[1,2],[2,4]] is spanned by (2, -1) after normalization
    m = Matrix.from_rows([[1, 2], [2, 4]])
    rk, basis = rank_kernel(m)
    assert rk == 1
    assert len(basis) == 1
    (v,) = basis
    assert m.apply(v) == (ZERO, ZERO)
    assert v == (scalar(-2), ONE)


def test_identity_and_zero():
    assert rank(Matrix.identity(4)) == 4
    assert rank(Matrix.zero(3, 5)) == 0
    assert len(rank_kernel(Matrix.zero(3, 5))[1]) == 5


@settings(max_examples=40)
@given(small_matrix(3, 4))
def test_rank_nullity(m):
    rk, basis = rank_kernel(m)
    assert rk + len(basis) == m.cols
    for v in basis:
        assert all(e.is_zero() for e in m.apply(v))


@settings(max_examples=40)
@given(small_matrix(3, 3), small_matrix(3, 3))
def test_rank_subadditive_under_product(a, b):
    assert rank(a * b) <= min(rank(a), rank(b))


def test_inverse_round_trip():
    rng = random.Random(7)
    for _ in range(10):
        m = linalg.random_matrix(rng, 4, 4)
        if rank(m) < 4:
            continue
        inv = linalg.inverse(m)
        assert m * inv == Matrix.identity(4)
        assert inv * m == Matrix.identity(4)


def test_inverse_of_singular_raises():
    with pytest.raises(ValueError):
        linalg.inverse(Matrix.from_rows([[1, 2], [2, 4]]))


def test_solve_columns_round_trip():
    rng = random.Random(11)
    a = linalg.random_matrix(rng, 4, 2)
    while rank(a) < 2:
        a = linalg.random_matrix(rng, 4, 2)
    x = linalg.random_matrix(rng, 2, 3)
    b = a * x
    assert solve_columns(a, b) == x


def test_solve_columns_inconsistent():
    a = Matrix.from_rows([[1], [0]])
    b = Matrix.from_rows([[0], [1]])
    with pytest.raises(ValueError):
        solve_columns(a, b)


def test_column_space_basis():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    basis = linalg.column_space_basis(m)
    assert basis.cols == rank(m) == 2


def test_stacking_and_transpose():
    a = Matrix.from_rows([[1, 2]])
    b = Matrix.from_rows([[3, 4]])
    assert a.vstack(b) == Matrix.from_rows([[1, 2], [3, 4]])
    assert a.hstack(b) == Matrix.from_rows([[1, 2, 3, 4]])
    assert a.transpose() == Matrix.from_rows([[1], [2]])


def test_conj_transpose():
    m = Matrix.from_rows([[scalar(1, 2)]])
    assert m.conj_transpose() == Matrix.from_rows([[scalar(1, -2)]])


def test_from_columns():
    cols = [(ONE, ZERO), (ZERO, ONE)]
    assert from_columns(cols) == Matrix.identity(2)
