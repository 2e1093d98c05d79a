"""Exact linear algebra: frozen examples and field-axiom level properties."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spherica.linalg import Field, Matrix, reduce, solve

F101 = Field.prime(101)
F2 = Field.prime(2)
F7 = Field.prime(7)
Q = Field.rationals()


def test_field_validation():
    with pytest.raises(ValueError):
        Field.prime(6)
    assert Field.prime(2) == Field.prime(2)
    assert Field.rationals() != Field.prime(2)


def test_reduce_identity_f7():
    m = Matrix.identity(F7, 3)
    rank, ker, img = reduce(m)
    assert rank == 3
    assert ker == []
    assert len(img) == 3


def test_reduce_zero_matrix():
    m = Matrix.zeros(F7, 2, 4)
    rank, ker, img = reduce(m)
    assert rank == 0
    assert len(ker) == 4
    assert img == []


def test_reduce_rank_one_f2():
    # [[1,1],[1,1]] over F_2: hand row reduction gives rank 1, kernel (1,1).
    m = Matrix.from_rows(F2, [[1, 1], [1, 1]])
    rank, ker, img = reduce(m)
    assert rank == 1
    assert len(ker) == 1
    assert ker[0] == Matrix.column(F2, [1, 1])
    for v in ker:
        assert (m * v).is_zero()


def test_solve_identity():
    m = Matrix.identity(F7, 2)
    b = Matrix.column(F7, [2, 3])
    assert solve(m, b) == b


def test_solve_inconsistent():
    m = Matrix.zeros(F2, 2, 2)
    b = Matrix.column(F2, [1, 0])
    assert solve(m, b) is None


def test_solve_free_variable_zeroed():
    # [[1,1],[0,0]] x = (1,0) over F_2: pivot at column 0, free column 1 -> x = (1,0).
    m = Matrix.from_rows(F2, [[1, 1], [0, 0]])
    b = Matrix.column(F2, [1, 0])
    assert solve(m, b) == Matrix.column(F2, [1, 0])


def test_solve_dimension_mismatch():
    m = Matrix.identity(F2, 2)
    with pytest.raises(ValueError):
        solve(m, Matrix.column(F2, [1, 0, 0]))


def test_rationals_exact():
    m = Matrix.from_rows(Q, [["1/2", "1/3"], ["1/4", "1/5"]])
    inv = m.inverse()
    assert (m * inv).is_identity()


def test_inverse_singular():
    m = Matrix.from_rows(F7, [[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        m.inverse()


def _random_matrix(field, rows, cols, rng):
    if field.is_prime_field:
        return Matrix.from_rows(field, [[rng.randrange(field.p) for _ in range(cols)]
                                        for _ in range(rows)]) if rows and cols else \
            Matrix.zeros(field, rows, cols)
    return Matrix.from_rows(field, [[rng.randrange(-5, 6) for _ in range(cols)]
                                    for _ in range(rows)]) if rows and cols else \
        Matrix.zeros(field, rows, cols)


@settings(max_examples=60, deadline=None)
@given(
    p=st.sampled_from([2, 3, 101]),
    rows=st.integers(0, 5),
    cols=st.integers(0, 5),
    seed=st.integers(0, 10**6),
)
def test_rank_equals_rank_of_transpose(p, rows, cols, seed):
    rng = random.Random(seed)
    m = _random_matrix(Field.prime(p), rows, cols, rng)
    assert m.rank() == m.transpose().rank()


@settings(max_examples=60, deadline=None)
@given(
    p=st.sampled_from([2, 3, 101]),
    rows=st.integers(1, 5),
    cols=st.integers(1, 5),
    seed=st.integers(0, 10**6),
)
def test_solve_of_consistent_system(p, rows, cols, seed):
    rng = random.Random(seed)
    field = Field.prime(p)
    m = _random_matrix(field, rows, cols, rng)
    x = _random_matrix(field, cols, 1, rng)
    b = m * x
    x2 = solve(m, b)
    assert x2 is not None
    assert m * x2 == b


@settings(max_examples=40, deadline=None)
@given(
    p=st.sampled_from([2, 101]),
    rows=st.integers(0, 5),
    cols=st.integers(0, 5),
    seed=st.integers(0, 10**6),
)
def test_reduce_postconditions(p, rows, cols, seed):
    rng = random.Random(seed)
    m = _random_matrix(Field.prime(p), rows, cols, rng)
    rank, ker, img = reduce(m)
    assert rank + len(ker) == cols
    for v in ker:
        assert (m * v).is_zero()
    # re-reducing the image basis keeps the rank (idempotence in effect)
    if img:
        img_mat = Matrix.stack_columns(m.field, img, rows)
        assert img_mat.rank() == rank


def test_rank_transpose_rationals():
    m = Matrix.from_rows(Q, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert m.rank() == m.transpose().rank() == 2


def test_kron_and_block_diag():
    a = Matrix.from_rows(F7, [[1, 2], [3, 4]])
    b = Matrix.identity(F7, 2)
    k = a.kron(b)
    assert k.rows == k.cols == 4
    d = Matrix.block_diag(F7, [a, b])
    assert d.rank() == a.rank() + 2
