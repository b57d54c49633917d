from fractions import Fraction

import pytest

from wassoc.linalg import (
    Matrix,
    in_span,
    kernel_basis,
    rank,
    row_space_basis,
    rref,
    same_span,
    vector,
)


def test_rref_identity():
    m = Matrix.identity(3)
    rk, red = rref(m)
    assert rk == 3
    assert red == m


def test_rref_proportional_rows():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6]])
    rk, red = rref(m)
    assert rk == 1
    assert red.row(0) == vector([1, 2, 3])
    assert all(x == 0 for x in red.row(1))


def test_rref_idempotent(rng):
    for _ in range(20):
        m = Matrix.from_rows(
            [[rng.randint(-4, 4) for _ in range(5)] for _ in range(4)]
        )
        _, red = rref(m)
        assert rref(red)[1] == red


def test_rank_nullity(rng):
    for _ in range(20):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = Matrix.from_rows(
            [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        )
        assert rank(m) == cols - len(kernel_basis(m))


def test_kernel_vectors_annihilate(rng):
    for _ in range(20):
        m = Matrix.from_rows(
            [[rng.randint(-3, 3) for _ in range(6)] for _ in range(4)]
        )
        for v in kernel_basis(m):
            assert all(x == 0 for x in m.apply(v))


def test_kernel_trivial_cases():
    assert kernel_basis(Matrix.identity(4)) == []
    zero = Matrix.zero(2, 5)
    basis = kernel_basis(zero)
    assert len(basis) == 5


def test_in_span_trivialities():
    basis = [vector([1, 0, 2]), vector([0, 1, 1])]
    assert in_span([0, 0, 0], basis)
    assert in_span(basis[0], basis)
    assert in_span([1, 1, 3], basis)
    assert not in_span([0, 0, 1], basis)
    assert not in_span([1, 0, 0], [])
    assert in_span([0, 0, 0], [])


def test_in_span_matches_rank_criterion(rng):
    for _ in range(30):
        basis = [
            vector([rng.randint(-2, 2) for _ in range(4)]) for _ in range(3)
        ]
        v = vector([rng.randint(-2, 2) for _ in range(4)])
        direct = in_span(v, basis)
        b = Matrix.from_rows(basis)
        stacked = Matrix.from_rows(list(basis) + [v])
        assert direct == (rank(b) == rank(stacked))


def test_fraction_entries_exact():
    m = Matrix.from_rows([[Fraction(1, 3), Fraction(1, 6)], [1, 2]])
    rk, red = rref(m)
    assert rk == 2
    assert red == Matrix.identity(2)


def test_matmul_and_apply():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b) == Matrix.from_rows([[2, 1], [4, 3]])
    assert a.apply([1, 1]) == vector([3, 7])


def test_same_span():
    a = [vector([1, 0, 0]), vector([0, 1, 0])]
    b = [vector([1, 1, 0]), vector([1, -1, 0])]
    assert same_span(a, b)
    assert not same_span(a, [vector([0, 0, 1])])


def test_row_space_basis_is_reduced():
    m = Matrix.from_rows([[2, 4], [1, 2], [0, 1]])
    basis = row_space_basis(m)
    assert basis == [vector([1, 0]), vector([0, 1])]


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        Matrix.from_rows([[1, 2], [1]])
