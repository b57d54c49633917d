"""Exact dense linear algebra over the rationals.

Every dimension, rank and span fact computed by this package reduces to row
reduction of a dense rational matrix, so the routines here are exact: entries
are `fractions.Fraction` (plain ints are accepted and promoted).  Pivot choice
is deterministic (first nonzero entry in column order), which keeps reduced
forms, kernel bases and report output byte-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


Vector = tuple[Fraction, ...]


def vector(entries: Iterable) -> Vector:
    return tuple(as_rational(x) for x in entries)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with Fraction entries, row-major."""

    rows: int
    cols: int
    entries: tuple[Vector, ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        data = tuple(vector(r) for r in rows)
        if not data:
            return Matrix(0, 0, ())
        ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return Matrix(len(data), ncols, data)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        z = Fraction(0)
        return Matrix(rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([self.col(j) for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix.from_rows(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, q) -> "Matrix":
        q = as_rational(q)
        return Matrix.from_rows([[q * x for x in r] for r in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = [other.col(j) for j in range(other.cols)]
        return Matrix.from_rows(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries]
        )

    def apply(self, v: Sequence) -> Vector:
        v = vector(v)
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def stack(self, other: "Matrix") -> "Matrix":
        if other.rows == 0:
            return self
        if self.rows == 0:
            return other
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)


def rref(m: Matrix) -> tuple[int, Matrix]:
    """Reduced row-echelon form with first-nonzero pivoting.

    Returns (rank, reduced).  The reduced form is the unique RREF of the row
    space, pivots scaled to 1, zero rows trailing.
    """
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    piv = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(piv, nrows):
            if rows[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[piv], rows[pivot_row] = rows[pivot_row], rows[piv]
        pv = rows[piv][col]
        if pv != 1:
            inv = Fraction(1) / pv
            rows[piv] = [x * inv for x in rows[piv]]
        prow = rows[piv]
        for r in range(nrows):
            if r != piv and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], prow)]
        piv += 1
        if piv == nrows:
            break
    return piv, Matrix.from_rows(rows)


def rank(m: Matrix) -> int:
    return rref(m)[0]


def pivot_columns(reduced: Matrix, rk: int) -> list[int]:
    pivots = []
    col = 0
    for r in range(rk):
        while reduced[r, col] == 0:
            col += 1
        pivots.append(col)
        col += 1
    return pivots


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right null space {x : m x = 0}; count = cols - rank."""
    rk, red = rref(m)
    pivots = pivot_columns(red, rk)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r, f]
        basis.append(tuple(v))
    return basis


def row_space_basis(m: Matrix) -> list[Vector]:
    rk, red = rref(m)
    return [red.row(i) for i in range(rk)]


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    """True iff v lies in the rational span of the given vectors.

    Decided exactly: appending v to the stacked basis must not raise the rank.
    """
    v = vector(v)
    basis = [vector(b) for b in basis]
    if any(len(b) != len(v) for b in basis):
        raise ValueError("vector lengths differ")
    if all(x == 0 for x in v):
        return True
    if not basis:
        return False
    m = Matrix.from_rows(basis)
    return rank(m) == rank(Matrix.from_rows(basis + [v]))


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """True iff two families of vectors span the same subspace."""
    ma = Matrix.from_rows([vector(x) for x in a])
    mb = Matrix.from_rows([vector(x) for x in b])
    if ma.cols != mb.cols:
        raise ValueError("ambient dimensions differ")
    ra, reda = rref(ma)
    rb, redb = rref(mb)
    if ra != rb:
        return False
    return [reda.row(i) for i in range(ra)] == [redb.row(i) for i in range(rb)]
