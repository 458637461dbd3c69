"""Exact dense linear algebra over the Gaussian rationals.

Matrices are immutable dense grids of QQi entries. Everything is computed by
Gauss-Jordan elimination with exact division, which is fine at the sizes this
library needs (a few hundred rows at most). Provides rank, kernel basis,
inverse and exact linear solves; these back the cohomology computations and
serve as equality oracles for braid-word evaluations.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence

from .scalars import ONE, ZERO, QQi, scalar


@dataclasses.dataclass(frozen=True)
class Matrix:
    entries: tuple[tuple[QQi, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @staticmethod
    def from_rows(rows: Iterable[Iterable]) -> Matrix:
        out = []
        for row in rows:
            out.append(tuple(e if isinstance(e, QQi) else scalar(e) for e in row))
        if out and any(len(r) != len(out[0]) for r in out):
            raise ValueError("ragged rows")
        return Matrix(tuple(out))

    @staticmethod
    def identity(n: int) -> Matrix:
        return Matrix(
            tuple(
                tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
            )
        )

    @staticmethod
    def zero(rows: int, cols: int) -> Matrix:
        return Matrix(tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows)))

    def __getitem__(self, ij: tuple[int, int]) -> QQi:
        return self.entries[ij[0]][ij[1]]

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __neg__(self) -> Matrix:
        return self.scale(scalar(-1))

    def scale(self, c: QQi) -> Matrix:
        return Matrix(tuple(tuple(c * e for e in row) for row in self.entries))

    def __mul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} * {other.rows}x{other.cols}"
            )
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out.append(
                tuple(
                    sum((a * b for a, b in zip(row, col)), ZERO) for col in cols
                )
            )
        return Matrix(tuple(out))

    def transpose(self) -> Matrix:
        return Matrix(tuple(zip(*self.entries)))

    def conj_transpose(self) -> Matrix:
        return Matrix(tuple(tuple(e.conj() for e in col) for col in zip(*self.entries)))

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def apply(self, v: Sequence[QQi]) -> tuple[QQi, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(
            sum((a * b for a, b in zip(row, v)), ZERO) for row in self.entries
        )

    def hstack(self, other: Matrix) -> Matrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return Matrix(
            tuple(ra + rb for ra, rb in zip(self.entries, other.entries))
        )

    def vstack(self, other: Matrix) -> Matrix:
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix(self.entries + other.entries)

    def _same_shape(self, other: Matrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(repr(e) for e in row) for row in self.entries
        )
        return f"Matrix[{body}]"


def from_columns(cols: Sequence[Sequence[QQi]]) -> Matrix:
    return Matrix.from_rows(zip(*cols)) if cols else Matrix(())


def _rref(entries: list[list[QQi]]) -> tuple[list[list[QQi]], list[int]]:
    """In-place reduced row echelon form; returns (matrix, pivot columns)."""
    rows = len(entries)
    cols = len(entries[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if entries[i][c]), None)
        if pivot is None:
            continue
        entries[r], entries[pivot] = entries[pivot], entries[r]
        inv = entries[r][c].inverse()
        entries[r] = [inv * e for e in entries[r]]
        for i in range(rows):
            if i != r and entries[i][c]:
                f = entries[i][c]
                entries[i] = [a - f * b for a, b in zip(entries[i], entries[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return entries, pivots


def rank_kernel(m: Matrix) -> tuple[int, list[tuple[QQi, ...]]]:
    """Rank and a basis of the right kernel; rank + len(basis) == cols."""
    entries = [list(row) for row in m.entries]
    if not entries:
        return 0, [tuple()] * 0
    red, pivots = _rref(entries)
    rank = len(pivots)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(tuple(v))
    return rank, basis


def rank(m: Matrix) -> int:
    return rank_kernel(m)[0]


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    aug = [list(row) + list(idrow) for row, idrow in zip(m.entries, Matrix.identity(m.rows).entries)]
    red, pivots = _rref(aug)
    if len(pivots) < m.rows or pivots[: m.rows] != list(range(m.rows)):
        raise ValueError("matrix is singular")
    return Matrix(tuple(tuple(row[m.rows:]) for row in red))


def solve_columns(a: Matrix, b: Matrix) -> Matrix:
    """Solve A X = B exactly; A must have full column rank and the system
    must be consistent (this is how coface matrices are expressed in a
    subspace basis)."""
    aug = [list(ra) + list(rb) for ra, rb in zip(a.entries, b.entries)]
    red, pivots = _rref(aug)
    if pivots != list(range(a.cols)):
        raise ValueError("coefficient matrix does not have full column rank")
    for r in range(len(pivots), a.rows):
        if any(red[r][a.cols:]):
            raise ValueError("inconsistent system")
    return Matrix(tuple(tuple(red[r][a.cols:]) for r in range(a.cols)))


def column_space_basis(m: Matrix) -> Matrix:
    """Matrix whose columns are a basis of the column space of m."""
    _, piv = _rref([list(r) for r in m.entries])
    cols = list(zip(*m.entries))
    chosen = [cols[c] for c in piv]
    return from_columns(chosen) if chosen else Matrix.zero(m.rows, 0)


def random_matrix(rng, rows: int, cols: int, lo: int = -2, hi: int = 2) -> Matrix:
    return Matrix.from_rows(
        [[scalar(rng.randint(lo, hi)) for _ in range(cols)] for _ in range(rows)]
    )
