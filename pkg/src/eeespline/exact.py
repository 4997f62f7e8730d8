"""Exact rational linear algebra: RREF, rank and nullspace over Q.

Rationals are :class:`fractions.Fraction`.  Elimination runs on integer rows
(each row cleared of denominators) through the kernel chosen in
:mod:`eeespline._kernels`, so there is never any rounding.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import _kernels

Rational = Fraction


def Q(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted in the exact core")
    return Fraction(value)


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major Fractions

    def __post_init__(self):
        if self.rows * self.cols != len(self.entries):
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            entries.extend(Q(x) for x in r)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def select_columns(self, cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix.from_rows([[self[i, j] for j in cols] for i in range(self.rows)], len(cols))

    def matvec(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                     for i in range(self.rows))

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows([list(self.column(j)) for j in range(self.cols)], self.rows)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in self.row(i)) + "]" for i in range(self.rows))


def _integer_rows(rows: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def _reduce(m: RatMatrix) -> tuple[list[list[int]], list[int]]:
    rows = _integer_rows(m.row(i) for i in range(m.rows))
    pivots = _kernels.int_gauss_jordan(rows, m.cols)
    return rows[:len(pivots)], pivots


def rref(m: RatMatrix) -> RatMatrix:
    """Reduced row-echelon form; pivots are 1, zero rows are kept at the bottom."""
    rows, pivots = _reduce(m)
    out = []
    for row, c in zip(rows, pivots):
        p = row[c]
        out.append([Fraction(x, p) for x in row])
    out.extend([[Fraction(0)] * m.cols for _ in range(m.rows - len(out))])
    return RatMatrix.from_rows(out, m.cols)


def rank(m: RatMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_reduce(m)[1])


def pivot_columns(m: RatMatrix) -> list[int]:
    return _reduce(m)[1] if m.rows and m.cols else []


def nullspace_basis(m: RatMatrix) -> list[tuple]:
    """Exact kernel basis, one vector per free column in column order.

    The vector for free column ``f`` has a 1 at ``f`` and 0 at every other
    free column.
    """
    n = m.cols
    if m.rows == 0 or n == 0:
        rows, pivots = [], []
    else:
        rows, pivots = _reduce(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, c in zip(rows, pivots):
            if row[f]:
                v[c] = Fraction(-row[f], row[c])
        basis.append(tuple(v))
    return basis


def solve(m: RatMatrix, rhs: Sequence) -> tuple | None:
    """One exact solution of ``m x = rhs`` (free variables set to 0), or None."""
    aug = RatMatrix.from_rows([list(m.row(i)) + [Q(rhs[i])] for i in range(m.rows)], m.cols + 1)
    rows, pivots = _reduce(aug) if aug.rows else ([], [])
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for row, c in zip(rows, pivots):
        x[c] = Fraction(row[m.cols], row[c])
    return tuple(x)


def same_row_space(a: RatMatrix, b: RatMatrix) -> bool:
    if a.cols != b.cols:
        return False
    return rref(a).to_rows()[:rank(a)] == rref(b).to_rows()[:rank(b)]
