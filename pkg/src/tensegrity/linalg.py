"""Exact rational matrices: row reduction, left null spaces and determinants."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: a float has already lost the exactness we need.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class RatMatrix:
    """Dense row-major matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Sequence], cols: int | None = None):
        data = [[to_rational(x) for x in row] for row in data]
        if cols is None:
            if not data:
                raise ValueError("column count required for a matrix with no rows")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> list[Fraction]:
        return list(self._data[i])

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "RatMatrix":
        return RatMatrix([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                         cols=self.rows)

    def left_multiply(self, vec: Sequence) -> list[Fraction]:
        """Return ``vec @ self``."""
        if len(vec) != self.rows:
            raise ValueError("vector length does not match row count")
        out = [Fraction(0)] * self.cols
        for c, row in zip(vec, self._data):
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] += c * x
        return out

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._data) == (other.rows, other.cols, other._data)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._data)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"


def rref(m: RatMatrix) -> tuple[RatMatrix, list[int], int]:
    """Reduced row-echelon form. Returns (matrix, pivot columns, rank)."""
    a = m.tolist()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            f = a[i][c]
            if i != r and f != 0:
                ar = a[r]
                a[i] = [x - f * y for x, y in zip(a[i], ar)]
        pivots.append(c)
        r += 1
    return RatMatrix(a, cols=m.cols), pivots, len(pivots)


def rank(m: RatMatrix) -> int:
    return rref(m)[2]


def nullspace(m: RatMatrix) -> list[list[Fraction]]:
    """Right null space basis {x : m x = 0}, one vector per free column.

    Each vector is scaled so its first nonzero entry is 1.
    """
    red, pivots, _ = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r, free]
        lead = next(x for x in v if x != 0)
        basis.append([x / lead for x in v])
    return basis


def left_nullspace(m: RatMatrix) -> list[list[Fraction]]:
    """Basis of {w : w m = 0}."""
    return nullspace(m.transpose())


def determinant(m: RatMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    # clear denominators so Bareiss runs over the integers
    scale = math.lcm(*(x.denominator for row in m._data for x in row))
    a = [[int(x * scale) for x in row] for row in m._data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], scale ** n)

