"""Exact rational scalars and dense matrices.

Scalars are :class:`fractions.Fraction`, which already keeps numerator and
denominator in lowest terms with a positive denominator. :class:`RatMatrix`
is an immutable row-major table of such scalars.

>>> RatMatrix([[2, 1], [1, 2]]).det()
Fraction(3, 1)
>>> RatMatrix([[1, 2], [0, 1]]).inverse().tolist()
[[Fraction(1, 1), Fraction(-2, 1)], [Fraction(0, 1), Fraction(1, 1)]]
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .kernels import det_bareiss


class DimensionError(ValueError):
    """Shape or index mismatch."""


class SingularMatrixError(ZeroDivisionError):
    """Inverse requested for a matrix with zero determinant."""


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Floats and decimals are rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    """Canonical text form: ``"5"`` for integers, ``"-3/7"`` otherwise."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class RatMatrix:
    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        e = tuple(tuple(as_rational(x) for x in row) for row in entries)
        if cols is None:
            cols = len(e[0]) if e else 0
        for row in e:
            if len(row) != cols:
                raise DimensionError("ragged matrix rows")
        self._e = e
        self.rows = len(e)
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[1 if r == c else 0 for c in range(n)] for r in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def diagonal(cls, values: Sequence) -> RatMatrix:
        n = len(values)
        return cls([[values[r] if r == c else 0 for c in range(n)] for r in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self._e[r][c]

    def row(self, r: int) -> tuple[Fraction, ...]:
        return self._e[r]

    def column(self, c: int) -> tuple[Fraction, ...]:
        return tuple(row[c] for row in self._e)

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._e]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._e))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self._e)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"

    def transpose(self) -> RatMatrix:
        return RatMatrix(zip(*self._e), self.rows) if self.rows else RatMatrix.zeros(self.cols, 0)

    @property
    def T(self) -> RatMatrix:
        return self.transpose()

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        oc = other.transpose()._e if other.rows else ((),) * other.cols
        out = [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in oc] for row in self._e]
        return RatMatrix(out, other.cols)

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in addition")
        return RatMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._e, other._e)], self.cols
        )

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in subtraction")
        return RatMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._e, other._e)], self.cols
        )

    def scale(self, c) -> RatMatrix:
        c = as_rational(c)
        return RatMatrix([[c * x for x in row] for row in self._e], self.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._e for x in row)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> RatMatrix:
        return RatMatrix([[self._e[r][c] for c in col_idx] for r in row_idx], len(col_idx))

    def det(self) -> Fraction:
        return det(self)

    def inverse(self) -> RatMatrix:
        return inverse(self)

    def rank(self) -> int:
        return rank(self)


def _as_matrix(m) -> RatMatrix:
    return m if isinstance(m, RatMatrix) else RatMatrix(m)


def det(m) -> Fraction:
    """Exact determinant. The empty matrix has determinant 1."""
    m = _as_matrix(m)
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.shape} matrix")
    return det_bareiss(m.tolist())


def minor(m, row_idx: Sequence[int], col_idx: Sequence[int]) -> Fraction:
    """Determinant of the submatrix on strictly increasing row/column indices."""
    m = _as_matrix(m)
    if len(row_idx) != len(col_idx):
        raise DimensionError("row and column index lists differ in length")
    for idx, bound in ((row_idx, m.rows), (col_idx, m.cols)):
        if any(not 0 <= t < bound for t in idx):
            raise DimensionError(f"index out of range in {list(idx)}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise DimensionError(f"indices not strictly increasing: {list(idx)}")
    return det_bareiss([[m[r, c] for c in col_idx] for r in row_idx])


def _row_reduce(a: list[list[Fraction]]) -> tuple[list[list[Fraction]], int]:
    """Reduced row echelon form in place; returns (matrix, rank)."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return a, r


def inverse(m) -> RatMatrix:
    """Exact inverse by Gauss-Jordan elimination."""
    m = _as_matrix(m)
    n = m.rows
    if n != m.cols:
        raise DimensionError(f"inverse of non-square {m.shape} matrix")
    aug = [list(m.row(r)) + [Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    red, rk = _row_reduce(aug)
    if any(red[i][i] != 1 for i in range(n)) or rk < n:
        raise SingularMatrixError("matrix is singular")
    return RatMatrix([row[n:] for row in red], n)


def rank(m) -> int:
    m = _as_matrix(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    return _row_reduce(m.tolist())[1]


def solve(m, rhs: Sequence) -> list[Fraction]:
    """Solve the square system m x = rhs exactly."""
    m = _as_matrix(m)
    n = m.rows
    if n != m.cols or len(rhs) != n:
        raise DimensionError("solve needs a square system with matching right-hand side")
    aug = [list(m.row(r)) + [as_rational(rhs[r])] for r in range(n)]
    red, _ = _row_reduce(aug)
    if any(red[i][i] != 1 for i in range(n)):
        raise SingularMatrixError("matrix is singular")
    return [red[i][n] for i in range(n)]


def signature_matrix(n: int) -> RatMatrix:
    """diag(1, -1, 1, ..., (-1)^(n-1))."""
    return RatMatrix.diagonal([(-1) ** i for i in range(n)])
