"""Closed-form banded determinants for frieze entries and equation coefficients.

Every formula here assembles an explicit matrix and hands it to
:func:`friezekit.linalg.det`; the continuants also have a fast recurrence.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .equations import DifferenceEquation
from .friezes import FriezePattern
from .linalg import as_rational, det


def continuant_U(a: Sequence) -> Fraction:
    """Tridiagonal determinant with diagonal ``a`` and unit off-diagonals.

    >>> continuant_U([2, 2])
    Fraction(3, 1)
    """
    prev, cur = Fraction(0), Fraction(1)
    for x in a:
        prev, cur = cur, as_rational(x) * cur - prev
    return cur


def continuant_U_matrix(a: Sequence) -> list[list[Fraction]]:
    m = len(a)
    return [
        [as_rational(a[r]) if r == c else Fraction(int(abs(r - c) == 1)) for c in range(m)]
        for r in range(m)
    ]


def pentadiagonal_V(a: Sequence, b: Sequence) -> Fraction:
    """V(a_1, b_1, ..., b_{m-1}, a_m): diagonal a, superdiagonal b, ones on the
    second superdiagonal and the subdiagonal.

    Uses V_m = a_m V_{m-1} - b_{m-1} V_{m-2} + V_{m-3}.
    """
    if len(b) != max(len(a) - 1, 0):
        raise ValueError(f"need len(b) = len(a) - 1, got {len(a)} and {len(b)}")
    v3, v2, v1 = Fraction(0), Fraction(0), Fraction(1)  # V_{-2}, V_{-1}, V_0
    for t, x in enumerate(a):
        bt = as_rational(b[t - 1]) if t > 0 else Fraction(0)
        v3, v2, v1 = v2, v1, as_rational(x) * v1 - bt * v2 + v3
    return v1


def pentadiagonal_V_matrix(a: Sequence, b: Sequence) -> list[list[Fraction]]:
    m = len(a)
    rows = []
    for r in range(m):
        row = [Fraction(0)] * m
        row[r] = as_rational(a[r])
        if r + 1 < m:
            row[r + 1] = as_rational(b[r])
        if r + 2 < m:
            row[r + 2] = Fraction(1)
        if r >= 1:
            row[r - 1] = Fraction(1)
        rows.append(row)
    return rows


def V_interleaved(seq: Sequence) -> Fraction:
    """V of an interleaved argument list (a_1, b_1, a_2, ..., a_m); odd length or empty.

    A length of -1 (passed as ``None``) is the empty-minus-one convention value 0.
    """
    if seq is None:
        return Fraction(0)
    if len(seq) % 2 == 0 and len(seq) > 0:
        raise ValueError("interleaved V needs an odd number of arguments")
    return pentadiagonal_V(seq[0::2], seq[1::2])


def _coef(eq: DifferenceEquation, i: int, j: int) -> Fraction:
    # a^0 = a^{k+1} = 1, a^j = 0 outside 0..k+1
    if 0 <= j <= eq.k + 1:
        return eq.a(i, j)
    return Fraction(0)


def _check_band(eq: DifferenceEquation, j: int) -> None:
    if not 0 <= j < eq.width:
        raise ValueError(f"offset j={j} outside the band 0..{eq.width - 1}")


def entry_matrix(eq: DifferenceEquation, i: int, j: int) -> list[list[Fraction]]:
    """Lower Hessenberg matrix for d(i, i+j): row r carries a_{i+r}^{r-c+1} left of
    the unit superdiagonal, with a^{k+1} = 1 and zeros beyond."""
    _check_band(eq, j)
    size = j + 1
    rows = []
    for r in range(size):
        row = []
        for c in range(size):
            if c == r + 1:
                row.append(Fraction(1))
            elif c <= r:
                row.append(_coef(eq, i + r, r - c + 1))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return rows


def entry_determinant_case(eq: DifferenceEquation, j: int) -> str:
    """Which printed case governs offset j: 'short' (j <= k-1) or 'long' (j >= k-1); 'both' at the overlap."""
    k = eq.k
    if j == k - 1:
        return "both"
    return "short" if j < k - 1 else "long"


def entry_determinant(eq: DifferenceEquation, i: int, j: int) -> Fraction:
    """d(i, i+j) from the coefficients via the lower Hessenberg determinant."""
    return det(entry_matrix(eq, i, j))


def entry_matrix_alt(eq: DifferenceEquation, i: int, j: int) -> list[list[Fraction]]:
    """Upper Hessenberg matrix of size w-j for d(i, i+j): row r uses index
    i-w+j-1+r with entries a^k, a^{k-1}, ... then a^0 = 1, unit subdiagonal."""
    _check_band(eq, j)
    w, k = eq.width, eq.k
    size = w - j
    rows = []
    for r in range(size):
        idx = i - w + j - 1 + r
        row = []
        for c in range(size):
            if c == r - 1:
                row.append(Fraction(1))
            elif 0 <= c - r <= k:
                row.append(_coef(eq, idx, k - (c - r)))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return rows


def entry_determinant_alt(eq: DifferenceEquation, i: int, j: int) -> Fraction:
    """d(i, i+j) via the alternative upper Hessenberg determinant."""
    return det(entry_matrix_alt(eq, i, j))


def coefficient_matrix(f: FriezePattern, i: int, j: int) -> list[list[Fraction]]:
    """(j+1)x(j+1) block d(i+1+r, i+w+c) whose determinant is a_{i-1}^{k-j}."""
    if not 0 <= j < f.k:
        raise ValueError(f"need 0 <= j < k={f.k}, got {j}")
    w = f.w
    return [[f.entry(i + 1 + r, i + w + c) for c in range(j + 1)] for r in range(j + 1)]


def coefficient_from_frieze(f: FriezePattern, i: int, j: int) -> Fraction:
    """a_{i-1}^{k-j} as a determinant in frieze entries."""
    return det(coefficient_matrix(f, i, j))


def cramer_window(f: FriezePattern, i: int) -> list[list[Fraction]]:
    """(k+1)x(k+2) block of consecutive South-East diagonals i+w, ..., i+w+k+1 on rows i+1..i+k+1.

    The last diagonal is the one the recurrence at index i-1 (mod n) produces.
    """
    k, w = f.k, f.w
    return [[f.entry(i + 1 + r, i + w + c) for c in range(k + 2)] for r in range(k + 1)]


def cramer_coefficient(f: FriezePattern, i: int, l: int) -> tuple[Fraction, Fraction]:
    """Cramer's rule for a_{i-1}^l; returns (numerator, denominator) with the sign folded into the numerator."""
    k = f.k
    if not 1 <= l <= k + 1:
        raise ValueError(f"need 1 <= l <= k+1, got {l}")
    win = cramer_window(f, i)
    base = [row[: k + 1] for row in win]
    target = [row[k + 1] for row in win]
    col = k + 1 - l  # column of the diagonal multiplied by (-1)^(l-1) a^l
    swapped = [row[:col] + [t] + row[col + 1:] for row, t in zip(base, target)]
    return (-1) ** (l - 1) * det(swapped), det(base)


def cramer_denominator(f: FriezePattern, i: int) -> Fraction:
    k = f.k
    return det([row[: k + 1] for row in cramer_window(f, i)])
