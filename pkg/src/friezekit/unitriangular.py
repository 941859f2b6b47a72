"""Unitriangular matrices cut from friezes, and the anti-involution x -> D x^-1 D."""

from __future__ import annotations

from fractions import Fraction

from .friezes import FriezePattern, ValidationError, sl_check, tame_check
from .linalg import RatMatrix, inverse, minor, signature_matrix


class UnitriangularMatrix(RatMatrix):
    """Upper unitriangular square matrix."""

    __slots__ = ()

    def __init__(self, entries, cols=None):
        super().__init__(entries, cols)
        n = self.rows
        if n != self.cols:
            raise ValueError("unitriangular matrix must be square")
        for r in range(n):
            if self[r, r] != 1 or any(self[r, c] != 0 for c in range(r)):
                raise ValueError(f"row {r} breaks the unitriangular shape")

    @property
    def n(self) -> int:
        return self.rows

    def nonzero_diagonals(self) -> int:
        """Number of superdiagonals (counting the main one) up to the last nonzero one."""
        n = self.rows
        last = 0
        for t in range(n):
            if any(self[r, r + t] != 0 for r in range(n - t)):
                last = t
        return last + 1


def cut_matrix(f: FriezePattern, size: int | None = None, anchor: int = 0) -> UnitriangularMatrix:
    """Square matrix with (r, c) = d(r+anchor, c+anchor-1) on and above the diagonal.

    The default size is the period n; larger cuts keep following the frieze.
    """
    size = f.n if size is None else size
    a = anchor
    rows = [[f.entry(r + a, c + a - 1) if c >= r else 0 for c in range(size)] for r in range(size)]
    return UnitriangularMatrix(rows, size)


def iota(x: RatMatrix) -> UnitriangularMatrix:
    """D x^-1 D with D = diag(1, -1, 1, ...)."""
    d = signature_matrix(x.rows)
    return UnitriangularMatrix((d @ inverse(x) @ d).tolist(), x.rows)


def minor_identity_check(x: RatMatrix, i: int, j: int) -> bool:
    """Entry (i, j) of iota(x) equals the minor of x on rows i..j-1 and columns i+1..j."""
    if not 0 <= i < j < x.rows:
        raise IndexError(f"need 0 <= i < j < {x.rows}, got ({i}, {j})")
    lhs = iota(x)[i, j]
    rhs = minor(x, list(range(i, j)), list(range(i + 1, j + 1)))
    return lhs == rhs


def frieze_from_cut(m: RatMatrix, k: int, w: int) -> FriezePattern:
    """Read band rows 0..n-1 of width w back from a cut of size at least n + w."""
    n = k + w + 2
    if m.rows < n + w:
        raise ValueError(f"cut of size {m.rows} too small to re-read a full period (need {n + w})")
    band = [[m[r, r + 1 + t] for t in range(w)] for r in range(n)]
    return FriezePattern(k, w, band)


def iota_on_frieze(f: FriezePattern) -> FriezePattern:
    """Frieze of type SL_{w+1} and width k read from iota of an extended cut of f.

    The raw read-back starts one step along; it is relabeled so that the result
    equals the frieze of the Gale transform of the projective dual.
    """
    k, w, n = f.k, f.w, f.n
    big = cut_matrix(f, n + k + 1)
    image = iota(big)
    g = frieze_from_cut(image, w, k)
    # the n x n cut must agree with the corner of the extended one
    small = iota(cut_matrix(f))
    if any(small[r, c] != image[r, c] for r in range(n) for c in range(n)):
        raise ValidationError("iota of the period cut disagrees with the extended cut")
    for rep in (sl_check(g), tame_check(g)):
        if not rep.ok:
            raise ValidationError(f"re-read frieze fails {rep.name}: {rep.first_failure}", rep.first_failure)
    return g.shifted(-1)


def gr25_factor_product(t: list) -> UnitriangularMatrix:
    """x_2(t1) x_3(t2) x_4(t3) x_1(t4) x_2(t5) x_3(t6) in 5x5 unitriangular matrices."""
    order = (2, 3, 4, 1, 2, 3)
    out = RatMatrix.identity(5)
    for idx, val in zip(order, t):
        out = out @ elementary_jacobi(5, idx, val)
    return UnitriangularMatrix(out.tolist(), 5)


def elementary_jacobi(n: int, i: int, t) -> UnitriangularMatrix:
    """Identity plus t in position (i, i+1), 1-based i."""
    rows = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    rows[i - 1][i] = Fraction(t)
    return UnitriangularMatrix(rows, n)


def strip_windows(x: RatMatrix, k: int, w: int) -> list[Fraction]:
    """Determinants of the (k+1)-windows of the strip that fit inside a cut matrix.

    Window (i, j) with -1 <= j - i <= w sits on rows i..i+k and columns j+1..j+k+1.
    """
    n = x.rows
    out = []
    for i in range(n - k):
        for t in range(-1, w + 1):
            c0 = i + t + 1
            if 0 <= c0 and c0 + k < n:
                out.append(minor(x, list(range(i, i + k + 1)), list(range(c0, c0 + k + 1))))
    return out


def gr25_constrained(t1, t2) -> list[Fraction]:
    """(t1..t6) satisfying t1t4 = t1t2t4t5 = t1..t6 = t1t2t3 = 1."""
    t1, t2 = Fraction(t1), Fraction(t2)
    return [t1, t2, 1 / (t1 * t2), 1 / t1, 1 / t2, t1 * t2]
