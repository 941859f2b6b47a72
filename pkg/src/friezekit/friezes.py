"""SL_{k+1} frieze patterns stored on one period.

Entries are addressed as ``d(i, j)``: row offset ``t = j - i`` counts up from the
bottom row of ones (``t = -1``) to the top row of ones (``t = w``). Between them
lie the ``w`` nontrivial rows. Outside the strip ``k`` rows of zeros are
assumed on each side; :meth:`FriezePattern.entry` returns 0 there and beyond.

The alternative coordinates are ``alpha(i, r) = d(i+1, i+1+w-r)``, so row
``alpha^1`` sits next to the top row of ones and ``alpha^w`` next to the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .equations import DifferenceEquation, DomainError
from .linalg import RatMatrix, as_rational, det, solve


class ValidationError(ValueError):
    """A frieze failed a determinant condition; ``failure`` names the window."""

    def __init__(self, message: str, failure: "WindowFailure | None" = None):
        super().__init__(message)
        self.failure = failure


@dataclass(frozen=True)
class WindowFailure:
    i: int
    j: int
    size: int
    value: Fraction

    def __str__(self) -> str:
        return f"{self.size}x{self.size} window at (i={self.i}, j={self.j}) has determinant {self.value}"


@dataclass
class CheckReport:
    name: str
    expected: Fraction
    windows: int = 0
    failures: list[WindowFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> WindowFailure | None:
        return self.failures[0] if self.failures else None

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return f"{self.name}: pass ({self.windows} windows)"
        return f"{self.name}: FAIL ({len(self.failures)}/{self.windows} windows); first: {self.failures[0]}"


@dataclass(frozen=True)
class FriezePattern:
    k: int
    w: int
    band: tuple[tuple[Fraction, ...], ...]  # band[i][t] = d(i, i+t), 0 <= t < w

    def __init__(self, k: int, w: int, band: Sequence[Sequence]):
        if k < 1 or w < 1:
            raise ValueError("need k >= 1 and w >= 1")
        n = k + w + 2
        table = tuple(tuple(as_rational(x) for x in row) for row in band)
        if len(table) != n or any(len(row) != w for row in table):
            raise ValueError(f"band must be {n} rows of {w} entries")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "band", table)

    @property
    def n(self) -> int:
        return self.k + self.w + 2

    def entry(self, i: int, j: int) -> Fraction:
        t = j - i
        if 0 <= t < self.w:
            return self.band[i % self.n][t]
        if t == -1 or t == self.w:
            return Fraction(1)
        return Fraction(0)

    def alpha(self, i: int, r: int) -> Fraction:
        """alpha_i^r; r = 0 and r = w+1 give the bounding ones."""
        return self.entry(i + 1, i + 1 + self.w - r)

    def alpha_rows(self) -> list[list[Fraction]]:
        """rows[r-1][i] = alpha_i^r for r = 1..w, i = 0..n-1."""
        return [[self.alpha(i, r) for i in range(self.n)] for r in range(1, self.w + 1)]

    @classmethod
    def from_alpha_rows(cls, k: int, rows: Sequence[Sequence]) -> FriezePattern:
        w = len(rows)
        n = k + w + 2
        if any(len(row) != n for row in rows):
            raise ValueError(f"each alpha row must have {n} entries")
        # d(i, i+t) = alpha_{i-1}^{w-t}
        band = [[rows[w - t - 1][(i - 1) % n] for t in range(w)] for i in range(n)]
        return cls(k, w, band)

    def shifted(self, s: int) -> FriezePattern:
        """Relabel so that new d(i, j) = old d(i+s, j+s)."""
        return FriezePattern(self.k, self.w, [self.band[(i + s) % self.n] for i in range(self.n)])

    def with_entry(self, i: int, j: int, value) -> FriezePattern:
        """Copy with one band entry (and its periodic images) replaced."""
        t = j - i
        if not 0 <= t < self.w:
            raise IndexError("only nontrivial band entries can be replaced")
        band = [list(row) for row in self.band]
        band[i % self.n][t] = as_rational(value)
        return FriezePattern(self.k, self.w, band)


def sl_windows(k: int, w: int, start: int, stop: int) -> Iterable[tuple[int, int]]:
    for i in range(start, stop):
        for t in range(-1, w + 1):
            yield i, i + t


def tame_windows(k: int, w: int, start: int, stop: int) -> Iterable[tuple[int, int]]:
    for i in range(start, stop):
        for t in range(0, w):
            yield i, i + t


def window_det(entry: Callable[[int, int], Fraction], i: int, j: int, size: int) -> Fraction:
    return det([[entry(i + r, j + c) for c in range(size)] for r in range(size)])


def _check(name, entry, windows, size, expected) -> CheckReport:
    rep = CheckReport(name, Fraction(expected))
    for i, j in windows:
        rep.windows += 1
        v = window_det(entry, i, j, size)
        if v != expected:
            rep.failures.append(WindowFailure(i, j, size, v))
    return rep


def sl_check(f: FriezePattern) -> CheckReport:
    """Every adjacent (k+1)x(k+1) determinant inside the strip equals 1."""
    return _check("sl", f.entry, sl_windows(f.k, f.w, 0, f.n), f.k + 1, 1)


def tame_check(f: FriezePattern) -> CheckReport:
    """Every adjacent (k+2)x(k+2) determinant inside the zero-padded strip vanishes."""
    return _check("tame", f.entry, tame_windows(f.k, f.w, 0, f.n), f.k + 2, 0)


def frieze_from_equation(eq: DifferenceEquation, require_superperiodic: bool = True) -> FriezePattern:
    """Fill each North-East diagonal with the solution started from (0, ..., 0, 1)."""
    k, n, w = eq.k, eq.n, eq.width
    if w < 1:
        raise DomainError(f"width n-k-2 = {w} leaves no nontrivial rows")
    if require_superperiodic:
        mono = eq.monodromy()
        if mono != RatMatrix.identity(k + 1).scale((-1) ** k):
            raise DomainError(f"equation is not superperiodic; monodromy is {mono}")
    band = []
    init = [0] * k + [1]
    for i in range(n):
        band.append(eq.evolve(init, w, start=i))
    return FriezePattern(k, w, band)


def diagonal_profile(eq: DifferenceEquation, i: int) -> list[Fraction]:
    """Values V_i, ..., V_{i+n-1} of the North-East diagonal through (i, i)."""
    return eq.evolve([0] * eq.k + [1], eq.n, start=i)


def equation_from_frieze(f: FriezePattern) -> DifferenceEquation:
    """Recover the equation satisfied by the South-East diagonals."""
    for rep in (sl_check(f), tame_check(f)):
        if not rep.ok:
            raise ValidationError(f"frieze fails {rep.name} check: {rep.first_failure}", rep.first_failure)
    k, n = f.k, f.n
    d = f.entry
    coeffs = []
    for j in range(n):
        # d(i, j) = sum_l (-1)^(l-1) a_j^l d(i, j-l), rows i = j-k..j
        rows_i = list(range(j - k, j + 1))
        mat = [[(-1) ** (l - 1) * d(i, j - l) for l in range(1, k + 2)] for i in rows_i]
        rhs = [d(i, j) for i in rows_i]
        sol = solve(mat, rhs)
        if sol[k] != 1:
            raise ValidationError(f"last coefficient at index {j} is {sol[k]}, expected 1")
        for i in range(j - n + 2, j - k):
            lhs = sum(((-1) ** (l - 1) * sol[l - 1] * d(i, j - l) for l in range(1, k + 2)), Fraction(0))
            if lhs != d(i, j):
                raise ValidationError(f"diagonal recurrence breaks at (i={i}, j={j})")
        coeffs.append(sol[:k])
    return DifferenceEquation(k, n, coeffs)


def matrix_form(f: FriezePattern, i: int = 0) -> RatMatrix:
    """(k+1) x n matrix whose row r is (.., 1, d(i+r, i+r), ..., d(i+r, i+r+w-1), 1, ..) from column r."""
    k, w, n = f.k, f.w, f.n
    rows = []
    for r in range(k + 1):
        row = [Fraction(0)] * n
        row[r] = Fraction(1)
        for t in range(w):
            row[r + 1 + t] = f.entry(i + r, i + r + t)
        row[r + w + 1] = Fraction(1)
        rows.append(row)
    return RatMatrix(rows, n)


def cyclic_minors(m: RatMatrix) -> list[Fraction]:
    """Minors on the n cyclic intervals of k+1 consecutive columns (columns taken in sorted order)."""
    size, n = m.rows, m.cols
    out = []
    for c in range(n):
        cols = sorted((c + t) % n for t in range(size))
        out.append(det([[m[r, x] for x in cols] for r in range(size)]))
    return out


def horizontal_flip(f: FriezePattern) -> FriezePattern:
    """Reflect about the median row: alpha'^r_i = alpha^{w+1-r}_{i-1-r}.

    Flipping twice relabels indices by k - 1.
    """
    k, w, n = f.k, f.w, f.n
    rows = [[f.alpha(i - 1 - r, w + 1 - r) for i in range(n)] for r in range(1, w + 1)]
    return FriezePattern.from_alpha_rows(k, rows)


def horizontal_period(f: FriezePattern) -> int:
    """Smallest p > 0 with d(i+p, j+p) = d(i, j); divides n by construction."""
    n = f.n
    for p in range(1, n + 1):
        if n % p == 0 and all(f.band[i] == f.band[(i + p) % n] for i in range(n)):
            return p
    return n


@dataclass(frozen=True)
class PartialFrieze:
    """Finitely many nontrivial entries of a strip; boundary rows are implied."""

    k: int
    w: int
    entries: dict = field(hash=False)  # (i, j) -> value, 0 <= j - i < w

    def __init__(self, k: int, w: int, entries: dict):
        table = {}
        for (i, j), v in entries.items():
            if not 0 <= j - i < w:
                raise ValueError(f"({i}, {j}) is not a nontrivial entry for width {w}")
            table[(int(i), int(j))] = as_rational(v)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "entries", table)

    def entry(self, i: int, j: int) -> Fraction | None:
        t = j - i
        if 0 <= t < self.w:
            return self.entries.get((i, j))
        return Fraction(1) if t in (-1, self.w) else Fraction(0)

    def index_range(self) -> tuple[int, int]:
        rows = [i for i, _ in self.entries]
        return min(rows) - self.k - 2, max(rows) + 1


def _check_partial(name, f: PartialFrieze, windows, size, expected) -> CheckReport:
    rep = CheckReport(name, Fraction(expected))
    for i, j in windows:
        cells = [f.entry(i + r, j + c) for r in range(size) for c in range(size)]
        if any(x is None for x in cells):
            continue
        # a window made only of boundary rows says nothing about the data
        if not any(0 <= (j + c) - (i + r) < f.w for r in range(size) for c in range(size)):
            continue
        rep.windows += 1
        v = window_det(f.entry, i, j, size)
        if v != expected:
            rep.failures.append(WindowFailure(i, j, size, v))
    return rep


def check_windows(f: FriezePattern | PartialFrieze) -> tuple[CheckReport, CheckReport]:
    """(sl, tame) reports; a partial frieze is checked on its fully known windows."""
    if isinstance(f, FriezePattern):
        return sl_check(f), tame_check(f)
    lo, hi = f.index_range()
    return (
        _check_partial("sl", f, sl_windows(f.k, f.w, lo, hi), f.k + 1, 1),
        _check_partial("tame", f, tame_windows(f.k, f.w, lo, hi), f.k + 2, 0),
    )
