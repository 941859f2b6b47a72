"""Linear difference equations with periodic coefficients.

An equation of order ``k+1`` and period ``n`` reads

    V_i = a_i^1 V_{i-1} - a_i^2 V_{i-2} + ... + (-1)^(k-1) a_i^k V_{i-k} + (-1)^k V_{i-k-1}

with ``a_{i+n}^j = a_i^j``. Only the raw ``a_i^j`` are stored; the signs and the
implicit leading/trailing unit coefficients live in :meth:`DifferenceEquation.evolve`.
Indices are 0-based: row ``i`` of ``coeffs`` holds ``(a_i^1, ..., a_i^k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .kernels import evolve_linear
from .linalg import RatMatrix, as_rational, det


class DomainError(ValueError):
    """Operation needs a superperiodic equation (or similar) and did not get one."""


@dataclass(frozen=True)
class DifferenceEquation:
    k: int
    n: int
    coeffs: tuple[tuple[Fraction, ...], ...]

    def __init__(self, k: int, n: int, coeffs: Sequence[Sequence]):
        if k < 1:
            raise ValueError("order parameter k must be at least 1")
        if n < k + 2:
            raise ValueError(f"period n={n} must be at least k+2={k + 2}")
        table = tuple(tuple(as_rational(x) for x in row) for row in coeffs)
        if len(table) != n or any(len(row) != k for row in table):
            raise ValueError(f"coefficient table must be {n} rows of {k} entries")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", table)

    @classmethod
    def hill(cls, a: Sequence) -> DifferenceEquation:
        """Second-order equation V_i = a_i V_{i-1} - V_{i-2}."""
        return cls(1, len(a), [[x] for x in a])

    @property
    def width(self) -> int:
        return self.n - self.k - 2

    def a(self, i: int, j: int) -> Fraction:
        """a_i^j with cyclic i; a^0 and a^{k+1} are the implicit units."""
        if j == 0 or j == self.k + 1:
            return Fraction(1)
        if not 1 <= j <= self.k:
            raise IndexError(f"coefficient index j={j} outside 0..{self.k + 1}")
        return self.coeffs[i % self.n][j - 1]

    def _signed(self, start: int) -> list[list[Fraction]]:
        # signed[s] multiplies (V_{i-1}, ..., V_{i-k-1}) for i = start + s
        k = self.k
        out = []
        for s in range(self.n):
            i = start + s
            out.append([(-1) ** j * self.a(i, j + 1) for j in range(k + 1)])
        return out

    def evolve(self, initial: Sequence, steps: int, start: int = 0) -> list[Fraction]:
        """Values V_start, ..., V_{start+steps-1} from (V_{start-k-1}, ..., V_{start-1})."""
        if len(initial) != self.k + 1:
            raise ValueError(f"need exactly {self.k + 1} initial values, got {len(initial)}")
        init = [as_rational(x) for x in initial]
        return [Fraction(v) for v in evolve_linear(self._signed(start), init, steps, self.n)]

    def evolve_back(self, final: Sequence, steps: int, end: int = 0) -> list[Fraction]:
        """Values V_{end-k-2}, V_{end-k-3}, ... going backwards from (V_{end-k-1}, ..., V_{end-1})."""
        k = self.k
        vals = [as_rational(x) for x in final]
        if len(vals) != k + 1:
            raise ValueError(f"need exactly {k + 1} values, got {len(vals)}")
        out = []
        # solve V_i = sum_{j=1}^{k} (-1)^(j-1) a_i^j V_{i-j} + (-1)^k V_{i-k-1} for V_{i-k-1}
        for s in range(steps):
            i = end - 1 - s
            window = vals[: k + 1]
            rest = window[-1] - sum(
                ((-1) ** (j - 1) * self.a(i, j) * window[-1 - j] for j in range(1, k + 1)),
                Fraction(0),
            )
            prev = (-1) ** k * rest
            vals = [prev] + vals[:k]
            out.append(prev)
        return out

    def residual(self, values: dict[int, Fraction] | Sequence, offset: int = 0) -> list[tuple[int, Fraction]]:
        """Indices where a given sequence violates the equation, with the defect."""
        k = self.k
        seq = dict(values) if isinstance(values, dict) else {offset + t: v for t, v in enumerate(values)}
        bad = []
        for i in sorted(seq):
            if all(i - j in seq for j in range(1, k + 2)):
                rhs = sum(((-1) ** (j - 1) * self.a(i, j) * seq[i - j] for j in range(1, k + 2)), Fraction(0))
                if rhs != seq[i]:
                    bad.append((i, seq[i] - rhs))
        return bad

    def monodromy(self) -> RatMatrix:
        """T with (V_n, ..., V_{n+k}) = T applied to (V_0, ..., V_k), column j the j-th basis solution."""
        k, n = self.k, self.n
        basis = self.fundamental_solutions(n + k + 1)
        # window at 0..k is the identity, so column j of T is the window at n..n+k of solution j
        return RatMatrix([[basis[j][n + r] for j in range(k + 1)] for r in range(k + 1)])

    def fundamental_solutions(self, length: int | None = None) -> list[list[Fraction]]:
        """The k+1 solutions whose values at indices 0..k form the identity; each of given length (default n)."""
        k, n = self.k, self.n
        length = n if length is None else length
        sols = []
        for j in range(k + 1):
            head = [Fraction(int(r == j)) for r in range(k + 1)]
            tail = self.evolve(head, max(0, length - k - 1), start=k + 1)
            sols.append((head + tail)[:length])
        return sols

    def fundamental_matrix(self) -> RatMatrix:
        """(k+1) x n matrix whose columns are the vectors V_0, ..., V_{n-1}."""
        return RatMatrix(self.fundamental_solutions())

    def is_superperiodic(self) -> bool:
        k = self.k
        sign = (-1) ** k
        return self.monodromy() == RatMatrix.identity(k + 1).scale(sign)

    def window_determinants(self) -> list[Fraction]:
        """|V_i, ..., V_{i+k}| for i = 0..n-1 using the fundamental solutions."""
        k, n = self.k, self.n
        sols = self.fundamental_solutions(n + k)
        return [det([[sols[r][i + c] for c in range(k + 1)] for r in range(k + 1)]) for i in range(n)]

    def shifted(self, s: int) -> DifferenceEquation:
        """Relabel indices so that new a_i = old a_{i+s}."""
        return DifferenceEquation(self.k, self.n, [self.coeffs[(i + s) % self.n] for i in range(self.n)])


def monodromy(eq: DifferenceEquation) -> RatMatrix:
    return eq.monodromy()


def is_superperiodic(eq: DifferenceEquation) -> bool:
    return eq.is_superperiodic()


def fundamental_solutions(eq: DifferenceEquation) -> RatMatrix:
    return eq.fundamental_matrix()


def evolve(eq: DifferenceEquation, initial: Sequence, steps: int, start: int = 0) -> list[Fraction]:
    return eq.evolve(initial, steps, start)
