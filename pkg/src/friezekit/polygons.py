"""Polygons in projective space attached to superperiodic equations.

A lift is a list of n vectors in Q^{k+1}; it is extended beyond n by
V_{i+n} = (-1)^k V_i, so every window determinant is defined cyclically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from .equations import DifferenceEquation, DomainError
from .linalg import RatMatrix, as_rational, det, rank, solve

Point = tuple[Fraction, ...]


class DegeneratePolygonError(ValueError):
    """Some k+1 consecutive vertices lie in one hyperplane."""


def normalize_point(coords: Sequence) -> Point:
    """Canonical representative: first nonzero coordinate equal to 1."""
    v = [as_rational(x) for x in coords]
    for x in v:
        if x != 0:
            return tuple(y / x for y in v)
    raise ValueError("the zero vector is not a projective point")


@dataclass(frozen=True)
class PolygonLift:
    k: int
    vectors: tuple[Point, ...]

    def __init__(self, k: int, vectors: Sequence[Sequence]):
        vecs = tuple(tuple(as_rational(x) for x in v) for v in vectors)
        if any(len(v) != k + 1 for v in vecs):
            raise ValueError(f"every vertex needs {k + 1} coordinates")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "vectors", vecs)

    @property
    def n(self) -> int:
        return len(self.vectors)

    def vector(self, i: int) -> Point:
        """V_i with the antiperiodic extension V_{i+n} = (-1)^k V_i."""
        q, r = divmod(i, self.n)
        v = self.vectors[r]
        if q % 2 and self.k % 2:
            return tuple(-x for x in v)
        return v

    def window(self, i: int) -> Fraction:
        """|V_i, ..., V_{i+k}|."""
        cols = [self.vector(i + c) for c in range(self.k + 1)]
        return det([[cols[c][r] for c in range(self.k + 1)] for r in range(self.k + 1)])

    def windows(self) -> list[Fraction]:
        return [self.window(i) for i in range(self.n)]

    def rescaled(self, factors: Sequence) -> PolygonLift:
        return PolygonLift(self.k, [tuple(as_rational(t) * x for x in v) for t, v in zip(factors, self.vectors)])

    def points(self) -> list[Point]:
        return [normalize_point(v) for v in self.vectors]


@dataclass(frozen=True)
class Obstruction:
    """Why a lift could not be normalized to unit windows over the rationals."""

    reason: str
    fiber_dimension: int = 0
    certificate: Fraction | None = None

    def describe(self) -> str:
        out = self.reason
        if self.certificate is not None:
            out += f"; closing value {self.certificate}"
        if self.fiber_dimension:
            out += f"; fiber dimension {self.fiber_dimension}"
        return out


def polygon_lift(eq: DifferenceEquation) -> PolygonLift:
    """The vectors V_0..V_{n-1} of the fundamental solutions, windows all equal to 1."""
    if not eq.is_superperiodic():
        raise DomainError("polygon needs a superperiodic equation")
    sols = eq.fundamental_solutions()
    lift = PolygonLift(eq.k, [tuple(sols[r][i] for r in range(eq.k + 1)) for i in range(eq.n)])
    if any(c != 1 for c in lift.windows()):
        raise RuntimeError("superperiodic equation produced a non-unit window")
    return lift


def polygon_from_equation(eq: DifferenceEquation) -> list[Point]:
    return polygon_lift(eq).points()


def integer_root(x: int, m: int) -> int | None:
    """Exact m-th root of a non-negative integer, or None."""
    if x < 2:
        return x
    lo, hi = 1, 1 << (x.bit_length() // m + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid**m
        if p == x:
            return mid
        if p < x:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def rational_root(q: Fraction, m: int) -> Fraction | None:
    """A rational m-th root of q (the positive one when m is even), or None."""
    q = Fraction(q)
    if q < 0:
        if m % 2 == 0:
            return None
        r = rational_root(-q, m)
        return None if r is None else -r
    num, den = integer_root(q.numerator, m), integer_root(q.denominator, m)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def rescaling_factors(lift: PolygonLift) -> list[Fraction] | Obstruction:
    """Factors t_i with t_i ... t_{i+k} |V_i..V_{i+k}| = 1 for all i."""
    k, n = lift.k, lift.n
    c = lift.windows()
    if any(x == 0 for x in c):
        raise DegeneratePolygonError(f"zero window at index {c.index(0)}")
    q = gcd(n, k + 1)
    if q > 1:
        return Obstruction(f"gcd(n, k+1) = {q}: the rescaling system is not uniquely solvable", fiber_dimension=q - 1)
    # dividing consecutive equations: t_{i+k+1} = t_i c_i / c_{i+1}; one orbit covers all indices
    ratio = {0: Fraction(1)}
    i = 0
    for _ in range(n - 1):
        nxt = (i + k + 1) % n
        ratio[nxt] = ratio[i] * c[i] / c[(i + 1) % n]
        i = nxt
    prod = Fraction(1)
    for j in range(k + 1):
        prod *= ratio[j % n]
    closing = 1 / (c[0] * prod)
    t0 = rational_root(closing, k + 1)
    if t0 is None:
        return Obstruction(f"the closing value has no rational root of order {k + 1}", certificate=closing)
    return [t0 * ratio[j] for j in range(n)]


def equation_from_lift(lift: PolygonLift) -> DifferenceEquation:
    """Coefficients of the equation solved by a lift with unit windows."""
    k, n = lift.k, lift.n
    if any(x != 1 for x in lift.windows()):
        raise ValueError("lift must have unit windows")
    rows = []
    for i in range(n):
        basis = [lift.vector(i - j) for j in range(1, k + 2)]
        m = [[basis[c][r] for c in range(k + 1)] for r in range(k + 1)]
        x = solve(RatMatrix(m), list(lift.vector(i)))
        # x_j = (-1)^(j-1) a_i^j; the last one must be (-1)^k
        if x[k] != (-1) ** k:
            raise RuntimeError(f"trailing coefficient {x[k]} at index {i} is not (-1)^k")
        rows.append([(-1) ** j * x[j] for j in range(k)])
    return DifferenceEquation(k, n, rows)


def equation_from_polygon(p: PolygonLift | Sequence[Sequence], k: int | None = None) -> DifferenceEquation | Obstruction:
    """Normalize a lift (or any representatives of the points) and read off the equation."""
    lift = p if isinstance(p, PolygonLift) else PolygonLift(k if k is not None else len(p[0]) - 1, p)
    t = rescaling_factors(lift)
    if isinstance(t, Obstruction):
        return t
    return equation_from_lift(lift.rescaled(t))


def circulant_matrix(n: int, k: int) -> RatMatrix:
    """n x n 0/1 matrix with ones at columns i..i+k (mod n) of row i."""
    return RatMatrix([[int((c - r) % n <= k) for c in range(n)] for r in range(n)])


def circulant_corank(n: int, k: int) -> int:
    """Number of j in 1..n-1 with j(k+1) = 0 mod n, i.e. gcd(n, k+1) - 1."""
    if n < k + 2:
        raise ValueError(f"need n >= k+2, got n={n}, k={k}")
    return sum(1 for j in range(1, n) if j * (k + 1) % n == 0)


def circulant_nullity(n: int, k: int) -> int:
    """Nullity from the exact rank of the assembled circulant."""
    return n - rank(circulant_matrix(n, k))


def _bracket(u: Sequence, v: Sequence) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def cross_ratio(t1, t2, t3, t4) -> Fraction:
    """[t1,t2,t3,t4] = (t1-t3)(t2-t4) / ((t1-t2)(t3-t4)).

    Points are numbers or homogeneous pairs; differences become 2x2 brackets,
    so the value does not depend on the chosen representatives.
    """
    p = [_as_pair(t) for t in (t1, t2, t3, t4)]
    den = _bracket(p[0], p[1]) * _bracket(p[2], p[3])
    if den == 0:
        raise ValueError("cross-ratio undefined: repeated consecutive points")
    return _bracket(p[0], p[2]) * _bracket(p[1], p[3]) / den


def inverse_cross_ratio(a, b, c, d) -> Fraction:
    """(a-b)(c-d) / ((a-c)(b-d)), the corner-coordinate convention."""
    a, b, c, d = (as_rational(x) for x in (a, b, c, d))
    return (a - b) * (c - d) / ((a - c) * (b - d))


def _as_pair(t) -> tuple[Fraction, Fraction]:
    if isinstance(t, (tuple, list)):
        if len(t) != 2:
            raise ValueError("points on the line need two homogeneous coordinates")
        return as_rational(t[0]), as_rational(t[1])
    return as_rational(t), Fraction(1)


def alternating_cross_ratios(points: Sequence) -> list[Fraction]:
    """x_i = [v_{i-1}, v_i, v_{i+1}, v_{i+2}] for i = 0..n-1 (cyclic)."""
    n = len(points)
    if n % 2:
        raise ValueError("alternating product needs an even number of points")
    for i in range(n):
        if _bracket(_as_pair(points[i]), _as_pair(points[(i + 1) % n])) == 0:
            raise ValueError(f"consecutive points {i} and {(i + 1) % n} coincide")
    return [cross_ratio(points[i - 1], points[i], points[(i + 1) % n], points[(i + 2) % n]) for i in range(n)]


def alternating_cross_ratio_check(points: Sequence) -> bool:
    """Product of x_i over odd i equals the product over even i."""
    x = alternating_cross_ratios(points)
    odd, even = Fraction(1), Fraction(1)
    for i, v in enumerate(x):
        if i % 2:
            odd *= v
        else:
            even *= v
    return odd == even


def _frame(points: Sequence[Point], idx: Sequence[int]) -> RatMatrix | None:
    """Columns p_{idx[0..k]} scaled so they sum to p_{idx[k+1]}; None if not in general position."""
    k1 = len(points[0])
    basis = RatMatrix([[points[idx[c]][r] for c in range(k1)] for r in range(k1)])
    if det(basis) == 0:
        return None
    lam = solve(basis, list(points[idx[k1]]))
    if any(x == 0 for x in lam):
        return None
    return RatMatrix([[basis[r, c] * lam[c] for c in range(k1)] for r in range(k1)])


def projective_transform(p: Sequence[Sequence], q: Sequence[Sequence]) -> RatMatrix | None:
    """A matrix A with A p_i proportional to q_i for every i, or None."""
    if len(p) != len(q) or not p:
        return None
    P = [tuple(as_rational(x) for x in v) for v in p]
    Q = [tuple(as_rational(x) for x in v) for v in q]
    k1 = len(P[0])
    for idx in combinations(range(len(P)), k1 + 1):
        fp = _frame(P, idx)
        if fp is None:
            continue
        fq = _frame(Q, idx)
        if fq is None:
            return None
        a = fq @ fp.inverse()
        if all(_proportional(_apply(a, u), v) for u, v in zip(P, Q)):
            return a
        return None
    return None


def projectively_equivalent(p: Sequence[Sequence], q: Sequence[Sequence]) -> bool:
    return projective_transform(p, q) is not None


def _apply(a: RatMatrix, v: Sequence) -> list[Fraction]:
    return [sum((a[r, c] * v[c] for c in range(a.cols)), Fraction(0)) for r in range(a.rows)]


def _proportional(u: Sequence, v: Sequence) -> bool:
    if not any(u) or not any(v):
        return False
    return all(u[r] * v[s] == u[s] * v[r] for r in range(len(u)) for s in range(r + 1, len(u)))


def dual_polygon(points: Sequence[Sequence]) -> list[Point]:
    """Vertex i is the line through v_i and v_{i+1} (plane polygons only)."""
    if len(points[0]) != 3:
        raise ValueError("dual_polygon is implemented for polygons in the projective plane")
    n = len(points)
    out = []
    for i in range(n):
        u, v = points[i], points[(i + 1) % n]
        out.append(normalize_point((u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])))
    return out
