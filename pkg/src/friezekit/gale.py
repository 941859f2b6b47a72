"""Gale transform, projective duality and the matrix orthogonality certificate.

Index relabelings matter here. With the conventions of this package:

* ``gale_transform`` is an exact involution;
* ``projective_dual`` applied twice relabels indices by ``k - 1``;
* ``gale(dual(eq))`` equals ``dual(gale(eq))`` relabeled by ``k + 1``;
* the frieze of ``dual(eq)`` is exactly ``horizontal_flip`` of the frieze of ``eq``.

The relabelings come from the half-step offset between a vertex and the
hyperplane through its neighbours; see :func:`dual_square_shift`.
"""

from __future__ import annotations

from fractions import Fraction

from .equations import DifferenceEquation, DomainError
from .friezes import (
    FriezePattern,
    equation_from_frieze,
    frieze_from_equation,
    horizontal_flip,
    matrix_form,
)
from .linalg import RatMatrix, signature_matrix


def gale_transform(eq: DifferenceEquation) -> DifferenceEquation:
    """Order-(w+1) equation whose coefficients are the alpha-rows of the frieze of ``eq``."""
    if eq.width < 1:
        raise DomainError("width 0 (n = k+2) has no Gale dual")
    if not eq.is_superperiodic():
        raise DomainError(f"Gale transform needs a superperiodic equation; monodromy is {eq.monodromy()}")
    f = frieze_from_equation(eq, require_superperiodic=False)
    return DifferenceEquation(
        f.w, f.n, [[f.alpha(i, r) for r in range(1, f.w + 1)] for i in range(f.n)]
    )


def gale_on_frieze(f: FriezePattern) -> FriezePattern:
    """SL_{w+1} frieze of width k whose alpha-rows are the coefficients behind ``f``."""
    eq = equation_from_frieze(f)
    rows = [[eq.a(i, r) for i in range(f.n)] for r in range(1, f.k + 1)]
    return FriezePattern.from_alpha_rows(f.w, rows)


def projective_dual(eq: DifferenceEquation) -> DifferenceEquation:
    """Dual coefficient j at index i is a_{i+k-j}^{k+1-j}.

    For k = 2 this sends (a_i, b_i) to (b_{i+1}, a_i).
    """
    k = eq.k
    return DifferenceEquation(
        k, eq.n, [[eq.a(i + k - j, k + 1 - j) for j in range(1, k + 1)] for i in range(eq.n)]
    )


def dual_square_shift(k: int) -> int:
    """projective_dual twice equals the relabeling by this many steps."""
    return k - 1


def gale_dual_commutator_shift(k: int) -> int:
    """gale(dual(eq)) == dual(gale(eq)).shifted(this) for order k+1."""
    return k + 1


def dual_frieze(f: FriezePattern) -> FriezePattern:
    """Frieze of the projectively dual equation, computed by flipping."""
    return horizontal_flip(f)


def orthogonality_certificate(f: FriezePattern, i: int, g: FriezePattern | None = None) -> RatMatrix:
    """M^(i)_F D M^(j)_{G(F)}^T with j = i - (w+1) mod n; zero for valid friezes."""
    g = gale_on_frieze(f) if g is None else g
    n = f.n
    j = (i - (f.w + 1)) % n
    return matrix_form(f, i) @ signature_matrix(n) @ matrix_form(g, j).T


def equivalent_up_to_shift(a: DifferenceEquation, b: DifferenceEquation) -> int | None:
    """Smallest s with a == b.shifted(s), or None."""
    if (a.k, a.n) != (b.k, b.n):
        return None
    for s in range(a.n):
        if a == b.shifted(s):
            return s
    return None


def is_self_dual(obj: DifferenceEquation | FriezePattern) -> bool:
    """Flip-invariance of the frieze, allowing any horizontal relabeling."""
    f = obj if isinstance(obj, FriezePattern) else frieze_from_equation(obj)
    flipped = horizontal_flip(f)
    return any(flipped == f.shifted(s) for s in range(f.n))


def explicit_dual_solution(eq: DifferenceEquation) -> dict[int, Fraction]:
    """Explicit solution of the Gale dual on indices -w-1 .. n-w-2 and one more period.

    The window is (0, ..., 0, 1, a_{-1}^k, ..., a_{-1}^1, 1); later values follow
    from W_{i+n} = (-1)^w W_i.
    """
    k, n, w = eq.k, eq.n, eq.width
    window = [Fraction(0)] * w + [Fraction(1)] + [eq.a(-1, j) for j in range(k, 0, -1)] + [Fraction(1)]
    start = -w - 1
    out = {start + t: v for t, v in enumerate(window)}
    sign = (-1) ** w
    for t, v in enumerate(window):
        out[start + t + n] = sign * v
    return out


def iota_equals_gale_star(eq: DifferenceEquation) -> bool:
    """The iota image of the cut matrix equals the cut of G(*(F)), one step along."""
    from .unitriangular import cut_matrix, iota

    f = frieze_from_equation(eq)
    target = frieze_from_equation(gale_transform(projective_dual(eq)))
    return iota(cut_matrix(f)) == cut_matrix(target, anchor=1)


def solution_entry(eq: DifferenceEquation, i: int, j: int) -> Fraction:
    """Value at index j of the solution started by zeros at i-k-1..i-2 and 1 at i-1.

    Inside the strip this is d(i, j); outside it continues the solution
    instead of truncating to the boundary rows.
    """
    k = eq.k
    if j < i - k - 1:
        raise ValueError(f"index {j} precedes the initial window of row {i}")
    if j < i - 1:
        return Fraction(0)
    if j == i - 1:
        return Fraction(1)
    return eq.evolve([0] * k + [1], j - i + 1, start=i)[-1]


def north_east_diagonal(eq: DifferenceEquation, j: int, length: int) -> dict[int, Fraction]:
    """mu'_i = mu_{i+k+1} with mu_i = solution_entry(eq, i, j), over ``length`` indices ending at j."""
    shift = eq.k + 1
    return {i - shift: solution_entry(eq, i, j) for i in range(j - length + 1, j + eq.k + 2)}
