import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from friezekit.equations import DifferenceEquation
from friezekit.friezes import frieze_from_equation, sl_check, tame_check
from friezekit.gale import gale_on_frieze, gale_transform, iota_equals_gale_star, projective_dual
from friezekit.linalg import RatMatrix
from friezekit.maps import random_rational
from friezekit.unitriangular import (
    UnitriangularMatrix,
    cut_matrix,
    elementary_jacobi,
    gr25_constrained,
    gr25_factor_product,
    iota,
    iota_on_frieze,
    minor_identity_check,
    strip_windows,
)

from helpers import all_instances

ids = lambda e: f"k{e.k}n{e.n}"  # noqa: E731


@st.composite
def unitriangular(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    vals = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    rows = [[Fraction(int(r == c)) if c <= r else draw(vals) for c in range(n)] for r in range(n)]
    return UnitriangularMatrix(rows)


def test_shape_validation():
    with pytest.raises(ValueError):
        UnitriangularMatrix([[1, 2], [3, 1]])
    with pytest.raises(ValueError):
        UnitriangularMatrix([[2, 0], [0, 1]])


def test_cut_matrix_layout():
    f = frieze_from_equation(DifferenceEquation.hill([1, 3, 1, 2, 2]))
    a = cut_matrix(f)
    assert a.tolist()[0] == [1, 1, 2, 1, 0]
    assert a.tolist()[1] == [0, 1, 3, 2, 1]
    assert a.nonzero_diagonals() == f.w + 2


@given(unitriangular())
def test_iota_is_an_involution(x):
    assert iota(iota(x)) == x


@given(unitriangular(max_n=8))
def test_minor_identity_random(x):
    for i in range(x.n):
        for j in range(i + 1, x.n):
            assert minor_identity_check(x, i, j)


@pytest.mark.parametrize("eq", [e for e in all_instances() if e.n <= 8][::2], ids=ids)
def test_minor_identity_on_cuts(eq):
    x = cut_matrix(frieze_from_equation(eq))
    assert all(minor_identity_check(x, i, j) for i in range(x.n) for j in range(i + 1, x.n))


def test_minor_identity_index_check():
    with pytest.raises(IndexError):
        minor_identity_check(RatMatrix.identity(3), 2, 1)


@pytest.mark.parametrize("eq", all_instances(), ids=ids)
def test_iota_is_gale_of_dual(eq):
    f = frieze_from_equation(eq)
    g = iota_on_frieze(f)
    target = frieze_from_equation(gale_transform(projective_dual(eq)))
    assert g == target
    assert sl_check(g).ok and tame_check(g).ok
    assert iota(cut_matrix(f)) == cut_matrix(target, anchor=1)
    assert iota(cut_matrix(f)).nonzero_diagonals() == eq.k + 2
    assert iota_equals_gale_star(eq)


def test_all_two_iota_is_plain_gale():
    f = frieze_from_equation(DifferenceEquation(2, 6, [[2, 2]] * 6))
    assert iota_on_frieze(f) == gale_on_frieze(f)


def _printed_x(t):
    t1, t2, t3, t4, t5, t6 = t
    return RatMatrix([
        [1, t4, t4 * t5, t4 * t5 * t6, 0],
        [0, 1, t5 + t1, t1 * t2 + t1 * t6 + t5 * t6, t1 * t2 * t3],
        [0, 0, 1, t6 + t2, t2 * t3],
        [0, 0, 0, 1, t3],
        [0, 0, 0, 0, 1],
    ])


def _printed_x_iota(t):
    t1, t2, t3, t4, t5, t6 = t
    return RatMatrix([
        [1, t4, t4 * t1, 0, 0],
        [0, 1, t5 + t1, t2 * t5, 0],
        [0, 0, 1, t6 + t2, t6 * t3],
        [0, 0, 0, 1, t3],
        [0, 0, 0, 0, 1],
    ])


def _reversed_word(t):
    out = RatMatrix.identity(5)
    for i, v in zip((3, 2, 1, 4, 3, 2), reversed(t)):
        out = out @ elementary_jacobi(5, i, v)
    return out


@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=6, max_size=6))
def test_gr25_factorization_generic(t):
    x = gr25_factor_product(t)
    assert x == _printed_x(t)
    assert iota(x) == _printed_x_iota(t) == _reversed_word(t)


def test_gr25_on_friezes():
    rng = random.Random(25)
    done = 0
    while done < 20:
        t1, t2 = random_rational(rng), random_rational(rng)
        if not t1 or not t2:
            continue
        t = gr25_constrained(t1, t2)
        assert t[0] * t[3] == 1 and t[0] * t[1] * t[3] * t[4] == 1
        assert t[0] * t[1] * t[2] * t[3] * t[4] * t[5] == 1 and t[0] * t[1] * t[2] == 1
        x = gr25_factor_product(t)
        assert set(strip_windows(x, 1, 2)) == {1}
        assert set(strip_windows(iota(x), 2, 1)) == {1}
        done += 1
