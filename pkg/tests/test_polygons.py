import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from friezekit.equations import DifferenceEquation
from friezekit.gale import projective_dual
from friezekit.linalg import RatMatrix
from friezekit.maps import hill_from_orbit, make_map, random_rational, random_seed
from friezekit.polygons import (
    DegeneratePolygonError,
    Obstruction,
    PolygonLift,
    alternating_cross_ratio_check,
    alternating_cross_ratios,
    circulant_corank,
    circulant_nullity,
    cross_ratio,
    dual_polygon,
    equation_from_polygon,
    inverse_cross_ratio,
    normalize_point,
    polygon_from_equation,
    polygon_lift,
    projective_transform,
    projectively_equivalent,
    rational_root,
)

from helpers import base_instances, hill_instances

QUIDDITY = DifferenceEquation.hill([1, 3, 1, 2, 2])
ids = lambda e: f"k{e.k}n{e.n}"  # noqa: E731
coprime = [e for e in base_instances() if gcd(e.n, e.k + 1) == 1]


def test_normalize_point():
    assert normalize_point([0, 2, 4]) == (0, 1, 2)
    assert normalize_point(["-1/2", 3]) == (1, -6)
    with pytest.raises(ValueError):
        normalize_point([0, 0])


def test_quiddity_points_distinct():
    pts = polygon_from_equation(QUIDDITY)
    assert len(set(pts)) == 5
    assert pts[0] == (1, 0) and pts[1] == (0, 1)


def test_all_two_hexagon_non_degenerate():
    lift = polygon_lift(DifferenceEquation(2, 6, [[2, 2]] * 6))
    assert lift.windows() == [1] * 6
    relifted = PolygonLift(2, lift.points())
    assert all(c != 0 for c in relifted.windows())


def test_round_trip_quiddity_and_rescaled():
    lift = polygon_lift(QUIDDITY)
    assert equation_from_polygon(lift) == QUIDDITY
    assert equation_from_polygon(lift.rescaled([2, Fraction(1, 2), 1, 1, 1])) == QUIDDITY


def test_gcd_obstruction():
    eq = hill_from_orbit(6, random_seed(make_map("F", 6), random.Random(6)))
    res = equation_from_polygon(polygon_lift(eq))
    assert isinstance(res, Obstruction)
    assert res.fiber_dimension == 1 and "gcd" in res.reason


def test_irrational_closing_root_certificate():
    # k = 1, n = 5: multiplying all t_i t_{i+1} c_i = 1 gives (prod t)^2 = 1 / prod c
    lift = PolygonLift(1, [(1, 0), (0, 1), (1, 1), (1, 2), (2, 3)])
    assert lift.windows() == [1, -1, 1, -1, 3]
    res = equation_from_polygon(lift)
    assert isinstance(res, Obstruction)
    assert res.certificate == Fraction(1, 3) and res.fiber_dimension == 0
    # rescaling a vertex changes the closing value by a square only
    res2 = equation_from_polygon(lift.rescaled([2, 1, 1, 1, 1]))
    assert isinstance(res2, Obstruction) and rational_root(res2.certificate / res.certificate, 2) is not None
    neg = equation_from_polygon(PolygonLift(1, [(1, 0), (0, 1), (1, 1), (1, 2), (1, 3)]))
    assert isinstance(neg, Obstruction) and neg.certificate < 0


def test_degenerate_polygon():
    with pytest.raises(DegeneratePolygonError):
        equation_from_polygon(PolygonLift(1, [(1, 0), (1, 0), (0, 1), (1, 1), (1, 2)]))


@pytest.mark.parametrize("eq", coprime, ids=ids)
def test_round_trip_from_points(eq):
    pts = polygon_from_equation(eq)
    assert equation_from_polygon(pts, k=eq.k) == eq


@pytest.mark.parametrize("eq", coprime[::2], ids=ids)
def test_round_trip_after_rescaling(eq):
    rng = random.Random(eq.n)
    factors = [Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.choice([1, 2, 7])) for _ in range(eq.n)]
    assert equation_from_polygon(polygon_lift(eq).rescaled(factors)) == eq


def test_rational_root():
    assert rational_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert rational_root(Fraction(-8, 27), 3) == Fraction(-2, 3)
    assert rational_root(Fraction(9, 4), 2) == Fraction(3, 2)
    assert rational_root(Fraction(-4), 2) is None
    assert rational_root(Fraction(2), 2) is None
    assert rational_root(Fraction(10**40), 4) == 10**10


@pytest.mark.parametrize("n,k,expected", [(5, 1, 0), (6, 1, 1), (12, 3, 3)])
def test_circulant_examples(n, k, expected):
    assert circulant_corank(n, k) == expected == circulant_nullity(n, k)


def test_circulant_formula_exhaustive():
    for n in range(3, 13):
        for k in range(1, n - 1):
            assert circulant_corank(n, k) == gcd(n, k + 1) - 1 == circulant_nullity(n, k)


def test_cross_ratio_conventions():
    assert cross_ratio(0, 1, 2, 3) == Fraction((0 - 2) * (1 - 3), (0 - 1) * (2 - 3))
    assert inverse_cross_ratio(0, 1, 2, 3) == Fraction((0 - 1) * (2 - 3), (0 - 2) * (1 - 3))
    assert cross_ratio((0, 1), (1, 1), (2, 1), (3, 1)) == cross_ratio(0, 1, 2, 3)
    # representative scaling and sign do not matter
    assert cross_ratio((0, -5), (3, 3), (2, 1), (-9, -3)) == cross_ratio(0, 1, 2, 3)


@pytest.mark.parametrize("eq", [e for e in hill_instances() if e.n % 2 == 0], ids=ids)
def test_alternating_product_on_hill_polygons(eq):
    pts = polygon_lift(eq).vectors
    assert alternating_cross_ratio_check(pts)
    x = alternating_cross_ratios(pts)
    assert x == [eq.a(i + 1, 1) * eq.a(i + 2, 1) for i in range(eq.n)]


def test_alternating_product_fails_on_random_hexagons():
    rng = random.Random(66)
    count = 0
    while count < 50:
        pts = [random_rational(rng) for _ in range(6)]
        if len(set(pts)) < 6:
            continue
        assert not alternating_cross_ratio_check(pts)
        count += 1


def test_alternating_check_errors():
    with pytest.raises(ValueError):
        alternating_cross_ratio_check([0, 1, 2, 3, 4])
    with pytest.raises(ValueError):
        alternating_cross_ratio_check([0, 0, 2, 3, 4, 5])


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4).filter(lambda m: m[0] * m[3] != m[1] * m[2]))
def test_alternating_check_is_projectively_invariant(m):
    eq = hill_instances()[3]
    pts = polygon_lift(eq).vectors
    moved = [(m[0] * p[0] + m[1] * p[1], m[2] * p[0] + m[3] * p[1]) for p in pts]
    assert alternating_cross_ratios(moved) == alternating_cross_ratios(pts)


def test_projective_equivalence():
    eq = base_instances()[-1]
    pts = polygon_from_equation(eq)
    a = RatMatrix([[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    moved = [tuple(sum(a[r, c] * p[c] for c in range(3)) for r in range(3)) for p in pts]
    t = projective_transform(pts, moved)
    assert t is not None and t == a.scale(1 / a[0, 0] * t[0, 0])
    assert not projectively_equivalent(pts, pts[1:] + pts[:1])


@pytest.mark.parametrize("eq", [e for e in base_instances() if e.k == 2], ids=ids)
def test_dual_polygon_matches_dual_equation(eq):
    assert projectively_equivalent(dual_polygon(polygon_from_equation(eq)), polygon_from_equation(projective_dual(eq)))
