from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from friezekit.equations import DifferenceEquation, DomainError
from friezekit.friezes import (
    FriezePattern,
    PartialFrieze,
    ValidationError,
    check_windows,
    cyclic_minors,
    diagonal_profile,
    equation_from_frieze,
    frieze_from_equation,
    horizontal_flip,
    horizontal_period,
    matrix_form,
    sl_check,
    tame_check,
)
from friezekit.instances import decode, load_fixture

from helpers import all_instances, base_instances, hill_instances

QUIDDITY = DifferenceEquation.hill([1, 3, 1, 2, 2])


def diamond_rule_band(quiddity):
    """SL_2 frieze rows from the quiddity by the unimodular rule, written independently."""
    n = len(quiddity)
    w = n - 3
    rows = [[Fraction(1)] * n, [Fraction(x) for x in quiddity]]
    for _ in range(w - 1):
        below, cur = rows[-2], rows[-1]
        # east * west - north * south = 1 with south the row below
        rows.append([(cur[i] * cur[(i + 1) % n] - 1) / below[(i + 1) % n] for i in range(n)])
    return [[rows[t + 1][i] for t in range(w)] for i in range(n)]


def sympy_continuant(a):
    m = sympy.zeros(len(a), len(a))
    for r, x in enumerate(a):
        m[r, r] = sympy.Rational(x.numerator, x.denominator)
        if r + 1 < len(a):
            m[r, r + 1] = m[r + 1, r] = 1
    return Fraction(str(m.det()))


def test_quiddity_frieze_frozen_values():
    f = frieze_from_equation(QUIDDITY)
    assert f.band == tuple(tuple(Fraction(x) for x in row) for row in [[1, 2], [3, 2], [1, 1], [2, 3], [2, 1]])
    assert f.band == tuple(tuple(r) for r in diamond_rule_band([1, 3, 1, 2, 2]))


@pytest.mark.parametrize("eq", hill_instances(), ids=lambda e: f"n{e.n}")
def test_sl2_friezes_match_continuants(eq):
    f = frieze_from_equation(eq)
    for i in range(eq.n):
        for t in range(eq.width):
            assert f.entry(i, i + t) == sympy_continuant([eq.a(i + s, 1) for s in range(t + 1)])
    # one step past the strip the solution meets the row of ones, then zero
    for i in range(eq.n):
        tail = eq.evolve([0, 1], eq.width + 2, start=i)
        assert tail[-2:] == [1, 0]


def test_entry_outside_band():
    f = frieze_from_equation(DifferenceEquation(2, 6, [[2, 2]] * 6))
    w, k = f.w, f.k
    assert f.entry(3, 3 - 1) == 1 and f.entry(3, 3 + w) == 1
    assert all(f.entry(3, 3 + t) == 0 for t in list(range(-k - 1, -1)) + list(range(w + 1, w + k + 1)))


def test_alpha_coordinates():
    f = frieze_from_equation(QUIDDITY)
    for i in range(5):
        for r in (1, 2):
            assert f.alpha(i, r) == f.entry(i + 1, i + 1 + f.w - r)
    assert FriezePattern.from_alpha_rows(1, f.alpha_rows()) == f


@pytest.mark.parametrize("eq", all_instances(), ids=lambda e: f"k{e.k}n{e.n}")
def test_round_trip_and_checks(eq):
    f = frieze_from_equation(eq)
    assert sl_check(f).ok and tame_check(f).ok
    assert equation_from_frieze(f) == eq
    assert frieze_from_equation(equation_from_frieze(f)) == f
    assert horizontal_period(f) == eq.n
    assert set(cyclic_minors(matrix_form(f, 0))) == {1}


def test_diagonal_profile_is_a_solution():
    eq = base_instances()[20]
    prof = diagonal_profile(eq, 2)
    assert eq.residual(prof, offset=2) == []


def test_non_superperiodic_rejected():
    with pytest.raises(DomainError):
        frieze_from_equation(DifferenceEquation.hill([1, 1, 1, 1, 1]))


def test_perturbed_frieze_fails_and_names_window():
    f = frieze_from_equation(QUIDDITY).with_entry(2, 2, 5)
    rep = sl_check(f)
    assert not rep.ok
    assert rep.first_failure.size == 2
    with pytest.raises(ValidationError) as err:
        equation_from_frieze(f)
    assert err.value.failure is not None


@pytest.mark.parametrize("name", ["sl3_all_twos", "sl3_two_three"])
def test_width_two_sl3_fixtures_validate(name):
    f = decode(load_fixture(name))
    assert (f.k, f.w, f.n) == (2, 2, 6)
    sl, tame = check_windows(f)
    assert sl.ok and tame.ok
    assert equation_from_frieze(f).is_superperiodic()


def test_sl3_two_three_rows():
    f = decode(load_fixture("sl3_two_three"))
    assert [sorted(set(r)) for r in f.alpha_rows()] == [[1, 5], [2, 3]]


def test_non_tame_fixture():
    f = decode(load_fixture("non_tame_coxeter"))
    assert isinstance(f, PartialFrieze)
    assert (f.k, f.w) == (1, 3)
    assert [f.entry(c, c) for c in range(5)] == [0, 1, 0, 2, 0]
    assert [f.entry(i, i + 2) for i in range(-1, 4)] == [1, 0, 2, 0, 3]
    sl, tame = check_windows(f)
    assert sl.ok and sl.windows > 0
    assert not tame.ok
    first = tame.first_failure
    assert (first.i, first.j, first.size, first.value) == (-1, 1, 3, 4)


def test_unknown_entries_are_skipped():
    f = PartialFrieze(1, 2, {(0, 0): 2})
    assert f.entry(5, 5) is None
    sl, _ = check_windows(f)
    assert all(w.i <= 1 for w in sl.failures)


def test_flip_of_sl2_frieze_is_itself():
    for eq in hill_instances():
        f = frieze_from_equation(eq)
        assert horizontal_flip(f) == f


@pytest.mark.parametrize("eq", all_instances()[::2], ids=lambda e: f"k{e.k}n{e.n}")
def test_double_flip_is_relabeling(eq):
    f = frieze_from_equation(eq)
    assert horizontal_flip(horizontal_flip(f)) == f.shifted(eq.k - 1)


@given(st.sampled_from(all_instances()), st.integers(-12, 12))
def test_shift_preserves_validity(eq, s):
    f = frieze_from_equation(eq).shifted(s)
    assert sl_check(f).ok and tame_check(f).ok
    assert equation_from_frieze(f) == eq.shifted(s)


@given(st.sampled_from(base_instances()), st.data())
def test_single_entry_perturbation_breaks_sl(eq, data):
    f = frieze_from_equation(eq)
    i = data.draw(st.integers(0, f.n - 1))
    t = data.draw(st.integers(0, f.w - 1))
    delta = data.draw(st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(bool))
    g = f.with_entry(i, i + t, f.entry(i, i + t) + delta)
    assert not (sl_check(g).ok and tame_check(g).ok)
