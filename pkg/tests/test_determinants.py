import pytest
from hypothesis import given
from hypothesis import strategies as st

from friezekit.determinants import (
    V_interleaved,
    coefficient_from_frieze,
    continuant_U,
    continuant_U_matrix,
    cramer_coefficient,
    cramer_denominator,
    entry_determinant,
    entry_determinant_alt,
    entry_determinant_case,
    entry_matrix,
    pentadiagonal_V,
    pentadiagonal_V_matrix,
)
from friezekit.equations import DifferenceEquation
from friezekit.friezes import frieze_from_equation
from friezekit.linalg import det

from helpers import all_instances, hill_instances, third_order_instances

ids = lambda e: f"k{e.k}n{e.n}"  # noqa: E731
small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def test_small_continuants():
    assert continuant_U([]) == 1
    assert continuant_U([3]) == 3
    assert continuant_U([2, 2]) == 3
    assert continuant_U([1, 3, 1]) == 1 * (3 * 1 - 1) - 1


def test_small_pentadiagonal():
    assert pentadiagonal_V([], []) == 1
    assert pentadiagonal_V([4], []) == 4
    # det [[a1, b1], [1, a2]]
    assert pentadiagonal_V([2, 5], [3]) == 2 * 5 - 3
    # det [[a1,b1,1],[1,a2,b2],[0,1,a3]]
    a1, b1, a2, b2, a3 = 2, 3, 5, 7, 11
    assert pentadiagonal_V([a1, a2, a3], [b1, b2]) == a1 * (a2 * a3 - b2) - b1 * (a3 - 0) + 1 * (1 - 0)
    assert V_interleaved(None) == 0
    assert V_interleaved([2, 3, 5]) == pentadiagonal_V([2, 5], [3])
    with pytest.raises(ValueError):
        V_interleaved([1, 2])
    with pytest.raises(ValueError):
        pentadiagonal_V([1, 2], [])


@given(st.lists(small, max_size=7))
def test_continuant_recurrence_matches_matrix(a):
    assert continuant_U(a) == det(continuant_U_matrix(a)) if a else continuant_U(a) == 1


@given(st.lists(small, min_size=1, max_size=6), st.data())
def test_pentadiagonal_recurrence_matches_matrix(a, data):
    b = data.draw(st.lists(small, min_size=len(a) - 1, max_size=len(a) - 1))
    assert pentadiagonal_V(a, b) == det(pentadiagonal_V_matrix(a, b))


@pytest.mark.parametrize("eq", all_instances(), ids=ids)
def test_entries_three_ways(eq):
    f = frieze_from_equation(eq)
    for i in range(eq.n):
        for j in range(eq.width):
            value = f.entry(i, i + j)
            assert entry_determinant(eq, i, j) == value
            assert entry_determinant_alt(eq, i, j) == value


@pytest.mark.parametrize("eq", all_instances(), ids=ids)
def test_coefficient_reconstruction(eq):
    f = frieze_from_equation(eq)
    k = eq.k
    for i in range(eq.n):
        for j in range(k):
            assert coefficient_from_frieze(f, i, j) == eq.a(i - 1, k - j)
        assert cramer_denominator(f, i) == 1
        for l in range(1, k + 2):
            num, den = cramer_coefficient(f, i, l)
            assert num / den == eq.a(i - 1, l)


def test_hill_entries_are_continuants():
    for eq in hill_instances():
        f = frieze_from_equation(eq)
        for i in range(eq.n):
            for j in range(eq.width):
                assert f.entry(i, i + j) == continuant_U([eq.a(i + t, 1) for t in range(j + 1)])


def test_third_order_entries_are_pentadiagonal():
    for eq in third_order_instances():
        f = frieze_from_equation(eq)
        for i in range(eq.n):
            for j in range(eq.width):
                a = [eq.a(i + t, 1) for t in range(j + 1)]
                b = [eq.a(i + t + 1, 2) for t in range(j)]
                assert f.entry(i, i + j) == pentadiagonal_V(a, b)


def test_entry_matrix_shape():
    eq = DifferenceEquation(2, 6, [[2, 2]] * 6)
    m = entry_matrix(eq, 0, 1)
    assert m == [[2, 1], [2, 2]]
    with pytest.raises(ValueError):
        entry_matrix(eq, 0, 2)


def test_branch_labels():
    eq = third_order_instances()[-1]
    assert [entry_determinant_case(eq, j) for j in range(eq.width)] == ["short", "both", "long", "long", "long"][: eq.width]
