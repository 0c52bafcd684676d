from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from chowkit.graded import (
    GradedElement,
    TruncatedSeries,
    newton_e_from_p,
    newton_p_from_e,
    series_add,
    series_mul,
    series_pow,
)
from chowkit.spaces import Grassmannian, ProjectiveSpace


def S(coeffs, D):
    return TruncatedSeries(coeffs, D)


def test_series_examples():
    assert series_mul(S([1, 1], 3), S([1, -1], 3)) == S([1, 0, -1], 3)
    assert S([1, 2], 2) ** 2 == S([1, 4, 4], 2)
    assert S([1, 1], 2) ** 4 == S([1, 4, 6], 2)
    assert series_add(S([1], 1), S([0, 1], 1)) == S([1, 1], 1)


def test_series_pow_examples():
    assert series_pow(S([1, -1], 3), -1) == S([1, 1, 1, 1], 3)
    assert series_pow(S([1, 2], 1), 3) == S([1, 6], 1)
    assert S([1, 6], 5) / S([1, 6], 5) == S([1], 5)


def test_series_errors():
    with pytest.raises(ValueError):
        S([1, 1], 2) + S([1, 1], 3)
    with pytest.raises(ValueError):
        S([2, 1], 2) ** -1
    with pytest.raises(TypeError):
        S([1.5], 2)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 12), st.data())
def test_pow_inverse_property(D, data):
    coeffs = [1] + [data.draw(rationals) for _ in range(D)]
    a = S(coeffs, D)
    for e in range(0, 11):
        assert series_pow(a, e) * series_pow(a, -e) == S([1], D)


def test_newton_examples_symbolic():
    c1, c2, c3 = sympy.symbols("c1 c2 c3")
    p = newton_p_from_e([c1, c2])
    assert sympy.expand(p[0] - c1) == 0
    assert sympy.expand(p[1] - (c1**2 - 2 * c2)) == 0
    p3 = newton_p_from_e([c1, c2, c3])[2]
    assert sympy.expand(p3 - (c1**3 - 3 * c1 * c2 + 3 * c3)) == 0
    assert newton_p_from_e([0, 0, 0]) == [0, 0, 0]


def test_newton_line_bundle_pattern():
    c1 = sympy.Symbol("c1")
    e = newton_e_from_p([c1, c1**2])
    assert sympy.expand(e[0] - c1) == 0 and sympy.expand(e[1]) == 0


def test_newton_two_equal_roots():
    t = sympy.Symbol("t")
    e = [sympy.expand(x) for x in newton_e_from_p([2 * t, 2 * t**2, 2 * t**3])]
    # oracle: elementary symmetric functions of the multiset {t, t}
    roots = [t, t]
    oracle = [sum(roots), roots[0] * roots[1], 0]
    assert [sympy.expand(a - b) for a, b in zip(e, oracle)] == [0, 0, 0]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.data())
def test_newton_round_trip(D, data):
    e = [data.draw(rationals) for _ in range(D)]
    assert newton_e_from_p(newton_p_from_e(e)) == e
    p = [data.draw(rationals) for _ in range(D)]
    assert newton_p_from_e(newton_e_from_p(p)) == p


def test_graded_element_truncation_and_zeroes():
    P = ProjectiveSpace(3)
    x = GradedElement(P, {0: 1, 2: 0, 4: 5})
    assert x.terms == {0: 1}
    h = P.hyperplane()
    assert (h ** 4).is_zero()
    assert (1 + h) * (1 - h) == 1 - h * h


def test_graded_element_rejects_floats_and_mixing():
    P, Q = ProjectiveSpace(2), ProjectiveSpace(3)
    with pytest.raises(TypeError):
        GradedElement(P, {1: 0.5})
    with pytest.raises(ValueError):
        P.hyperplane() + Q.hyperplane()
    with pytest.raises(TypeError):
        P.hyperplane() * 0.5


def test_inverse_of_unit():
    P = ProjectiveSpace(4)
    h = P.hyperplane()
    x = 1 + 3 * h + h * h
    assert x * x.inverse() == P.one()
    with pytest.raises(ValueError):
        (2 + h).inverse()


def _all_reduced(x: GradedElement):
    for c in x.terms.values():
        f = Fraction(c)
        assert f.denominator > 0 and gcd(f.numerator, f.denominator) == 1
        assert not isinstance(c, float)


def test_golden_no_unreduced_rationals():
    # a computation with heavy division: Chern character on a Grassmannian
    from chowkit.sheaves import tautological_sub

    G = Grassmannian(2, 5)
    E = tautological_sub(G)
    for d, x in E.ch.items():
        _all_reduced(x)
    _all_reduced(E.total_chern)
    assert any(Fraction(c).denominator > 1 for x in E.ch.values() for c in x.terms.values())
