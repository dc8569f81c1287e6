"""Tests for exact truncated power series."""

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

from conftest import coefficient_lists
from pseudoinv.core.errors import InsufficientPrecision
from pseudoinv.core.fps import (
    BadConstantTerm,
    DivergentComposition,
    HalfSeries,
    LaurentPoly,
    NonIntegralHalfSeries,
    NonSquareLeadingCoefficient,
    NotDivisible,
    NotOrderOne,
    OddOrder,
    Series,
    ZeroConstantTerm,
    ZeroPolynomial,
    as_fraction,
    catalan,
    comp_inverse,
    compose,
    dilate,
    exp,
    half_lift,
    half_project,
    lagrange_inverse,
    log,
    recip,
    reflect,
    sqrt,
    stretch,
    substitute_sqrt,
)


def _sympy_prefix(expr, N: int) -> list[Fraction]:
    z = sp.Symbol("z")
    poly = sp.series(expr(z), z, 0, N + 1).removeO()
    return [Fraction(int(c.p), int(c.q)) for c in (sp.Rational(poly.coeff(z, n)) for n in range(N + 1))]


def _unit_series(coeffs, prec: int) -> Series:
    return Series([1] + list(coeffs), prec)


def _order_one(coeffs, prec: int) -> Series:
    return Series([0, 1] + list(coeffs), prec)


def test_as_fraction_refuses_floats_and_bools():
    assert as_fraction("3/4") == Fraction(3, 4)
    assert as_fraction(-2) == -2
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        as_fraction(True)


def test_precision_is_tracked_and_enforced():
    a = Series([1, 2, 3], 5)
    assert a.prec == 5
    assert a.coeffs == (1, 2, 3, 0, 0, 0)
    with pytest.raises(InsufficientPrecision):
        a[6]
    assert (a * Series([1, 1], 2)).prec == 2


def test_recip_of_one_minus_z_is_geometric():
    assert recip(Series([1, -1], 6)).coeffs == (1,) * 7


def test_recip_needs_nonzero_constant():
    with pytest.raises(ZeroConstantTerm):
        recip(Series([0, 1], 4))


def test_compose_precision_rule():
    outer = Series([1, 1, 1, 1], 3)
    inner = Series([0, 0, 1], 10)
    assert compose(outer, inner).prec == 6


def test_compose_rejects_nonzero_constant_inner_for_non_polynomial_outer():
    with pytest.raises(DivergentComposition):
        compose(Series([1, 1, 1, 1], 3), Series([1, 1], 3))


def test_compose_polynomial_outer_allows_nonzero_constant_inner():
    assert compose(Series([1, 2, 0], 2), Series([1, 1], 2)) == Series([3, 2], 2)
    # (1 + z^2) at (1 + z) is 2 + 2z + z^2, kept to the precision of inner
    assert compose(Series([1, 0, 1], 5), Series([1, 1], 4)) == Series([2, 2, 1], 4)
    assert compose(Series([0, 0], 1), Series([3, 1], 3)) == Series.zero(3)


@settings(max_examples=40, deadline=None)
@given(coefficient_lists(max_size=7))
def test_comp_inverse_matches_lagrange(tail):
    f = _order_one(tail, 8)
    inverse = comp_inverse(f)
    assert inverse == lagrange_inverse(f)
    assert compose(f, inverse) == Series.variable(8)
    assert compose(inverse, f) == Series.variable(8)


def test_comp_inverse_needs_order_one():
    with pytest.raises(NotOrderOne):
        comp_inverse(Series([0, 0, 1], 4))


@settings(max_examples=40, deadline=None)
@given(coefficient_lists(max_size=7))
def test_recip_is_multiplicative_inverse(tail):
    a = _unit_series(tail, 7)
    assert a * recip(a) == Series.one(7)


@settings(max_examples=30, deadline=None)
@given(coefficient_lists(max_size=6))
def test_sqrt_of_square(tail):
    b = _unit_series(tail, 6)
    assert sqrt(b * b) == b


def test_sqrt_closed_form_prefix():
    root = sqrt(Series([1, -10, 5], 5))
    assert root.coeffs == (1, -5, -10, -50, -300, -2000)


@pytest.mark.parametrize(
    "coeffs, expr",
    [
        ([1, -6, -3], lambda z: sp.sqrt(1 - 6 * z - 3 * z**2)),
        ([1, -10, 5], lambda z: sp.sqrt(1 - 10 * z + 5 * z**2)),
        ([4, 1], lambda z: sp.sqrt(4 + z)),
    ],
)
def test_sqrt_against_sympy(coeffs, expr):
    assert list(sqrt(Series(coeffs, 10)).coeffs) == _sympy_prefix(expr, 10)


def test_sqrt_of_even_order_loses_precision():
    root = sqrt(Series([0, 0, 1, 2], 8))
    assert root.order == 1
    assert root.prec == 7


def test_sqrt_errors():
    with pytest.raises(OddOrder):
        sqrt(Series([0, 1], 4))
    with pytest.raises(NonSquareLeadingCoefficient):
        sqrt(Series([2, 1], 4))


@settings(max_examples=30, deadline=None)
@given(coefficient_lists(max_size=6))
def test_log_inverts_exp(tail):
    a = Series([0] + tail, 6)
    assert log(exp(a)) == a


def test_exp_against_sympy():
    assert list(exp(Series([0, 1], 8)).coeffs) == _sympy_prefix(sp.exp, 8)


def test_exp_needs_zero_constant():
    with pytest.raises(BadConstantTerm):
        exp(Series([1, 1], 3))


def test_catalan_satisfies_functional_equation():
    C = catalan(10)
    assert C.coeffs[:6] == (1, 1, 2, 5, 14, 42)
    assert (1 + (C * C).shift(1)).truncate(10) == C


def test_reflect_stretch_dilate():
    a = Series([1, 2, 3], 2)
    assert reflect(a).coeffs == (1, -2, 3)
    assert stretch(a, 2).coeffs == (1, 0, 2, 0, 3, 0)
    assert dilate(a, Fraction(1, 2)).coeffs == (1, 1, Fraction(3, 4))


def test_unshift_requires_divisibility():
    assert Series([0, 0, 3, 4], 3).unshift(2).coeffs == (3, 4)
    with pytest.raises(NotDivisible):
        Series([0, 1, 3], 2).unshift(2)


def test_laurent_arithmetic_and_degrees():
    gamma = LaurentPoly({-1: 1, 0: -2, 1: 1})
    assert gamma.min_degree == -1
    assert gamma.max_degree == 1
    assert gamma.value_at_one() == 0
    assert gamma(2) == Fraction(1, 2)
    assert gamma * LaurentPoly.monomial(1) == LaurentPoly({0: 1, 1: -2, 2: 1})
    with pytest.raises(ZeroPolynomial):
        LaurentPoly().min_degree


def test_laurent_compose_with_laurent_inner():
    cross = LaurentPoly({-1: 1, 0: -2, 1: 1})
    square = LaurentPoly({2: 1})
    assert square.compose(cross) == cross * cross


def test_laurent_evaluate_uses_reciprocal_for_negative_powers():
    s = Series([1, 1], 6)
    poly = LaurentPoly({-1: 2, 0: 1, 2: 3})
    expected = recip(s) * 2 + 1 + s * s * 3
    assert poly.evaluate(s) == expected


def test_half_series_projection():
    a = Series([1, 2, 3], 2)
    assert half_project(half_lift(a)) == a
    with pytest.raises(NonIntegralHalfSeries):
        half_project(substitute_sqrt(Series([0, 1], 3)))


def test_half_series_from_terms():
    h = HalfSeries.from_terms({Fraction(1, 2): 3, 1: 2}, 2)
    assert h.coefficient(Fraction(1, 2)) == 3
    assert h.coefficient(1) == 2
    assert h.first_half_integer_exponent() == Fraction(1, 2)
    assert h.prec == 2
