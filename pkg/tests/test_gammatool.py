"""Tests for the gamma-driven constructions."""

import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import fractions

from pseudoinv.core.fps import LaurentPoly, Series, exp, recip
from pseudoinv.core.gammatool import (
    GammaFlavor,
    GammaSpec,
    GammaVanishesAtOne,
    NotAPalindrome,
    ZeroScale,
    b_from_gamma_egf,
    b_from_gamma_ogf,
    b_scale,
    bell_companion,
    check_eta_H,
    companion_from_gamma,
    companion_via_half,
    darga,
    eta_H_laurent,
    h_from_gamma,
    is_generalized_palindrome,
    quad_closed_form,
    scale_pair,
    solve_g,
)
from pseudoinv.core.pseudo import BSequence, b_from_f, b_from_half
from pseudoinv.core.riordan import Flavor, RiordanArray, is_pseudo_involution, pascal

LITTLE_SCHROEDER = LaurentPoly({1: -1, 2: 2})
DOUBLED_CATALAN = LaurentPoly({0: Fraction(1, 2), 1: 1, 2: Fraction(1, 2)})
MOTZKIN = LaurentPoly({0: Fraction(3, 2), 2: Fraction(1, 2)})
TREES = LaurentPoly({1: 1})
TWO_COLORED = LaurentPoly({0: 1, 1: 1})

laurent_polys = st.dictionaries(
    st.integers(min_value=-3, max_value=4),
    st.integers(min_value=-3, max_value=3),
    min_size=1,
    max_size=4,
).map(LaurentPoly)


def _prefix(values):
    return tuple(Fraction(v) for v in values)


def test_solve_g_little_schroeder():
    g = solve_g(GammaSpec(LITTLE_SCHROEDER), 5)
    assert g.coeffs == _prefix([1, 1, 3, 11, 45, 197])


def test_solve_g_motzkin():
    g = solve_g(GammaSpec(MOTZKIN), 5)
    assert g.coeffs == _prefix([1, 2, 2, 4, 8, 18])


def test_solve_g_labeled_trees():
    T = solve_g(GammaSpec(TREES, GammaFlavor.EGF), 6)
    assert T.coeffs[:5] == (1, 1, Fraction(3, 2), Fraction(8, 3), Fraction(125, 24))
    assert exp(T.shift(1).truncate(6)) == T


def test_companion_little_schroeder():
    f = companion_from_gamma(GammaSpec(LITTLE_SCHROEDER), 4)
    assert f.coeffs == _prefix([0, 1, 5, 25, 127])


@pytest.mark.parametrize(
    "gamma, flavor",
    [(DOUBLED_CATALAN, GammaFlavor.OGF), (TREES, GammaFlavor.EGF), (TWO_COLORED, GammaFlavor.EGF)],
)
def test_palindromes_have_bell_companions(gamma, flavor):
    spec = GammaSpec(gamma, flavor)
    assert is_generalized_palindrome(gamma)
    assert bell_companion(spec, 10) == companion_from_gamma(spec, 10)


def test_two_colored_companion_is_zs():
    spec = GammaSpec(TWO_COLORED, GammaFlavor.EGF)
    S = solve_g(spec, 8)
    assert companion_from_gamma(spec, 8, S) == S.shift(1).truncate(8)
    assert S.coeffs[:4] == (1, 2, 4, Fraction(28, 3))


def test_darga_and_palindromes():
    assert darga(TREES) == 2
    assert darga(TWO_COLORED) == 1
    assert darga(LITTLE_SCHROEDER) == 3
    assert not is_generalized_palindrome(LITTLE_SCHROEDER)
    with pytest.raises(NotAPalindrome):
        bell_companion(GammaSpec(LITTLE_SCHROEDER), 4)


@settings(max_examples=30, deadline=None)
@given(laurent_polys, laurent_polys)
def test_darga_is_additive(a, b):
    assume(not a.is_zero() and not b.is_zero())
    assert darga(a * b) == darga(a) + darga(b)
    if is_generalized_palindrome(a) and is_generalized_palindrome(b):
        assert is_generalized_palindrome(a * b)


def test_gamma_must_not_vanish_at_one():
    with pytest.raises(GammaVanishesAtOne):
        GammaSpec(LaurentPoly({0: 1, 1: -1}))


def test_gamma_spec_from_json():
    spec = GammaSpec.from_json({"flavor": "egf", "gamma": {"0": "1", "1": "1"}})
    assert spec.flavor is GammaFlavor.EGF
    assert spec.gamma == TWO_COLORED
    with pytest.raises(ValueError):
        GammaSpec.from_json({"flavor": "bgf", "gamma": {"1": "1"}})
    with pytest.raises(ValueError):
        GammaSpec.from_json({"gamma": [1, 2]})


def test_h_from_gamma_labeled_trees():
    h = h_from_gamma(GammaSpec(TREES, GammaFlavor.EGF), 5)
    assert h.coeffs == (0, 1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24))


@pytest.mark.parametrize(
    "gamma, flavor",
    [
        (DOUBLED_CATALAN, GammaFlavor.OGF),
        (LITTLE_SCHROEDER, GammaFlavor.OGF),
        (MOTZKIN, GammaFlavor.OGF),
        (TREES, GammaFlavor.EGF),
        (TWO_COLORED, GammaFlavor.EGF),
    ],
)
def test_companion_via_half_matches_closed_form(gamma, flavor):
    spec = GammaSpec(gamma, flavor)
    assert companion_via_half(spec, 10) == companion_from_gamma(spec, 10)


def test_linear_gamma_half_gives_constant_b():
    h = h_from_gamma(GammaSpec(LaurentPoly({0: 1, 1: 3})), 12)
    assert b_from_half(h).truncate(4).b == (2, 0, 0, 0, 0)


@pytest.mark.parametrize(
    "gamma, eta, H",
    [
        (LITTLE_SCHROEDER, {0: 1, 1: -2}, {0: 5, 1: 2}),
        (MOTZKIN, {0: 4, 1: 3, 2: Fraction(3, 4)}, {1: Fraction(1, 2)}),
        (LaurentPoly({0: 1, 1: 2, 2: 3}), {0: 36, 1: 20, 2: 3}, {0: 10, 1: 3}),
    ],
)
def test_eta_and_H(gamma, eta, H):
    assert eta_H_laurent(gamma) == (LaurentPoly(eta), LaurentPoly(H))
    assert check_eta_H(gamma)


@settings(max_examples=30, deadline=None)
@given(laurent_polys)
def test_eta_H_substitutions_hold(gamma):
    assume(gamma.value_at_one() != 0)
    assert check_eta_H(gamma)


def test_b_from_gamma_ogf_little_schroeder():
    assert b_from_gamma_ogf(LITTLE_SCHROEDER, 5).b == _prefix([5, 2, -4, 8, -16, 32])


def test_b_from_gamma_ogf_motzkin_against_sympy():
    z = sp.Symbol("z")
    closed = (1 - 3 * z - sp.sqrt(1 - 6 * z - 3 * z**2)) / (3 * z)
    poly = sp.series(closed, z, 0, 25).removeO()
    expected = tuple(Fraction(int(c.p), int(c.q)) for c in (sp.Rational(poly.coeff(z, n)) for n in range(25)))
    b = b_from_gamma_ogf(MOTZKIN, 24).b
    assert b == expected
    assert b == b_from_f(companion_from_gamma(GammaSpec(MOTZKIN), 50), 24).b
    assert b[:5] == (0, 2, 6, 24, 108)


def test_b_from_gamma_ogf_linear():
    assert b_from_gamma_ogf(LaurentPoly({0: 1, 1: 3}), 4).b == (2, 0, 0, 0, 0)


def test_b_from_gamma_egf_labeled_trees():
    b = b_from_gamma_egf(TREES, 5)
    assert b.b == tuple(Fraction(2, math.factorial(2 * n + 1)) for n in range(6))
    assert b.beta() == (2,) * 6


def test_b_from_gamma_egf_two_colored():
    spec = GammaSpec(TWO_COLORED, GammaFlavor.EGF)
    f = companion_from_gamma(spec, 10)
    b = b_from_gamma_egf(TWO_COLORED, 4)
    assert b.b == b_from_f(f, 4).b
    assert b.b[:2] == (2, Fraction(4, 3))


def test_constant_gamma_egf_has_zero_b():
    assert b_from_gamma_egf(LaurentPoly({0: 1}), 4).b == (0,) * 5


@settings(max_examples=15, deadline=None)
@given(laurent_polys, st.sampled_from(list(GammaFlavor)))
def test_random_gammas_give_pseudo_involutions(gamma, flavor):
    assume(gamma.value_at_one() != 0)
    spec = GammaSpec(gamma, flavor)
    g = solve_g(spec, 12)
    f = companion_from_gamma(spec, 12, g)
    array_flavor = Flavor.EXPONENTIAL if flavor is GammaFlavor.EGF else Flavor.ORDINARY
    assert is_pseudo_involution(RiordanArray(g, f, array_flavor))
    method = b_from_gamma_egf if flavor is GammaFlavor.EGF else b_from_gamma_ogf
    assert method(gamma, 5).b == b_from_f(f, 5).b


def test_b_scale_matches_scaled_pascal():
    D = pascal(12)
    _, F = scale_pair(D.g, D.f, 2)
    assert b_scale(BSequence((Fraction(1), 0, 0, 0, 0)), 2).b == (2, 0, 0, 0, 0)
    assert b_from_f(F, 4).b == (2, 0, 0, 0, 0)


def test_scaling_by_zero_is_rejected():
    with pytest.raises(ZeroScale):
        b_scale(BSequence((Fraction(1),)), 0)
    with pytest.raises(ZeroScale):
        scale_pair(Series.one(3), Series.variable(3), 0)


@pytest.mark.parametrize(
    "a, b, c, expected",
    [
        (0, -1, 2, [5, 2, -4, 8, -16]),
        (1, 1, 0, [0, 0, 0, 0, 0]),
        (Fraction(3, 2), 0, Fraction(1, 2), [0, 2, 6, 24, 108]),
        (Fraction(1, 2), 1, Fraction(1, 2), [2, 2, 4, 10, 28]),
        (1, 1, 2, [6, 32, 352, 4896, 76384]),
        (2, 1, 3, [8, 108, 3132, 114156, 4663548]),
    ],
)
def test_quadratic_closed_form(a, b, c, expected):
    assert quad_closed_form(a, b, c, 4).b == _prefix(expected)


@settings(max_examples=50, deadline=None)
@given(fractions(), fractions(), fractions())
def test_quadratic_closed_form_matches_eta_H_route(a, b, c):
    assume(a + b + c != 0)
    gamma = LaurentPoly({0: a, 1: b, 2: c})
    assert quad_closed_form(a, b, c, 6).b == b_from_gamma_ogf(gamma, 6).b


@settings(max_examples=30, deadline=None)
@given(fractions(), fractions())
def test_quadratic_closed_form_without_constant_term_is_fractional_linear(b, c):
    assume(b + c != 0)
    expected = Series([b + 3 * c, -(b - c) * c**2], 10) * recip(Series([1, -b * c], 10))
    assert quad_closed_form(0, b, c, 10).b == expected.coeffs


@settings(max_examples=30, deadline=None)
@given(fractions(), fractions())
def test_quadratic_closed_form_for_linear_gamma_is_constant(a, b):
    assume(a + b != 0)
    assert quad_closed_form(a, b, 0, 8).b == (b - a,) + (Fraction(0),) * 8


def test_quadratic_closed_form_needs_nonzero_sum():
    with pytest.raises(GammaVanishesAtOne):
        quad_closed_form(1, -1, 0, 3)
