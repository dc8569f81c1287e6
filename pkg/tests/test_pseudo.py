"""Tests for B-sequences, companions and pseudo-halves."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import coefficient_lists
from pseudoinv.core.errors import InsufficientPrecision
from pseudoinv.core.fps import LaurentPoly, Series, catalan, parity_parts, recip, sqrt, stretch
from pseudoinv.core.gammatool import GammaFlavor, GammaSpec, companion_from_gamma, solve_g
from pseudoinv.core.pseudo import (
    BSequence,
    InconsistentBEquation,
    NotPseudoInvolutory,
    NotUnitDiagonal,
    PhiNotOdd,
    RecurrenceViolated,
    UnderdeterminedCompanion,
    b_from_f,
    b_from_half,
    b_from_matrix,
    beta_check_matrix,
    canonical_root,
    companion_of,
    g_family,
    h_from_u,
    half_from_b,
    pseudo_half,
)
from pseudoinv.core.riordan import (
    Flavor,
    RiordanArray,
    TriangularMatrix,
    entries,
    is_pseudo_involution,
    multiply,
    pascal,
    pseudo_inverse,
)

P = 24


def doubled_catalan(prec: int = P) -> tuple[Series, Series]:
    g = catalan(prec) * 2 - 1
    return g, g.shift(1).truncate(prec)


def fibonacci_g(prec: int) -> Series:
    return recip(Series([1, -1, -1], prec))


def test_pascal_b_sequence():
    assert b_from_f(pascal(10).f, 4).b == (1, 0, 0, 0, 0)


def test_doubled_catalan_b_is_twice_catalan():
    _, f = doubled_catalan(2 * P + 2)
    assert b_from_f(f, P).b == (catalan(P) * 2).coeffs


def test_b_from_f_rejects_non_pseudo_involutions():
    with pytest.raises(InconsistentBEquation) as excinfo:
        b_from_f(Series([0, 1, 1], 6))
    assert excinfo.value.degree == 3


def test_b_from_f_needs_precision():
    with pytest.raises(InsufficientPrecision):
        b_from_f(pascal(6).f, 4)


def test_b_sequence_beta_and_truncate():
    b = BSequence((Fraction(2), Fraction(1, 3), Fraction(1, 60)))
    assert b.beta() == (2, 2, 2)
    assert b.truncate(1).b == (2, Fraction(1, 3))
    with pytest.raises(InsufficientPrecision):
        b.truncate(5)
    assert b.to_json(include_beta=True)["beta"] == ["2", "2", "2"]


def test_b_from_matrix_matches_definition():
    g, f = doubled_catalan(12)
    M = entries(RiordanArray(g, f), 12)
    assert b_from_matrix(M).b == b_from_f(f, 5).b


def test_b_from_matrix_detects_a_broken_entry():
    M = entries(pascal(10), 10).replace(5, 2, 11)
    with pytest.raises(RecurrenceViolated) as excinfo:
        b_from_matrix(M)
    assert (excinfo.value.n, excinfo.value.k) == (5, 2)


def test_b_from_matrix_needs_unit_diagonal():
    with pytest.raises(NotUnitDiagonal):
        b_from_matrix(TriangularMatrix([[2], [0, 1], [0, 0, 1]]))


def test_beta_recurrence_for_labeled_trees():
    spec = GammaSpec(LaurentPoly({1: 1}), GammaFlavor.EGF)
    g = solve_g(spec, 10)
    f = companion_from_gamma(spec, 10, g)
    M = entries(RiordanArray(g, f, Flavor.EXPONENTIAL), 10)
    assert beta_check_matrix(M, [2] * 6)
    assert not beta_check_matrix(M, [3] + [2] * 5)
    with pytest.raises(InsufficientPrecision):
        beta_check_matrix(M, [2] * 4)
    with pytest.raises(InsufficientPrecision):
        beta_check_matrix(entries(pascal(4), 4), [])


def test_companion_of_fibonacci():
    f = companion_of(fibonacci_g(5), 5)
    assert f.coeffs == (0, 1, 3, 9, 32, 126)


def test_companion_of_doubled_catalan_is_zg():
    g, f = doubled_catalan(12)
    assert companion_of(g, 12) == f


def test_companion_of_one_is_underdetermined():
    with pytest.raises(UnderdeterminedCompanion):
        companion_of(Series.one(6), 6)


def test_pseudo_half_of_doubled_catalan():
    _, f = doubled_catalan()
    h = pseudo_half(f)
    C2 = stretch(catalan(P), 2)
    expected = sqrt(C2).shift(1) + C2.shift(2)
    assert h.agrees_with(expected, P)
    h_odd, h_even = parity_parts(h)
    assert h_odd * h_odd == (1 + (h_even * h_even).shift(1)).truncate(h_odd.prec)


def test_pseudo_half_rejects_non_pseudo_involutions():
    with pytest.raises(NotPseudoInvolutory):
        pseudo_half(Series([0, 1, 1, 0, 0, 0], 6))


def test_b_from_half_recovers_b():
    _, f = doubled_catalan()
    b = b_from_half(pseudo_half(f))
    assert b.origin == "half"
    assert b.truncate(10).b == (catalan(10) * 2).coeffs


def test_half_from_b_and_u_route_agree():
    B = catalan(12) * 2
    _, f = doubled_catalan(26)
    h = pseudo_half(f)
    assert half_from_b(B).agrees_with(h, 20)
    assert h_from_u(B).agrees_with(h, 20)


@settings(max_examples=20, deadline=None)
@given(coefficient_lists(min_size=1, max_size=4))
def test_g_family_gives_pseudo_involutions(odd_coeffs):
    _, f = doubled_catalan(12)
    phi_terms = [0] * 9
    for i, c in enumerate(odd_coeffs):
        phi_terms[2 * i + 1] = c
    phi = Series(phi_terms, 12)
    assert is_pseudo_involution(RiordanArray(g_family(f, phi), f))


def test_g_family_needs_odd_phi():
    _, f = doubled_catalan(8)
    with pytest.raises(PhiNotOdd):
        g_family(f, Series([0, 1, 1], 8))


def test_canonical_root_times_pseudo_inverse():
    g, f = doubled_catalan(12)
    D = RiordanArray(g, f)
    X = canonical_root(D)
    product = multiply(X, pseudo_inverse(X))
    assert product.agrees_with(D, product.prec)


def _checkerboard(even_tail, odd_tail, prec: int) -> RiordanArray:
    g = [Fraction(0)] * (prec + 1)
    f = [Fraction(0)] * (prec + 1)
    g[0], f[1] = Fraction(1), Fraction(1)
    for i, c in enumerate(even_tail):
        if 2 * i + 2 <= prec:
            g[2 * i + 2] = c
    for i, c in enumerate(odd_tail):
        if 2 * i + 3 <= prec:
            f[2 * i + 3] = c
    return RiordanArray(Series(g, prec), Series(f, prec))


@settings(max_examples=25, deadline=None)
@given(coefficient_lists(min_size=0, max_size=4), coefficient_lists(min_size=0, max_size=4))
def test_canonical_root_times_any_checkerboard(even_tail, odd_tail):
    for D in (RiordanArray(*doubled_catalan(12)), pascal(12)):
        X = canonical_root(D)
        X = multiply(X, _checkerboard(even_tail, odd_tail, X.prec))
        product = multiply(X, pseudo_inverse(X))
        assert product.agrees_with(D, min(product.prec, D.prec))
