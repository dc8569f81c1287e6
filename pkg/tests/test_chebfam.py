"""Tests for the Chebyshev-type polynomial families."""

import math
from fractions import Fraction

import pytest

from pseudoinv.core.chebfam import (
    P_poly,
    P_via_chebyshev,
    Q_poly,
    Q_via_chebyshev,
    R_poly,
    R_via_qp,
    binom,
    cheb_T,
    cheb_U,
    check_identity,
    family_row,
    family_triangle,
    p_poly,
    p_via_chebyshev,
)

P_BLOCK = [[1], [3, 1], [5, 5, 1], [7, 14, 7, 1], [9, 30, 27, 9, 1]]
p_BLOCK = [[1], [4, 1], [9, 6, 1], [16, 20, 8, 1], [25, 50, 35, 10, 1]]
Q_BLOCK = [[1], [2, 1], [2, 4, 1], [2, 9, 6, 1], [2, 16, 20, 8, 1]]


@pytest.mark.parametrize("family, block", [("p", p_BLOCK), ("P", P_BLOCK), ("Q", Q_BLOCK)])
def test_five_by_five_blocks(family, block):
    triangle = family_triangle(family, 4)
    assert [list(row) for row in triangle.rows] == block


@pytest.mark.parametrize("n", range(21))
def test_closed_form_coefficients(n):
    for k in range(n + 1):
        assert p_poly(n).coeffs[k] == Fraction(n + 1, k + 1) * math.comb(n + k + 1, 2 * k + 1)
        assert P_poly(n).coeffs[k] == Fraction(2 * n + 1, 2 * k + 1) * math.comb(n + k, 2 * k)


@pytest.mark.parametrize("n", range(11))
def test_family_relations(n):
    p = lambda m: p_poly(m).as_laurent()  # noqa: E731
    P = lambda m: P_poly(m).as_laurent()  # noqa: E731
    assert P(n) == p(n) - p(n - 1)
    assert P(n) * P(n) == p(2 * n)
    if n >= 1:
        assert Q_poly(n).as_laurent() == P(n) - P(n - 1)


@pytest.mark.parametrize("n", range(11))
def test_chebyshev_forms(n):
    assert p_via_chebyshev(n).as_laurent() == p_poly(n).as_laurent()
    assert P_via_chebyshev(n).as_laurent() == P_poly(n).as_laurent()
    assert Q_via_chebyshev(n).as_laurent() == Q_poly(n).as_laurent()
    assert R_via_qp(n).as_laurent() == R_poly(n).as_laurent()


def test_negative_indices():
    assert p_poly(-1).coeffs == ()
    assert p_poly(-3).coeffs == p_poly(1).coeffs
    assert P_poly(-1).coeffs == tuple(-c for c in P_poly(0).coeffs)
    assert P_poly(-3).as_laurent() == -P_poly(2).as_laurent()


def test_R_small_rows():
    assert R_poly(0).coeffs == (1,)
    assert R_poly(1).as_laurent() == p_poly(0).as_laurent().shift(1)
    assert R_poly(2).coeffs == (2, 0, 1)


def test_classical_chebyshev():
    assert cheb_U(2).coeffs == (-1, 0, 4)
    assert cheb_T(3).coeffs == (0, -3, 0, 4)
    assert cheb_T(2)(Fraction(1, 2)) == Fraction(-1, 2)


@pytest.mark.parametrize("family", ["p", "P"])
@pytest.mark.parametrize("n", range(11))
def test_substitution_identities_from_zero(family, n):
    assert check_identity(family, n)


@pytest.mark.parametrize("family", ["Q", "R"])
@pytest.mark.parametrize("n", range(1, 11))
def test_substitution_identities_from_one(family, n):
    assert check_identity(family, n)


def test_binom_vanishes_off_the_integers():
    assert binom(Fraction(3, 2), 1) == 0
    assert binom(-1, 0) == 0
    assert binom(5, 2) == 10


def test_unknown_family():
    with pytest.raises(ValueError):
        family_row("X", 3)
