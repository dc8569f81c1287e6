"""Chebyshev-derived polynomial families p, P, Q, R with their U and T parents.

All rows are exact.  ``p`` and ``P`` (and ``U``) accept negative indices
through the reflection rules ``p_{-n-1} = p_{n-1}``, ``P_{-n} = -P_{n-1}``
and ``U_{-n-1} = -U_{n-1}``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from pseudoinv.core.bipoly import BivariatePoly
from pseudoinv.core.fps import LaurentPoly, Series, as_fraction

logger = logging.getLogger(__name__)

FAMILIES = ("p", "P", "Q", "R", "T", "U")


@dataclass(frozen=True)
class PolyFamilyRow:
    """One polynomial of a family, as coefficients from degree 0 upward."""

    family: str
    index: int
    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    def as_laurent(self) -> LaurentPoly:
        return LaurentPoly.from_coeffs(self.coeffs)

    def to_series(self, prec: int) -> Series:
        return Series(self.coeffs[: prec + 1], prec)

    def __call__(self, value: object) -> Fraction:
        x = as_fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> dict[str, object]:
        return {"family": self.family, "index": self.index, "coeffs": [str(c) for c in self.coeffs]}


def binom(top: object, k: int) -> Fraction:
    """``C(top, k)``, and 0 whenever ``top`` is not a nonnegative integer."""
    a = as_fraction(top)
    if a.denominator != 1 or a < 0 or k < 0 or k > a:
        return Fraction(0)
    return Fraction(math.comb(int(a), k))


def _row(family: str, index: int, poly: LaurentPoly) -> PolyFamilyRow:
    if poly.is_zero():
        return PolyFamilyRow(family, index, ())
    return PolyFamilyRow(family, index, tuple(poly.coefficient(e) for e in range(poly.max_degree + 1)))


def _cheb_U_at(n: int, w: LaurentPoly) -> LaurentPoly:
    if n < 0:
        return -_cheb_U_at(-n - 2, w) if n < -1 else LaurentPoly()
    prev, cur = LaurentPoly(), LaurentPoly.constant(1)
    two_w = w * 2
    for _ in range(n):
        prev, cur = cur, two_w * cur - prev
    return cur


def _cheb_T_at(n: int, w: LaurentPoly) -> LaurentPoly:
    n = abs(n)
    prev, cur = LaurentPoly.constant(1), w
    if n == 0:
        return prev
    two_w = w * 2
    for _ in range(n - 1):
        prev, cur = cur, two_w * cur - prev
    return cur


_Z = LaurentPoly.monomial(1)
_SHIFTED = LaurentPoly({0: 1, 1: Fraction(1, 2)})  # (z + 2) / 2


@lru_cache(maxsize=None)
def cheb_U(n: int) -> PolyFamilyRow:
    """Chebyshev polynomial of the second kind."""
    return _row("U", n, _cheb_U_at(n, _Z))


@lru_cache(maxsize=None)
def cheb_T(n: int) -> PolyFamilyRow:
    """Chebyshev polynomial of the first kind; ``T_{-n} = T_n``."""
    return _row("T", n, _cheb_T_at(n, _Z))


@lru_cache(maxsize=None)
def p_poly(n: int) -> PolyFamilyRow:
    if n == -1:
        return PolyFamilyRow("p", -1, ())
    if n < -1:
        return PolyFamilyRow("p", n, p_poly(-n - 2).coeffs)
    coeffs = tuple(Fraction(n + 1, k + 1) * math.comb(n + k + 1, 2 * k + 1) for k in range(n + 1))
    return PolyFamilyRow("p", n, coeffs)


@lru_cache(maxsize=None)
def P_poly(n: int) -> PolyFamilyRow:
    if n < 0:
        return PolyFamilyRow("P", n, tuple(-c for c in P_poly(-n - 1).coeffs))
    coeffs = tuple(Fraction(2 * n + 1, 2 * k + 1) * math.comb(n + k, 2 * k) for k in range(n + 1))
    return PolyFamilyRow("P", n, coeffs)


@lru_cache(maxsize=None)
def Q_poly(n: int) -> PolyFamilyRow:
    if n < 0:
        raise ValueError("Q_n is defined for n >= 0")
    coeffs = tuple(binom(n + k, 2 * k) + binom(n + k - 1, 2 * k) for k in range(n + 1))
    return PolyFamilyRow("Q", n, coeffs)


@lru_cache(maxsize=None)
def R_poly(n: int) -> PolyFamilyRow:
    if n < 0:
        raise ValueError("R_n is defined for n >= 0")
    coeffs = tuple(
        binom(Fraction(n + k, 2), k) + binom(Fraction(n + k, 2) - 1, k) for k in range(n + 1)
    )
    return PolyFamilyRow("R", n, coeffs)


# ----------------------------------------------------------------------
# the same families from U and T at (z + 2) / 2


def p_via_chebyshev(n: int) -> PolyFamilyRow:
    if n < 0:
        return p_via_chebyshev(-n - 2) if n < -1 else PolyFamilyRow("p", -1, ())
    l, odd = divmod(n, 2)
    if odd:
        u = _cheb_U_at(l, _SHIFTED)
        return _row("p", n, LaurentPoly({0: 4, 1: 1}) * u * u)
    root = _cheb_U_at(l, _SHIFTED) + _cheb_U_at(l - 1, _SHIFTED)
    return _row("p", n, root * root)


def P_via_chebyshev(n: int) -> PolyFamilyRow:
    return _row("P", n, _cheb_U_at(n, _SHIFTED) + _cheb_U_at(n - 1, _SHIFTED))


def Q_via_chebyshev(n: int) -> PolyFamilyRow:
    if n == 0:
        return PolyFamilyRow("Q", 0, (Fraction(1),))
    return _row("Q", n, _cheb_T_at(n, _SHIFTED) * 2)


def R_via_qp(n: int) -> PolyFamilyRow:
    """``R_{2m} = Q_m(z^2)`` and ``R_{2m+1} = z P_m(z^2)``."""
    m, odd = divmod(n, 2)
    source = P_poly(m) if odd else Q_poly(m)
    terms = {2 * e + odd: c for e, c in enumerate(source.coeffs)}
    return _row("R", n, LaurentPoly(terms))


_BUILDERS = {"p": p_poly, "P": P_poly, "Q": Q_poly, "R": R_poly, "T": cheb_T, "U": cheb_U}


def family_row(family: str, n: int) -> PolyFamilyRow:
    try:
        builder = _BUILDERS[family]
    except KeyError as exc:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}") from exc
    return builder(n)


def family_triangle(family: str, N: int):
    """Rows ``0..N`` of a family as a lower-triangular coefficient table."""
    from pseudoinv.core.riordan import TriangularMatrix

    rows = []
    for n in range(N + 1):
        coeffs = family_row(family, n).coeffs
        rows.append(tuple(coeffs) + (Fraction(0),) * (n + 1 - len(coeffs)))
    return TriangularMatrix(rows)


# ----------------------------------------------------------------------
# two-variable identities, cleared of denominators


_U = BivariatePoly.x()
_V = BivariatePoly.y()


def _weighted_sum(coeffs, base: BivariatePoly, base_power, uv_power) -> BivariatePoly:
    uv = _U * _V
    total = BivariatePoly()
    for k, c in enumerate(coeffs):
        total = total + (base ** base_power(k)) * (uv ** uv_power(k)) * c
    return total


def p_identity_sides(n: int) -> tuple[BivariatePoly, BivariatePoly]:
    """``(z p_n)((u-v)^2/(uv)) = (u^{n+1}-v^{n+1})^2 / (uv)^{n+1}`` times ``(uv)^{n+1}``."""
    lhs = _weighted_sum(p_poly(n).coeffs, _U - _V, lambda k: 2 * k + 2, lambda k: n - k)
    rhs = (_U ** (n + 1) - _V ** (n + 1)) ** 2
    return lhs, rhs


def P_identity_sides(n: int) -> tuple[BivariatePoly, BivariatePoly]:
    """``P_n((u-v)^2/(uv)) (u-v) (uv)^n = u^{2n+1} - v^{2n+1}``."""
    lhs = _weighted_sum(P_poly(n).coeffs, _U - _V, lambda k: 2 * k + 1, lambda k: n - k)
    rhs = _U ** (2 * n + 1) - _V ** (2 * n + 1)
    return lhs, rhs


def Q_identity_sides(n: int) -> tuple[BivariatePoly, BivariatePoly]:
    """``Q_n((u-v)^2/(uv)) (uv)^n = u^{2n} + v^{2n}`` for ``n >= 1``."""
    if n < 1:
        raise ValueError("the Q substitution identity holds for n >= 1")
    lhs = _weighted_sum(Q_poly(n).coeffs, _U - _V, lambda k: 2 * k, lambda k: n - k)
    rhs = _U ** (2 * n) + _V ** (2 * n)
    return lhs, rhs


def R_identity_sides(n: int) -> tuple[BivariatePoly, BivariatePoly]:
    """``R_n((u^2-v^2)/(uv)) (uv)^n = u^{2n} + (-1)^n v^{2n}`` for ``n >= 1``."""
    if n < 1:
        raise ValueError("the R substitution identity holds for n >= 1")
    lhs = _weighted_sum(R_poly(n).coeffs, _U * _U - _V * _V, lambda k: k, lambda k: n - k)
    rhs = _U ** (2 * n) + _V ** (2 * n) * (-1) ** n
    return lhs, rhs


IDENTITIES = {
    "p": p_identity_sides,
    "P": P_identity_sides,
    "Q": Q_identity_sides,
    "R": R_identity_sides,
}


def check_identity(family: str, n: int) -> bool:
    lhs, rhs = IDENTITIES[family](n)
    ok = lhs == rhs
    if not ok:
        logger.debug("substitution identity for %s_%d fails: %s != %s", family, n, lhs, rhs)
    return ok
