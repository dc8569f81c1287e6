"""Pseudo-involutions generated by a Laurent polynomial ``gamma``.

``g`` solves ``g = 1 + z gamma(g)`` (ogf) or ``g = exp(z gamma(g))`` (egf);
from ``gamma`` alone we obtain the companion ``f``, a pseudo-half ``h`` and
the B-function, the last through the polynomials ``eta`` and ``H`` (ogf) or
the half-variable series ``E`` and ``epsilon`` (egf).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping

from pseudoinv.core.chebfam import P_poly, p_poly
from pseudoinv.core.errors import PseudoInvError
from pseudoinv.core.fps import (
    LaurentPoly,
    Series,
    ZeroPolynomial,
    as_fraction,
    catalan,
    comp_inverse,
    compose,
    dilate,
    exp,
    half_project,
    recip,
    sqrt,
    stretch,
    substitute_sqrt,
)
from pseudoinv.core.pseudo import BSequence
from pseudoinv.core.riordan import hat

logger = logging.getLogger(__name__)

__all__ = [
    "GammaFlavor",
    "GammaSpec",
    "GammaVanishesAtOne",
    "ZeroPolynomial",
    "ZeroScale",
    "FixedPointError",
    "NotAPalindrome",
    "SanityCheckFailed",
    "solve_g",
    "companion_from_gamma",
    "bell_companion",
    "companion_via_half",
    "darga",
    "is_generalized_palindrome",
    "h_from_gamma",
    "eta_H_laurent",
    "check_eta_H",
    "b_from_gamma_ogf",
    "b_from_gamma_egf",
    "b_scale",
    "scale_pair",
    "quad_closed_form",
]


class GammaVanishesAtOne(PseudoInvError):
    """Raised when gamma(1) = 0."""


class ZeroScale(PseudoInvError):
    """Raised when a scaling factor is zero."""


class FixedPointError(PseudoInvError):
    """Raised when the functional equation is not satisfied after iterating."""


class NotAPalindrome(PseudoInvError):
    """Raised when a Bell-form companion is requested for a non-palindromic gamma."""


class SanityCheckFailed(PseudoInvError):
    """Raised when a closed-form constant term disagrees with gamma."""


class GammaFlavor(str, Enum):
    OGF = "ogf"
    EGF = "egf"


@dataclass(frozen=True)
class GammaSpec:
    gamma: LaurentPoly
    flavor: GammaFlavor = GammaFlavor.OGF

    def __post_init__(self) -> None:
        object.__setattr__(self, "flavor", GammaFlavor(self.flavor))
        if self.gamma.value_at_one() == 0:
            raise GammaVanishesAtOne(f"gamma(1) = 0 for gamma = {self.gamma}")

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> "GammaSpec":
        try:
            flavor = GammaFlavor(payload.get("flavor", "ogf"))
        except ValueError as exc:
            raise ValueError(f"flavor must be 'ogf' or 'egf', got {payload.get('flavor')!r}") from exc
        terms = payload.get("gamma")
        if not isinstance(terms, Mapping):
            raise ValueError("'gamma' must be an object mapping exponents to rationals")
        return cls(LaurentPoly.from_json(terms), flavor)

    def to_json(self) -> dict[str, Any]:
        return {"flavor": self.flavor.value, "gamma": self.gamma.to_json()}


# ----------------------------------------------------------------------
# g and f


def _gamma_step(spec: GammaSpec, g: Series) -> Series:
    N = g.prec
    z_gamma = spec.gamma.evaluate(g).shift(1).truncate(N)
    if spec.flavor is GammaFlavor.OGF:
        return z_gamma + 1
    return exp(z_gamma)


def solve_g(spec: GammaSpec, N: int) -> Series:
    """Fixed point of ``g = 1 + z gamma(g)`` or ``g = exp(z gamma(g))``."""
    g = Series.one(N)
    for step in range(N + 1):
        nxt = _gamma_step(spec, g)
        if nxt == g:
            logger.debug("solve_g reached a fixed point after %d passes", step)
            break
        g = nxt
    if _gamma_step(spec, g) != g:
        raise FixedPointError(f"g does not satisfy the {spec.flavor.value} equation to precision {N}")
    return g


def companion_from_gamma(spec: GammaSpec, N: int, g: Series | None = None) -> Series:
    """``f = z gamma(g) / (g gamma(1/g))`` (ogf) or ``z gamma(g) / gamma(1/g)`` (egf)."""
    g = solve_g(spec, N) if g is None else g.truncate(N)
    numerator = spec.gamma.evaluate(g)
    denominator = spec.gamma.invert_variable().evaluate(g)
    if spec.flavor is GammaFlavor.OGF:
        denominator = denominator * g
    return (numerator / denominator).shift(1).truncate(N)


def bell_companion(spec: GammaSpec, N: int, g: Series | None = None) -> Series:
    """``z g^(d-1)`` (ogf) or ``z g^d`` (egf) for a generalized palindrome of darga ``d``."""
    if not is_generalized_palindrome(spec.gamma):
        raise NotAPalindrome(f"{spec.gamma} is not a generalized palindrome")
    d = darga(spec.gamma)
    g = solve_g(spec, N) if g is None else g.truncate(N)
    power = d - 1 if spec.flavor is GammaFlavor.OGF else d
    return (g**power).shift(1).truncate(N)


def darga(gamma: LaurentPoly) -> int:
    """Sum of the minimum and maximum degrees."""
    return gamma.min_degree + gamma.max_degree


def is_generalized_palindrome(gamma: LaurentPoly) -> bool:
    """``gamma(z) = z^d gamma(1/z)`` with ``d`` the darga."""
    return gamma.invert_variable().shift(darga(gamma)) == gamma


# ----------------------------------------------------------------------
# pseudo-halves


def h_from_gamma(spec: GammaSpec, N: int) -> Series:
    """``2z / ((2+z) gamma((2-z)/(2+z)))`` (ogf) or ``z / gamma(exp(-z))`` (egf)."""
    z = Series.variable(N)
    if spec.flavor is GammaFlavor.OGF:
        two_plus = z + 2
        argument = (2 - z) / two_plus
        denominator = two_plus * spec.gamma.evaluate(argument)
        return (recip(denominator) * 2).shift(1).truncate(N)
    denominator = spec.gamma.evaluate(exp(-z))
    return recip(denominator).shift(1).truncate(N)


def companion_via_half(spec: GammaSpec, N: int) -> Series:
    """``f = h o hat(h)`` with ``h`` from :func:`h_from_gamma`."""
    h = h_from_gamma(spec, N)
    return compose(h, hat(h))


# ----------------------------------------------------------------------
# B-function, ordinary flavor


_CROSS = LaurentPoly({-1: 1, 0: -2, 1: 1})  # (z - 1)^2 / z


def eta_H_laurent(gamma: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Polynomials with ``eta((z-1)^2/z) = gamma(z) gamma(1/z)`` and
    ``H((z-1)^2/z) = (gamma(z) - z gamma(1/z)) / (z - 1)``.

    ``eta`` is built from the shifted coefficients of ``z^-l gamma``, where
    ``l`` is the minimum degree; ``H`` sums ``c_n P_{n-1}`` over all ``n``.
    """
    if gamma.value_at_one() == 0:
        raise GammaVanishesAtOne(f"gamma(1) = 0 for gamma = {gamma}")
    shifted = gamma.shift(-gamma.min_degree)
    c = [shifted.coefficient(j) for j in range(shifted.max_degree + 1)]
    eta = LaurentPoly.constant(gamma.value_at_one() ** 2)
    for n in range(1, len(c)):
        weight = sum((c[j] * c[n + j] for j in range(len(c) - n)), Fraction(0))
        if weight:
            eta = eta + p_poly(n - 1).as_laurent().shift(1) * weight
    H = LaurentPoly()
    for n, cn in gamma.terms.items():
        H = H + P_poly(n - 1).as_laurent() * cn
    return eta, H


def check_eta_H(gamma: LaurentPoly) -> bool:
    """Verify both defining substitutions as exact Laurent identities."""
    eta, H = eta_H_laurent(gamma)
    reflected = gamma.invert_variable()
    eta_ok = eta.compose(_CROSS) == gamma * reflected
    lhs = H.compose(_CROSS) * LaurentPoly({1: 1, 0: -1})
    H_ok = lhs == gamma - reflected.shift(1)
    return eta_ok and H_ok


def b_from_gamma_ogf(gamma: LaurentPoly, N: int) -> BSequence:
    """``B = H o inv(z / eta)``."""
    eta, H = eta_H_laurent(gamma)
    expected = 2 * gamma.derivative().value_at_one() - gamma.value_at_one()
    if H.coefficient(0) != expected:
        raise SanityCheckFailed(f"H(0) = {H.coefficient(0)}, expected {expected}")
    z_over_eta = recip(eta.to_series(N)).shift(1)
    B = H.evaluate(comp_inverse(z_over_eta)).truncate(N)
    logger.debug("ogf B-function from eta=%s, H=%s", eta, H)
    return BSequence(B.coeffs, "gamma")


# ----------------------------------------------------------------------
# B-function, exponential flavor


def b_from_gamma_egf(gamma: LaurentPoly, N: int) -> BSequence:
    """``B = E o inv(z / epsilon) o sqrt(z)``, evaluated in ``t = sqrt(z)``.

    ``epsilon(0)`` is taken to be ``gamma(1)``; the other branch gives the
    same ``B`` because ``E`` is even.
    """
    g1 = gamma.value_at_one()
    if g1 == 0:
        raise GammaVanishesAtOne(f"gamma(1) = 0 for gamma = {gamma}")
    M = 2 * N + 2
    z = Series.variable(M)
    up = gamma.evaluate(exp(z))
    down = gamma.evaluate(exp(-z))
    E = (up - down).unshift(1)
    expected = 2 * gamma.derivative().value_at_one()
    if E[0] != expected:
        raise SanityCheckFailed(f"E(0) = {E[0]}, expected {expected}")
    epsilon = sqrt(up * down)
    if g1 < 0:
        epsilon = -epsilon
    z_over_eps = recip(epsilon).shift(1)
    Y = compose(E, comp_inverse(z_over_eps))
    B = half_project(substitute_sqrt(Y.truncate(2 * N)))
    return BSequence(B.coeffs, "gamma")


# ----------------------------------------------------------------------
# scaling and the quadratic closed form


def b_scale(b: BSequence, k: object) -> BSequence:
    """``B_F(z) = k B_f(k^2 z)``: coefficients ``b_n k^(2n+1)``."""
    k = as_fraction(k)
    if k == 0:
        raise ZeroScale("scaling factor must be nonzero")
    return BSequence(tuple(c * k ** (2 * n + 1) for n, c in enumerate(b.b)), b.origin)


def scale_pair(g: Series, f: Series, k: object) -> tuple[Series, Series]:
    """``(g(kz), f(kz)/k)``."""
    k = as_fraction(k)
    if k == 0:
        raise ZeroScale("scaling factor must be nonzero")
    return dilate(g, k), dilate(f, k) / k


def quad_closed_form(a: object, b: object, c: object, N: int) -> BSequence:
    """Closed form of ``B`` for ``gamma = a + b z + c z^2``."""
    a, b, c = as_fraction(a), as_fraction(b), as_fraction(c)
    s = a + b + c
    if s == 0:
        raise GammaVanishesAtOne("a + b + c must be nonzero")
    rate = a * b + b * c + 4 * a * c
    cat = stretch(dilate(catalan(N), a * c), 2).truncate(N)
    outer = (cat.shift(1) * (s * c)).truncate(N)
    inner = Series([0] + [s * rate ** (n - 1) for n in range(1, N + 1)])
    B = compose(outer, inner) + (-a + b + 3 * c)
    return BSequence(B.coeffs, "quadratic")
