"""B-functions of rational ``g = p/q`` from a bivariate polynomial equation.

``R(u, v) = p(u)p(v) - q(u)q(v)`` is symmetric, so ``R(u, v) = S(u+v, uv)``.
With ``u = z`` and ``v = -f`` this gives ``S(-x, -z) = 0`` for ``x = z B``;
the root with ``x(0) = 0`` is lifted by Newton iteration.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from pseudoinv.core.bipoly import BivariatePoly
from pseudoinv.core.chebfam import R_poly
from pseudoinv.core.errors import PseudoInvError
from pseudoinv.core.fps import HalfSeries, LaurentPoly, Series, half_project, recip
from pseudoinv.core.pseudo import BSequence, b_from_f, companion_of

logger = logging.getLogger(__name__)


class NotMonicAtZero(PseudoInvError):
    """Raised when p(0) != 1 or q(0) != 1, or either has negative exponents."""


class DegenerateRational(PseudoInvError):
    """Raised when p = q, which makes R identically zero."""


class NoRootAtOrigin(PseudoInvError):
    """Raised when x = 0 is not a root of Phi(x, 0)."""


class NotASimpleRoot(PseudoInvError):
    """Raised when dPhi/dx vanishes at the origin."""


class LiftingFailed(PseudoInvError):
    """Raised when the lifted root does not annihilate Phi."""


def _check_pair(p: LaurentPoly, q: LaurentPoly) -> None:
    for name, poly in (("p", p), ("q", q)):
        if not poly.is_polynomial():
            raise NotMonicAtZero(f"{name} has negative exponents")
        if poly.coefficient(0) != 1:
            raise NotMonicAtZero(f"{name}(0) must be 1, got {poly.coefficient(0)}")
    if p == q:
        raise DegenerateRational("p = q makes g = 1, which has no unique companion")


def _coefficients(poly: LaurentPoly) -> list[Fraction]:
    return [poly.coefficient(e) for e in range(poly.max_degree + 1)]


def _pair_weights(p: LaurentPoly, q: LaurentPoly) -> dict[tuple[int, int], Fraction]:
    """``c_i c_j - d_i d_j`` for ``i >= j``."""
    c, d = _coefficients(p), _coefficients(q)
    top = max(len(c), len(d))
    c += [Fraction(0)] * (top - len(c))
    d += [Fraction(0)] * (top - len(d))
    weights = {}
    for i in range(top):
        for j in range(i + 1):
            w = c[i] * c[j] - d[i] * d[j]
            if w:
                weights[(i, j)] = w
    return weights


def _power_sums(count: int) -> list[BivariatePoly]:
    """``u^m + v^m`` in ``x = u+v``, ``y = uv``."""
    x, y = BivariatePoly.x(), BivariatePoly.y()
    sums = [BivariatePoly.constant(2), x]
    for _ in range(2, count):
        sums.append(x * sums[-1] - y * sums[-2])
    return sums[:count]


def symmetrize(p: LaurentPoly, q: LaurentPoly) -> BivariatePoly:
    """``S`` with ``S(u+v, uv) = p(u)p(v) - q(u)q(v)``."""
    _check_pair(p, q)
    weights = _pair_weights(p, q)
    span = max((i - j for i, j in weights), default=0)
    sums = _power_sums(span + 1)
    y = BivariatePoly.y()
    S = BivariatePoly()
    for (i, j), w in weights.items():
        if i == j:
            S = S + y**i * w
        else:
            S = S + y**j * sums[i - j] * w
    if S.coefficient(0, 0) != 0:
        raise PseudoInvError(f"S(0, 0) = {S.coefficient(0, 0)} is not zero")
    return S


def _normalise(phi: BivariatePoly) -> BivariatePoly:
    lead = phi.coefficient(1, 0)
    return phi * (1 / lead) if lead else phi


def b_equation(p: LaurentPoly, q: LaurentPoly) -> BivariatePoly:
    """``Phi(x, z) = S(-x, -z)``, scaled so the ``x`` coefficient is 1."""
    return _normalise(symmetrize(p, q).scale_variables(-1, -1))


@dataclass(frozen=True)
class ChebEquation:
    """``sum_m a_m(z) y^m = 0`` with ``y = B``; each ``a_m`` lives in ``t = sqrt(z)``."""

    coefficients: Mapping[int, HalfSeries]

    def project(self) -> BivariatePoly:
        """Integral form as a polynomial in ``(y, z)``."""
        terms = {}
        for m, half in self.coefficients.items():
            whole = half_project(half)
            for j, c in enumerate(whole.coeffs):
                if c:
                    terms[(m, j)] = c
        return BivariatePoly(terms)

    def in_x(self) -> BivariatePoly:
        """Substitute ``y = x / z``, clear the common power of ``z`` and normalise."""
        projected = self.project()
        if projected.is_zero():
            return projected
        low = min(j - m for m, j in projected.terms)
        return _normalise(BivariatePoly({(m, j - m - low): c for (m, j), c in projected.terms.items()}))

    def evaluate(self, B: Series) -> Series:
        """Left-hand side with ``y = B(z)`` substituted."""
        poly = self.project()
        return poly.evaluate_series(B, Series.variable(B.prec))


def b_equation_cheb(p: LaurentPoly, q: LaurentPoly) -> ChebEquation:
    """Collect ``sum (-1)^n (c_n c_{n+k} - d_n d_{n+k}) z^{n+k/2} R_k(-sqrt(z) y)`` by powers of ``y``."""
    _check_pair(p, q)
    c, d = _coefficients(p), _coefficients(q)
    top = max(len(c), len(d))
    c += [Fraction(0)] * (top - len(c))
    d += [Fraction(0)] * (top - len(d))
    collected: dict[int, dict[Fraction, Fraction]] = {}
    for n in range(top):
        for k in range(top - n):
            w = c[n] * c[n + k] - d[n] * d[n + k]
            if not w:
                continue
            sign = -1 if n % 2 else 1
            for m, alpha in enumerate(R_poly(k).coeffs):
                if not alpha:
                    continue
                exponent = n + Fraction(k + m, 2)
                value = sign * w * alpha * (-1) ** m
                bucket = collected.setdefault(m, {})
                bucket[exponent] = bucket.get(exponent, Fraction(0)) + value
    coefficients = {}
    for m, bucket in sorted(collected.items()):
        top_exponent = max(bucket)
        coefficients[m] = HalfSeries.from_terms(bucket, top_exponent)
    return ChebEquation(coefficients)


def solve_series_root(phi: BivariatePoly, N: int) -> Series:
    """Root ``x(z)`` with ``x(0) = 0`` of ``Phi(x, z) = 0`` through ``z^N``.

    Newton steps double the number of correct coefficients.
    """
    if phi.coefficient(0, 0) != 0:
        raise NoRootAtOrigin("Phi(0, 0) != 0")
    dphi = phi.partial_x()
    if dphi.coefficient(0, 0) == 0:
        raise NotASimpleRoot("dPhi/dx vanishes at the origin")
    x = Series.zero(0)
    known = 0
    while known < N:
        known = min(2 * known + 1, N)
        x = x.extend(known)
        step = phi.evaluate_x(x) * recip(dphi.evaluate_x(x))
        x = x - step
        logger.debug("newton step: %d coefficients known", known + 1)
    if not phi.evaluate_x(x).is_zero():
        raise LiftingFailed("lifted root leaves a nonzero residual")
    return x


def rational_g(p: LaurentPoly, q: LaurentPoly, N: int) -> Series:
    return p.to_series(N) * recip(q.to_series(N))


def b_from_rational(p: LaurentPoly, q: LaurentPoly, N: int) -> BSequence:
    """B-sequence of the companion of ``p/q``, falling back to the companion solve."""
    phi = b_equation(p, q)
    try:
        x = solve_series_root(phi, N + 1)
    except NotASimpleRoot:
        logger.warning("no simple root at the origin for p=%s, q=%s; using the companion route", p, q)
        prec = 2 * N + 4
        f = companion_of(rational_g(p, q, prec), prec)
        b = b_from_f(f, N)
        return BSequence(b.b, "rational")
    return BSequence(x.unshift(1).coeffs, "rational")
