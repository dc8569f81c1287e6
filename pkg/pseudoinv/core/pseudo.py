"""Pseudo-involutions: B-sequences, companions, pseudo-halves and square roots.

``f`` is pseudo-involutory when ``f - z = (z B)(z f)`` for some series ``B``;
the coefficients of ``B`` form the B-sequence.  Every routine here is exact
and certifies the hypotheses it relies on instead of assuming them.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from pseudoinv.core.errors import InsufficientPrecision, PseudoInvError
from pseudoinv.core.fps import (
    NotOrderOne,
    Series,
    comp_inverse,
    compose,
    exp,
    parity_parts,
    reflect,
    sqrt,
    stretch,
)
from pseudoinv.core.riordan import (
    RiordanArray,
    TriangularMatrix,
    hat,
)

logger = logging.getLogger(__name__)


class InconsistentBEquation(PseudoInvError):
    """Raised when an odd-degree equation of the B-system fails."""

    def __init__(self, degree: int) -> None:
        super().__init__(f"B-equation inconsistent at degree {degree}; f is not pseudo-involutory")
        self.degree = degree


class RecurrenceViolated(PseudoInvError):
    def __init__(self, n: int, k: int) -> None:
        super().__init__(f"matrix recurrence violated at entry ({n}, {k})")
        self.n = n
        self.k = k


class NotUnitDiagonal(PseudoInvError):
    """Raised when a matrix recurrence needs a unit diagonal."""


class UnderdeterminedCompanion(PseudoInvError):
    def __init__(self, degree: int) -> None:
        super().__init__(f"companion coefficient at degree {degree} is not determined by g")
        self.degree = degree


class NoCompanion(PseudoInvError):
    def __init__(self, degree: int, reason: str = "") -> None:
        detail = f": {reason}" if reason else ""
        super().__init__(f"g has no pseudo-involutory companion (degree {degree}){detail}")
        self.degree = degree


class NotPseudoInvolutory(PseudoInvError):
    """Raised when a routine requires a pseudo-involutory f."""


class PhiNotOdd(PseudoInvError):
    """Raised when phi has a nonzero even coefficient."""


class UnsupportedLinearTerm(PseudoInvError):
    """Raised when f'(0) != 1 where the routine needs it."""


@dataclass(frozen=True)
class BSequence:
    """Coefficients ``b_0..b_N`` of a B-function plus the method that produced them."""

    b: tuple[Fraction, ...]
    origin: str = "definition"

    @property
    def N(self) -> int:
        return len(self.b) - 1

    def __len__(self) -> int:
        return len(self.b)

    def __getitem__(self, n: int) -> Fraction:
        return self.b[n]

    def beta(self) -> tuple[Fraction, ...]:
        """``beta_n = (2n+1)! b_n``."""
        return beta_from_b(self)

    def as_series(self) -> Series:
        return Series(self.b)

    def truncate(self, N: int) -> "BSequence":
        if N > self.N:
            raise InsufficientPrecision(N, self.N)
        return BSequence(self.b[: N + 1], self.origin)

    def first_difference(self, other: "BSequence") -> int | None:
        for n, (x, y) in enumerate(zip(self.b, other.b)):
            if x != y:
                return n
        return None

    def to_json(self, include_beta: bool = False) -> dict[str, object]:
        payload: dict[str, object] = {
            "origin": self.origin,
            "N": self.N,
            "b": [str(c) for c in self.b],
        }
        if include_beta:
            payload["beta"] = [str(c) for c in self.beta()]
        return payload


def _require_unit_linear(f: Series) -> None:
    if f.prec < 1 or f[0] != 0 or f[1] != 1:
        raise UnsupportedLinearTerm("f must satisfy f(0) = 0 and f'(0) = 1")


# ----------------------------------------------------------------------
# B-sequence by definition and from the matrix


def b_from_f(f: Series, N: int | None = None) -> BSequence:
    """Solve ``f - z = sum b_n (z f)^(n+1)``.

    ``b_n`` is read at degree ``2n+2``; each odd degree carries no new unknown
    and is checked instead.
    """
    _require_unit_linear(f)
    prec = f.prec
    if N is None:
        N = (prec - 2) // 2
    if 2 * N + 2 > prec:
        raise InsufficientPrecision(2 * N + 2, prec)
    zf = f.shift(1).truncate(prec)
    residual = f - Series.variable(prec)
    power = zf
    b = []
    for n in range(N + 1):
        if residual.coeffs[2 * n + 1]:
            raise InconsistentBEquation(2 * n + 1)
        bn = residual.coeffs[2 * n + 2]
        b.append(bn)
        if bn:
            residual = residual - power * bn
        power = power * zf
    if 2 * N + 3 <= prec and residual.coeffs[2 * N + 3]:
        raise InconsistentBEquation(2 * N + 3)
    return BSequence(tuple(b), "definition")


def b_from_matrix(M: TriangularMatrix) -> BSequence:
    """Read ``b_j`` from column 0 of ``d[n+1][k+1] = d[n][k] + sum b_j d[n-j][k+j+1]``.

    The remaining instances of the recurrence are verified.
    """
    if any(d != 1 for d in M.diagonal()):
        raise NotUnitDiagonal("B-recurrence extraction needs a unit diagonal")
    top = M.size - 1
    if top < 2:
        raise InsufficientPrecision(2, top)
    J = (top - 2) // 2
    b: list[Fraction] = []
    for j in range(J + 1):
        n = 2 * j + 1
        acc = M[n + 1, 1] - M[n, 0]
        for i in range(j):
            acc -= b[i] * M[n - i, i + 1]
        b.append(acc)
    for n in range(top):
        for k in range(n + 1):
            expected = M[n, k]
            for j in range(len(b)):
                if n - j < k + j + 1:
                    break
                expected += b[j] * M[n - j, k + j + 1]
            if expected != M[n + 1, k + 1]:
                raise RecurrenceViolated(n + 1, k + 1)
    return BSequence(tuple(b), "matrix")


def beta_from_b(b: BSequence) -> tuple[Fraction, ...]:
    return tuple(math.factorial(2 * n + 1) * c for n, c in enumerate(b.b))


def beta_check_matrix(M: TriangularMatrix, beta) -> bool:
    """Check the exponential-flavor recurrence with ``alpha = d / C(n, k)``.

    Every row is checked, so ``beta`` must reach ``beta_((N-2)//2)`` for rows
    ``0..N``; a shorter ``beta`` raises ``InsufficientPrecision``.
    """
    beta = [Fraction(x) for x in beta]
    if any(d != 1 for d in M.diagonal()):
        raise NotUnitDiagonal("beta recurrence needs a unit diagonal")
    needed = (M.size - 1) // 2
    if len(beta) < needed:
        raise InsufficientPrecision(needed - 1, len(beta) - 1)

    def alpha(n: int, k: int) -> Fraction:
        if k > n:
            return Fraction(0)
        return M[n, k] / math.comb(n, k)

    for n in range(M.size - 1):
        for k in range(n + 1):
            value = alpha(n, k)
            j = 0
            while n - j >= k + j + 1:
                value += math.comb(n - k, 2 * j + 1) * beta[j] * alpha(n - j, k + j + 1)
                j += 1
            if value != alpha(n + 1, k + 1):
                logger.debug("beta recurrence fails at (%d, %d)", n + 1, k + 1)
                return False
    return True


# ----------------------------------------------------------------------
# companions


def companion_of(g: Series, N: int) -> Series:
    """Pseudo-involutory companion ``f`` of ``g`` through degree ``N``.

    The degree-``n`` coefficient of ``g * g(-f)`` is linear in ``f_n`` with
    pivot ``-g_1``; the first-order equation is absorbed by ``f_1 = 1``.
    """
    if g.prec < 0 or g[0] != 1:
        raise PseudoInvError("companion needs g(0) = 1")
    if N > g.prec:
        raise InsufficientPrecision(N, g.prec)
    pivot = g.coeffs[1] if g.prec >= 1 else Fraction(0)
    coeffs = [Fraction(0), Fraction(1)]
    for n in range(2, N + 1):
        trial = Series(coeffs + [Fraction(0)])
        gn = g.truncate(n)
        residual = (gn * compose(gn, -trial)).coeffs[n]
        if pivot == 0:
            if residual == 0:
                raise UnderdeterminedCompanion(n)
            raise NoCompanion(n, "vanishing pivot with nonzero residual")
        coeffs.append(residual / pivot)
        logger.debug("companion degree %d: f_n = %s", n, coeffs[-1])
    f = Series(coeffs[: N + 1], N)
    if N >= 1:
        gap = comp_inverse(f).first_difference(-reflect(f))
        if gap is not None:
            raise NoCompanion(gap, "second pseudo-involution condition fails")
    return f


# ----------------------------------------------------------------------
# pseudo-halves


def pseudo_half(f: Series) -> Series:
    """``h_f = hat(sqrt(z f))``, so that ``f = h_f o hat(h_f)``."""
    _require_unit_linear(f)
    if f.prec >= 2:
        try:
            b_from_f(f)
        except InconsistentBEquation as exc:
            raise NotPseudoInvolutory(str(exc)) from exc
    return hat(sqrt(f.shift(1)))


def b_from_half(h: Series) -> BSequence:
    """``z B = (2 z h_e) o inv(z h_o^2 - z^2 h_e^2)`` for any ``h`` of order one."""
    if h.order != 1:
        raise NotOrderOne(f"pseudo-half must have order 1, got order {h.order}")
    h_odd, h_even = parity_parts(h)
    inner = h_odd * h_odd
    inner = inner.shift(1) - (h_even * h_even).shift(2)
    zB = compose((h_even * 2).shift(1), comp_inverse(inner))
    return BSequence(zB.unshift(1).coeffs, "half")


def half_from_b(B: Series) -> Series:
    """``h = z sqrt(1 + z^2 B(z^2)^2 / 4) + z^2 B(z^2) / 2``."""
    stretched = stretch(B, 2)
    radicand = (stretched * stretched).shift(2) * Fraction(1, 4) + 1
    first = sqrt(radicand).shift(1)
    second = stretched.shift(2) * Fraction(1, 2)
    return first + second


def h_from_u(B: Series) -> Series:
    """``h = z u(z B(z^2))`` where ``u - 1/u = z`` and ``u(0) = 1``."""
    w = stretch(B, 2).shift(1)
    prec = w.prec
    u = (Series.variable(prec) + sqrt(Series([4, 0, 1], prec))) * Fraction(1, 2)
    return compose(u, w).shift(1)


# ----------------------------------------------------------------------
# the g-family and canonical roots


def g_family(f: Series, phi: Series) -> Series:
    """``g = exp(phi(sqrt(z f)))`` for odd ``phi``."""
    if any(phi.coeffs[0::2]):
        raise PhiNotOdd("phi must be an odd series")
    _require_unit_linear(f)
    return exp(compose(phi, sqrt(f.shift(1))))


def canonical_root(D: RiordanArray) -> RiordanArray:
    """``X = (sqrt(g), sqrt(z f))``, with ``X`` times its pseudo-inverse equal to ``D``."""
    _require_unit_linear(D.f)
    return RiordanArray(sqrt(D.g), sqrt(D.f.shift(1)), D.flavor)
