"""Truncated formal power series over the rationals.

A :class:`Series` stores the coefficients of ``z^0 .. z^prec`` exactly; nothing
beyond ``prec`` is known.  :class:`LaurentPoly` is a finite, exact Laurent
polynomial and :class:`HalfSeries` is a series in ``t = sqrt(z)``.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from pseudoinv.core.errors import InsufficientPrecision, PseudoInvError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
INFINITE_ORDER = math.inf


class SeriesError(PseudoInvError):
    """Base class for failures of the series kernel."""


class ZeroConstantTerm(SeriesError):
    """Raised when a reciprocal is requested for a series with a(0)=0."""


class DivergentComposition(SeriesError):
    """Raised when the inner series of a composition has a constant term."""


class NotOrderOne(SeriesError):
    """Raised when a compositional inverse is requested for order != 1."""


class OddOrder(SeriesError):
    """Raised when a square root is requested for a series of odd order."""


class NonSquareLeadingCoefficient(SeriesError):
    """Raised when the leading coefficient has no rational square root."""


class BadConstantTerm(SeriesError):
    """Raised when exp/log receive a series with the wrong constant term."""


class NonzeroConstant(SeriesError):
    """Raised when a parity split is requested for h with h(0) != 0."""


class NotDivisible(SeriesError):
    """Raised when dividing by z^k a series whose order is below k."""


class InfiniteOrder(SeriesError):
    """Raised when the order of an all-zero truncated series is needed."""


class ZeroPolynomial(SeriesError):
    """Raised when a degree-based quantity is requested for the zero polynomial."""


class NonIntegralHalfSeries(SeriesError):
    """Raised when projecting a half-series with a nonzero half-integer power."""

    def __init__(self, exponent: Fraction) -> None:
        super().__init__(f"nonzero coefficient at z^{exponent}")
        self.exponent = exponent


def as_fraction(value: object) -> Fraction:
    """Convert ints, rationals and rational strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


def _scalar(value: object) -> Fraction | None:
    try:
        return as_fraction(value)
    except (TypeError, ValueError):
        return None


def _convolve(a: tuple[Fraction, ...], b: tuple[Fraction, ...], count: int) -> tuple[Fraction, ...]:
    # Work on integer numerators over a common denominator; Fraction
    # normalisation then happens once per output coefficient.
    da = math.lcm(1, *(c.denominator for c in a))
    db = math.lcm(1, *(c.denominator for c in b))
    ia = [c.numerator * (da // c.denominator) for c in a]
    ib = [c.numerator * (db // c.denominator) for c in b]
    scale = da * db
    out = []
    for n in range(count):
        lo = max(0, n - len(ib) + 1)
        hi = min(n, len(ia) - 1)
        acc = 0
        for i in range(lo, hi + 1):
            x = ia[i]
            if x:
                acc += x * ib[n - i]
        out.append(Fraction(acc, scale))
    return tuple(out)


class Series:
    """Immutable truncated power series ``sum_{n<=prec} c_n z^n``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[object], prec: int | None = None) -> None:
        values = [as_fraction(c) for c in coeffs]
        if prec is not None:
            if prec < -1:
                raise ValueError("precision must be >= -1")
            values = values[: prec + 1] + [Fraction(0)] * (prec + 1 - len(values))
        self._coeffs = tuple(values)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Series":
        obj = object.__new__(cls)
        obj._coeffs = coeffs
        return obj

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, prec: int) -> "Series":
        return cls._raw((Fraction(0),) * (prec + 1))

    @classmethod
    def constant(cls, value: Scalar, prec: int) -> "Series":
        if prec < 0:
            return cls._raw(())
        return cls._raw((as_fraction(value),) + (Fraction(0),) * prec)

    @classmethod
    def one(cls, prec: int) -> "Series":
        return cls.constant(1, prec)

    @classmethod
    def monomial(cls, degree: int, prec: int, coeff: Scalar = 1) -> "Series":
        values = [Fraction(0)] * (prec + 1)
        if degree <= prec:
            values[degree] = as_fraction(coeff)
        return cls._raw(tuple(values))

    @classmethod
    def variable(cls, prec: int) -> "Series":
        """The identity function ``z``."""
        return cls.monomial(1, prec)

    # ------------------------------------------------------------------
    # inspection

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def prec(self) -> int:
        return len(self._coeffs) - 1

    @property
    def order(self) -> int | float:
        """Index of the first nonzero coefficient, ``inf`` if none is stored."""
        for n, c in enumerate(self._coeffs):
            if c:
                return n
        return INFINITE_ORDER

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError("negative coefficient index")
        if n > self.prec:
            raise InsufficientPrecision(n, self.prec)
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def agrees_with(self, other: "Series", upto: int | None = None) -> bool:
        """Coefficientwise equality through ``upto`` (default: shared precision)."""
        limit = min(self.prec, other.prec) if upto is None else upto
        if limit > self.prec or limit > other.prec:
            raise InsufficientPrecision(limit, min(self.prec, other.prec))
        return self._coeffs[: limit + 1] == other._coeffs[: limit + 1]

    def first_difference(self, other: "Series") -> int | None:
        for n, (a, b) in enumerate(zip(self._coeffs, other._coeffs)):
            if a != b:
                return n
        return None

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self._coeffs):
            if not c:
                continue
            if n == 0:
                parts.append(str(c))
            else:
                mono = "z" if n == 1 else f"z^{n}"
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        parts.append(f"O(z^{self.prec + 1})")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Series({self})"

    # ------------------------------------------------------------------
    # precision management

    def truncate(self, prec: int) -> "Series":
        if prec > self.prec:
            raise InsufficientPrecision(prec, self.prec)
        return Series._raw(self._coeffs[: prec + 1])

    def extend(self, prec: int) -> "Series":
        """Truncate, or pad with zeros when the tail is known to vanish."""
        if prec <= self.prec:
            return self.truncate(prec)
        return Series._raw(self._coeffs + (Fraction(0),) * (prec - self.prec))

    def shift(self, k: int) -> "Series":
        """Multiply by ``z^k``."""
        return Series._raw((Fraction(0),) * k + self._coeffs)

    def unshift(self, k: int) -> "Series":
        """Divide by ``z^k``; the first ``k`` coefficients must vanish."""
        if any(self._coeffs[:k]):
            raise NotDivisible(f"series of order {self.order} is not divisible by z^{k}")
        return Series._raw(self._coeffs[k:])

    def derivative(self) -> "Series":
        return Series._raw(tuple(n * c for n, c in enumerate(self._coeffs) if n))

    def integral(self) -> "Series":
        return Series._raw((Fraction(0),) + tuple(c / (n + 1) for n, c in enumerate(self._coeffs)))

    # ------------------------------------------------------------------
    # ring structure

    def __neg__(self) -> "Series":
        return Series._raw(tuple(-c for c in self._coeffs))

    def __add__(self, other: object) -> "Series":
        if isinstance(other, Series):
            prec = min(self.prec, other.prec)
            return Series._raw(tuple(a + b for a, b in zip(self._coeffs[: prec + 1], other._coeffs)))
        value = _scalar(other)
        if value is None:
            return NotImplemented
        if not self._coeffs:
            return self
        return Series._raw((self._coeffs[0] + value,) + self._coeffs[1:])

    __radd__ = __add__

    def __sub__(self, other: object) -> "Series":
        if isinstance(other, Series):
            return self + (-other)
        value = _scalar(other)
        if value is None:
            return NotImplemented
        return self + (-value)

    def __rsub__(self, other: object) -> "Series":
        return (-self) + other

    def __mul__(self, other: object) -> "Series":
        if isinstance(other, Series):
            prec = min(self.prec, other.prec)
            return Series._raw(_convolve(self._coeffs[: prec + 1], other._coeffs[: prec + 1], prec + 1))
        value = _scalar(other)
        if value is None:
            return NotImplemented
        return Series._raw(tuple(c * value for c in self._coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Series":
        if isinstance(other, Series):
            return self * recip(other)
        value = _scalar(other)
        if value is None:
            return NotImplemented
        return self * (1 / value)

    def __rtruediv__(self, other: object) -> "Series":
        value = _scalar(other)
        if value is None:
            return NotImplemented
        return recip(self) * value

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            return recip(self) ** (-n)
        result = Series.one(self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, inner: "Series") -> "Series":
        return compose(self, inner)

    def reflect(self) -> "Series":
        return reflect(self)


# ----------------------------------------------------------------------
# named operations


def recip(a: Series) -> Series:
    """Multiplicative inverse; requires ``a(0) != 0``."""
    if not a.coeffs or a.coeffs[0] == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    coeffs = a.coeffs
    inv0 = 1 / coeffs[0]
    out = [inv0]
    for n in range(1, len(coeffs)):
        acc = sum((coeffs[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
        out.append(-acc * inv0)
    return Series._raw(tuple(out))


def compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(z))``; precision ``min(prec(outer)*order(inner), prec(inner))``."""
    k = inner.order
    if k == 0:
        return _compose_polynomial(outer, inner)
    if outer.prec < 0:
        return Series._raw(())
    if k == INFINITE_ORDER:
        return Series.constant(outer.coeffs[0], inner.prec)
    prec = min(outer.prec * int(k), inner.prec)
    top = min(outer.prec, prec // int(k))
    inner = inner.truncate(prec)
    acc = Series.constant(outer.coeffs[top], prec)
    for i in range(top - 1, -1, -1):
        acc = acc * inner + outer.coeffs[i]
    return acc


def _compose_polynomial(outer: Series, inner: Series) -> Series:
    # only valid when outer is known to be a polynomial: support ends before prec
    support = [n for n, c in enumerate(outer.coeffs) if c != 0]
    if outer.prec < 0 or (support and support[-1] >= outer.prec):
        raise DivergentComposition("inner series has a nonzero constant term and outer is not a polynomial")
    if not support:
        return Series.zero(inner.prec)
    acc = Series.constant(outer.coeffs[support[-1]], inner.prec)
    for i in range(support[-1] - 1, -1, -1):
        acc = acc * inner + outer.coeffs[i]
    return acc


def comp_inverse(f: Series) -> Series:
    """Compositional inverse by the triangular solve of ``g(f(z)) = z``.

    Column ``k`` of the system is ``f^k``; the degree-``n`` equation fixes
    ``g_n`` with pivot ``f_1^n``.
    """
    if f.order != 1:
        raise NotOrderOne(f"compositional inverse needs order 1, got order {f.order}")
    n_max = f.prec
    f1 = f.coeffs[1]
    powers = [Series.one(n_max), f]
    for _ in range(2, n_max):
        powers.append(powers[-1] * f)
    g = [Fraction(0)] * (n_max + 1)
    g[1] = 1 / f1
    for n in range(2, n_max + 1):
        acc = sum((g[k] * powers[k].coeffs[n] for k in range(1, n)), Fraction(0))
        g[n] = -acc / f1**n
    return Series._raw(tuple(g))


def lagrange_inverse(f: Series) -> Series:
    """Compositional inverse by ``[z^n] fbar = [z^(n-1)] (z/f)^n / n``."""
    if f.order != 1:
        raise NotOrderOne(f"compositional inverse needs order 1, got order {f.order}")
    n_max = f.prec
    ratio = recip(f.unshift(1))
    out = [Fraction(0)]
    power = ratio
    for n in range(1, n_max + 1):
        out.append(power.coeffs[n - 1] / n)
        power = power * ratio
    return Series._raw(tuple(out))


def rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def sqrt(a: Series) -> Series:
    """Square root with positive leading coefficient.

    For order ``2m`` the result has precision ``prec(a) - m``.
    """
    order = a.order
    if order == INFINITE_ORDER:
        raise InfiniteOrder("square root of an all-zero truncated series is not determined")
    if order % 2:
        raise OddOrder(f"series of odd order {order} has no square root")
    m = int(order) // 2
    body = a.unshift(2 * m).coeffs
    root0 = rational_sqrt(body[0])
    if root0 is None:
        raise NonSquareLeadingCoefficient(f"leading coefficient {body[0]} is not a rational square")
    out = [root0]
    twice = 2 * root0
    for n in range(1, len(body)):
        acc = sum((out[k] * out[n - k] for k in range(1, n)), Fraction(0))
        out.append((body[n] - acc) / twice)
    return Series._raw(tuple(out)).shift(m)


def exp(a: Series) -> Series:
    """``exp(a)`` for ``a(0) = 0`` via ``n e_n = sum k a_k e_(n-k)``."""
    if a.coeffs and a.coeffs[0] != 0:
        raise BadConstantTerm("exp needs a zero constant term")
    coeffs = a.coeffs
    out = [Fraction(1)] if coeffs else []
    for n in range(1, len(coeffs)):
        acc = sum((k * coeffs[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
        out.append(acc / n)
    return Series._raw(tuple(out))


def log(a: Series) -> Series:
    """``log(a)`` for ``a(0) = 1``."""
    if a.coeffs and a.coeffs[0] != 1:
        raise BadConstantTerm("log needs constant term 1")
    coeffs = a.coeffs
    out = [Fraction(0)] if coeffs else []
    for n in range(1, len(coeffs)):
        acc = sum((k * out[k] * coeffs[n - k] for k in range(1, n)), Fraction(0))
        out.append((n * coeffs[n] - acc) / n)
    return Series._raw(tuple(out))


def reflect(a: Series) -> Series:
    """``a(-z)``."""
    return Series._raw(tuple(-c if n % 2 else c for n, c in enumerate(a.coeffs)))


def parity_parts(h: Series) -> tuple[Series, Series]:
    """Split ``h = z h_o(z^2) + z^2 h_e(z^2)``."""
    if h.coeffs and h.coeffs[0] != 0:
        raise NonzeroConstant("parity split needs h(0) = 0")
    return Series._raw(h.coeffs[1::2]), Series._raw(h.coeffs[2::2])


def stretch(a: Series, k: int) -> Series:
    """``a(z^k)`` for ``k >= 1``."""
    if k < 1:
        raise ValueError("stretch factor must be positive")
    if k == 1:
        return a
    values = [Fraction(0)] * (k * (a.prec + 1))
    for n, c in enumerate(a.coeffs):
        values[k * n] = c
    return Series._raw(tuple(values))


def dilate(a: Series, factor: Scalar) -> Series:
    """``a(c z)``."""
    c = as_fraction(factor)
    return Series._raw(tuple(x * c**n for n, x in enumerate(a.coeffs)))


def catalan(prec: int) -> Series:
    """``C = 1 + z C^2``."""
    return Series._raw(tuple(Fraction(math.comb(2 * n, n), n + 1) for n in range(prec + 1)))


# ----------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Finite exact map ``exponent -> coefficient`` with no stored zeros."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | None = None) -> None:
        cleaned: dict[int, Fraction] = {}
        for exponent, coeff in (terms or {}).items():
            value = as_fraction(coeff)
            if value:
                cleaned[int(exponent)] = value
        self._terms = MappingProxyType(dict(sorted(cleaned.items())))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[object], start: int = 0) -> "LaurentPoly":
        return cls({start + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exponent: int, coeff: object = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, coeff: object) -> "LaurentPoly":
        return cls({0: coeff})

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "LaurentPoly":
        terms = {}
        for key, value in payload.items():
            try:
                exponent = int(str(key).strip())
            except ValueError as exc:
                raise ValueError(f"exponent keys must be decimal integers, got {key!r}") from exc
            terms[exponent] = as_fraction(str(value))
        return cls(terms)

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in self._terms.items()}

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no minimum degree")
        return next(iter(self._terms))

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no maximum degree")
        return next(reversed(self._terms))

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def is_polynomial(self) -> bool:
        return not self._terms or self.min_degree >= 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return dict(self._terms) == dict(other._terms)
        value = _scalar(other)
        if value is None:
            return NotImplemented
        return self == LaurentPoly.constant(value)

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            if e == 0:
                parts.append(str(c))
            else:
                mono = "z" if e == 1 else f"z^{e}"
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other: object) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            value = _scalar(other)
            if value is None:
                return NotImplemented
            other = LaurentPoly.constant(value)
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, Fraction(0)) + c
        return LaurentPoly(merged)

    __radd__ = __add__

    def __sub__(self, other: object) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return self + (-other)
        value = _scalar(other)
        if value is None:
            return NotImplemented
        return self + (-value)

    def __rsub__(self, other: object) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: object) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            value = _scalar(other)
            if value is None:
                return NotImplemented
            return LaurentPoly({e: c * value for e, c in self._terms.items()})
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible Laurent polynomials")
            (e, c), = self._terms.items()
            return LaurentPoly({-e * (-n): (1 / c) ** (-n)})
        result = LaurentPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, value: object) -> Fraction:
        x = as_fraction(value)
        return sum((c * x**e for e, c in self._terms.items()), Fraction(0))

    def value_at_one(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: e * c for e, c in self._terms.items() if e})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``z^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def invert_variable(self) -> "LaurentPoly":
        """``p(1/z)``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def compose(self, inner: "LaurentPoly") -> "LaurentPoly":
        """``p(inner)``; negative exponents need a monomial inner."""
        result = LaurentPoly()
        for e, c in self._terms.items():
            result = result + (inner**e) * c
        return result

    def evaluate(self, s: Series) -> Series:
        """Substitute a series; negative powers use ``1/s``."""
        if not self._terms:
            return Series.zero(s.prec)
        prec = s.prec
        total = Series.zero(prec)
        top = self.max_degree
        if top >= 0:
            acc = Series.constant(self.coefficient(top), prec)
            for e in range(top - 1, -1, -1):
                acc = acc * s + self.coefficient(e)
            total = total + acc
        bottom = self.min_degree
        if bottom < 0:
            r = recip(s)
            depth = -bottom
            acc = Series.constant(self.coefficient(-depth), prec)
            for m in range(depth - 1, 0, -1):
                acc = acc * r + self.coefficient(-m)
            total = total + acc * r
        return total

    def to_series(self, prec: int) -> Series:
        if not self.is_polynomial():
            raise ValueError(f"{self} has negative exponents")
        return Series([self.coefficient(e) for e in range(prec + 1)])


# ----------------------------------------------------------------------
# series in t = sqrt(z)


class HalfSeries:
    """Series in ``t`` with ``t^2 = z``; coefficients sit at half-integer powers of z."""

    __slots__ = ("_t",)

    def __init__(self, t_series: Series) -> None:
        self._t = t_series

    @classmethod
    def from_terms(cls, terms: Mapping[Fraction, object], prec: Fraction) -> "HalfSeries":
        """Build from ``{z-exponent: coeff}`` known through ``z^prec``."""
        t_prec = int(2 * Fraction(prec))
        values = [Fraction(0)] * (t_prec + 1)
        for exponent, coeff in terms.items():
            slot = 2 * Fraction(exponent)
            if slot.denominator != 1:
                raise ValueError(f"exponent {exponent} is not a multiple of 1/2")
            if slot > t_prec:
                raise InsufficientPrecision(int(slot), t_prec)
            values[int(slot)] += as_fraction(coeff)
        return cls(Series._raw(tuple(values)))

    @property
    def t_series(self) -> Series:
        return self._t

    @property
    def prec(self) -> Fraction:
        """Largest represented power of ``z``."""
        return Fraction(self._t.prec, 2)

    def coefficient(self, exponent: object) -> Fraction:
        slot = 2 * as_fraction(exponent)
        if slot.denominator != 1:
            raise ValueError(f"exponent {exponent} is not a multiple of 1/2")
        return self._t[int(slot)]

    def first_half_integer_exponent(self) -> Fraction | None:
        for i, c in enumerate(self._t.coeffs):
            if i % 2 and c:
                return Fraction(i, 2)
        return None

    def is_integral(self) -> bool:
        return self.first_half_integer_exponent() is None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HalfSeries):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(self._t)

    def __repr__(self) -> str:
        return f"HalfSeries(t-series {self._t})"

    def __neg__(self) -> "HalfSeries":
        return HalfSeries(-self._t)

    def __add__(self, other: object) -> "HalfSeries":
        if isinstance(other, HalfSeries):
            return HalfSeries(self._t + other._t)
        result = self._t + other
        return NotImplemented if result is NotImplemented else HalfSeries(result)

    __radd__ = __add__

    def __sub__(self, other: object) -> "HalfSeries":
        if isinstance(other, HalfSeries):
            return HalfSeries(self._t - other._t)
        result = self._t - other
        return NotImplemented if result is NotImplemented else HalfSeries(result)

    def __mul__(self, other: object) -> "HalfSeries":
        if isinstance(other, HalfSeries):
            return HalfSeries(self._t * other._t)
        result = self._t * other
        return NotImplemented if result is NotImplemented else HalfSeries(result)

    __rmul__ = __mul__


def half_lift(a: Series) -> HalfSeries:
    """Embed ``a`` with its z-powers at the integral slots."""
    return HalfSeries(stretch(a, 2))


def half_project(h: HalfSeries) -> Series:
    """Inverse of :func:`half_lift`; all half-integer coefficients must vanish."""
    bad = h.first_half_integer_exponent()
    if bad is not None:
        raise NonIntegralHalfSeries(bad)
    return Series._raw(h.t_series.coeffs[::2])


def substitute_sqrt(a: Series) -> HalfSeries:
    """``a(sqrt(z))``."""
    return HalfSeries(a)


def compose_half(outer: Series, inner: HalfSeries) -> HalfSeries:
    """``outer(inner)`` where ``inner`` vanishes at ``z = 0``."""
    return HalfSeries(compose(outer, inner.t_series))
