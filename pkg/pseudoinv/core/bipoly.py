"""Exact polynomials in two variables, written x and y."""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from pseudoinv.core.fps import LaurentPoly, Series, as_fraction

Monomial = tuple[int, int]


class BivariatePoly:
    """Finite map ``(i, j) -> c`` standing for ``sum c x^i y^j``; zeros are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None) -> None:
        cleaned: dict[Monomial, Fraction] = {}
        for (i, j), coeff in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            value = as_fraction(coeff)
            if value:
                cleaned[(int(i), int(j))] = value
        self._terms = MappingProxyType(dict(sorted(cleaned.items())))

    @classmethod
    def constant(cls, value: object) -> "BivariatePoly":
        return cls({(0, 0): value})

    @classmethod
    def x(cls) -> "BivariatePoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePoly":
        return cls({(0, 1): 1})

    @classmethod
    def from_univariate(cls, poly: LaurentPoly | Iterable[object], variable: str = "x") -> "BivariatePoly":
        """Embed an ordinary polynomial in ``x`` (or ``y``)."""
        if isinstance(poly, LaurentPoly):
            if not poly.is_polynomial():
                raise ValueError(f"{poly} has negative exponents")
            items = poly.terms.items()
        else:
            items = enumerate(poly)
        if variable == "x":
            return cls({(e, 0): c for e, c in items})
        return cls({(0, e): c for e, c in items})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    @property
    def x_degree(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self._terms.items():
            mono = "*".join(
                piece
                for piece in (
                    "" if i == 0 else "x" if i == 1 else f"x^{i}",
                    "" if j == 0 else "y" if j == 1 else f"y^{j}",
                )
                if piece
            )
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"BivariatePoly({self})"

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly({m: -c for m, c in self._terms.items()})

    def __add__(self, other: object) -> "BivariatePoly":
        if not isinstance(other, BivariatePoly):
            try:
                other = BivariatePoly.constant(other)
            except TypeError:
                return NotImplemented
        merged = dict(self._terms)
        for m, c in other._terms.items():
            merged[m] = merged.get(m, Fraction(0)) + c
        return BivariatePoly(merged)

    __radd__ = __add__

    def __sub__(self, other: object) -> "BivariatePoly":
        if not isinstance(other, BivariatePoly):
            try:
                other = BivariatePoly.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "BivariatePoly":
        return (-self) + other

    def __mul__(self, other: object) -> "BivariatePoly":
        if not isinstance(other, BivariatePoly):
            try:
                value = as_fraction(other)
            except TypeError:
                return NotImplemented
            return BivariatePoly({m: c * value for m, c in self._terms.items()})
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivariatePoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = BivariatePoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def truncate_total(self, degree: int) -> "BivariatePoly":
        """Drop monomials of total degree above ``degree``."""
        return BivariatePoly({m: c for m, c in self._terms.items() if m[0] + m[1] <= degree})

    def swap(self) -> "BivariatePoly":
        return BivariatePoly({(j, i): c for (i, j), c in self._terms.items()})

    def scale_variables(self, x_factor: object = 1, y_factor: object = 1) -> "BivariatePoly":
        """``P(a x, b y)``."""
        a, b = as_fraction(x_factor), as_fraction(y_factor)
        return BivariatePoly({(i, j): c * a**i * b**j for (i, j), c in self._terms.items()})

    def partial_x(self) -> "BivariatePoly":
        return BivariatePoly({(i - 1, j): i * c for (i, j), c in self._terms.items() if i})

    def partial_y(self) -> "BivariatePoly":
        return BivariatePoly({(i, j - 1): j * c for (i, j), c in self._terms.items() if j})

    def substitute(self, x_value: "BivariatePoly", y_value: "BivariatePoly") -> "BivariatePoly":
        """``P(X, Y)`` for bivariate ``X`` and ``Y``."""
        x_powers: dict[int, BivariatePoly] = {0: BivariatePoly.constant(1)}
        y_powers: dict[int, BivariatePoly] = {0: BivariatePoly.constant(1)}
        for i in range(1, self.x_degree + 1):
            x_powers[i] = x_powers[i - 1] * x_value
        for j in range(1, self.y_degree + 1):
            y_powers[j] = y_powers[j - 1] * y_value
        result = BivariatePoly()
        for (i, j), c in self._terms.items():
            result = result + x_powers[i] * y_powers[j] * c
        return result

    def x_coefficient(self, i: int) -> LaurentPoly:
        """Coefficient of ``x^i`` as a polynomial in ``y``."""
        return LaurentPoly({j: c for (k, j), c in self._terms.items() if k == i})

    def __call__(self, x: object, y: object) -> Fraction:
        a, b = as_fraction(x), as_fraction(y)
        return sum((c * a**i * b**j for (i, j), c in self._terms.items()), Fraction(0))

    def evaluate_series(self, x: Series, y: Series) -> Series:
        """``P(x(z), y(z))`` as a truncated series."""
        prec = min(x.prec, y.prec)
        x, y = x.truncate(prec), y.truncate(prec)
        x_powers = [Series.one(prec)]
        for _ in range(self.x_degree):
            x_powers.append(x_powers[-1] * x)
        y_powers = [Series.one(prec)]
        for _ in range(self.y_degree):
            y_powers.append(y_powers[-1] * y)
        total = Series.zero(prec)
        for (i, j), c in self._terms.items():
            total = total + x_powers[i] * y_powers[j] * c
        return total

    def evaluate_x(self, x: Series) -> Series:
        """``P(x(z), z)``: the second variable is the series variable."""
        return self.evaluate_series(x, Series.variable(x.prec))
