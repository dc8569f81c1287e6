"""Riordan arrays as group elements, in ordinary and exponential flavors."""

from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from pseudoinv.core.errors import InsufficientPrecision, PseudoInvError
from pseudoinv.core.fps import Series, comp_inverse, compose, exp, recip, reflect

logger = logging.getLogger(__name__)


class RiordanError(PseudoInvError):
    """Base class for Riordan-array failures."""


class FlavorMismatch(RiordanError):
    """Raised when arrays of different flavors are multiplied."""


class InvalidRiordanArray(RiordanError):
    """Raised when g(0) != 1, f(0) != 0 or f'(0) is not +1 or -1."""


class Flavor(str, Enum):
    ORDINARY = "ordinary"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class TriangularMatrix:
    """Lower-triangular exact matrix; row ``n`` stores entries ``0..n``."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Sequence[object]]) -> None:
        converted = []
        for n, row in enumerate(rows):
            values = tuple(Fraction(v) if not isinstance(v, Fraction) else v for v in row)
            if len(values) != n + 1:
                raise ValueError(f"row {n} has {len(values)} entries, expected {n + 1}")
            converted.append(values)
        object.__setattr__(self, "rows", tuple(converted))

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        n, k = index
        if k > n:
            return Fraction(0)
        return self.rows[n][k]

    def column(self, k: int) -> list[Fraction]:
        return [self.rows[n][k] for n in range(k, self.size)]

    def diagonal(self) -> list[Fraction]:
        return [self.rows[n][n] for n in range(self.size)]

    def leading(self, size: int) -> "TriangularMatrix":
        return TriangularMatrix(self.rows[:size])

    def replace(self, n: int, k: int, value: object) -> "TriangularMatrix":
        """Copy with one entry changed."""
        rows = [list(r) for r in self.rows]
        rows[n][k] = Fraction(value)
        return TriangularMatrix(rows)

    def __matmul__(self, other: "TriangularMatrix") -> "TriangularMatrix":
        return self.matmul(other)

    def matmul(self, other: "TriangularMatrix") -> "TriangularMatrix":
        size = min(self.size, other.size)
        rows = []
        for n in range(size):
            rows.append(
                tuple(
                    sum((self.rows[n][j] * other.rows[j][k] for j in range(k, n + 1)), Fraction(0))
                    for k in range(n + 1)
                )
            )
        return TriangularMatrix(rows)

    def inverse(self) -> "TriangularMatrix":
        """Forward substitution; every diagonal entry must be nonzero."""
        size = self.size
        if any(d == 0 for d in self.diagonal()):
            raise ZeroDivisionError("singular triangular matrix")
        inv = [[Fraction(0)] * (n + 1) for n in range(size)]
        for j in range(size):
            inv[j][j] = 1 / self.rows[j][j]
            for i in range(j + 1, size):
                acc = sum((self.rows[i][k] * inv[k][j] for k in range(j, i)), Fraction(0))
                inv[i][j] = -acc / self.rows[i][i]
        return TriangularMatrix(inv)

    def to_json(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.rows]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for row in self.rows:
            writer.writerow([str(v) for v in row])
        return buffer.getvalue()


@dataclass(frozen=True)
class RiordanArray:
    g: Series
    f: Series
    flavor: Flavor = Flavor.ORDINARY

    def __post_init__(self) -> None:
        if self.g.prec < 0 or self.g[0] != 1:
            raise InvalidRiordanArray("g(0) must be 1")
        if self.f.prec < 1 or self.f[0] != 0 or abs(self.f[1]) != 1:
            raise InvalidRiordanArray("f must satisfy f(0) = 0 and f'(0) = +1 or -1")
        object.__setattr__(self, "flavor", Flavor(self.flavor))

    @property
    def prec(self) -> int:
        return min(self.g.prec, self.f.prec)

    def truncate(self, prec: int) -> "RiordanArray":
        return RiordanArray(self.g.truncate(prec), self.f.truncate(prec), self.flavor)

    def agrees_with(self, other: "RiordanArray", upto: int | None = None) -> bool:
        return self.g.agrees_with(other.g, upto) and self.f.agrees_with(other.f, upto)

    def __matmul__(self, other: "RiordanArray") -> "RiordanArray":
        return multiply(self, other)


@dataclass(frozen=True)
class Certificate:
    """Outcome of a precision-bounded check; truthy when it passed."""

    holds: bool
    depth: int
    condition: str | None = None
    index: int | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict[str, object]:
        return {"holds": self.holds, "depth": self.depth, "condition": self.condition, "index": self.index}


# ----------------------------------------------------------------------
# constructors


def identity(prec: int, flavor: Flavor = Flavor.ORDINARY) -> RiordanArray:
    return RiordanArray(Series.one(prec), Series.variable(prec), flavor)


def pascal(prec: int, flavor: Flavor = Flavor.ORDINARY) -> RiordanArray:
    """``(1/(1-z), z/(1-z))``, or ``[e^z, z]`` in the exponential flavor."""
    if Flavor(flavor) is Flavor.EXPONENTIAL:
        return RiordanArray(exp(Series.variable(prec)), Series.variable(prec), flavor)
    geometric = Series([1] * (prec + 1))
    return RiordanArray(geometric, geometric.shift(1).truncate(prec), flavor)


def bell(g: Series, k: int = 1, flavor: Flavor = Flavor.ORDINARY) -> RiordanArray:
    """Bell-subgroup element ``(g, z g^k)``."""
    return RiordanArray(g, (g**k).shift(1).truncate(g.prec), flavor)


# ----------------------------------------------------------------------
# operations


def entries(D: RiordanArray, N: int) -> TriangularMatrix:
    """Rows ``0..N``; column ``k`` is read off ``g f^k``."""
    if N > D.prec:
        raise InsufficientPrecision(N, D.prec)
    g, f = D.g.truncate(N), D.f.truncate(N)
    columns = []
    column = g
    for k in range(N + 1):
        columns.append(column.coeffs)
        column = column * f
    exponential = D.flavor is Flavor.EXPONENTIAL
    rows = []
    for n in range(N + 1):
        row = []
        for k in range(n + 1):
            value = columns[k][n]
            if exponential:
                value *= Fraction(math.factorial(n), math.factorial(k))
            row.append(value)
        rows.append(row)
    return TriangularMatrix(rows)


def multiply(A: RiordanArray, B: RiordanArray) -> RiordanArray:
    """``(g, f)(G, F) = (g (G o f), F o f)``."""
    if A.flavor is not B.flavor:
        raise FlavorMismatch(f"cannot multiply {A.flavor.value} by {B.flavor.value}")
    return RiordanArray(A.g * compose(B.g, A.f), compose(B.f, A.f), A.flavor)


def inverse(D: RiordanArray) -> RiordanArray:
    """``(1 / g(fbar), fbar)``."""
    fbar = comp_inverse(D.f)
    return RiordanArray(recip(compose(D.g, fbar)), fbar, D.flavor)


def hat(f: Series) -> Series:
    """Pseudo-inverse of a function: ``(-z) o fbar o (-z)``."""
    return -reflect(comp_inverse(f))


def pseudo_inverse(D: RiordanArray) -> RiordanArray:
    """``((1/g) o (-fhat), fhat)``."""
    fhat = hat(D.f)
    return RiordanArray(recip(compose(D.g, -fhat)), fhat, D.flavor)


def is_pseudo_involution(D: RiordanArray, N: int | None = None) -> Certificate:
    """Check ``g (g o (-f)) = 1`` and ``fbar = (-z) o f o (-z)`` through index ``N``."""
    depth = D.prec if N is None else N
    if depth > D.prec:
        raise InsufficientPrecision(depth, D.prec)
    g, f = D.g.truncate(depth), D.f.truncate(depth)
    product = g * compose(g, -f)
    gap = product.first_difference(Series.one(depth))
    if gap is not None:
        return Certificate(False, depth, "g*g(-f) = 1", gap)
    gap = comp_inverse(f).first_difference(-reflect(f))
    if gap is not None:
        return Certificate(False, depth, "fbar = -f(-z)", gap)
    return Certificate(True, depth)


def is_checkerboard(D: RiordanArray) -> bool:
    """Even ``g`` and odd ``f``, as far as stored."""
    g_even = not any(D.g.coeffs[1::2])
    f_odd = not any(D.f.coeffs[0::2])
    return g_even and f_odd


def apply_sequence(D: RiordanArray, h: Series) -> Series:
    """Fundamental theorem: ``D`` applied to ``h`` is ``g (h o f)``."""
    return D.g * compose(h, D.f)
