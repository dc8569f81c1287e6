"""Acceptance suites run by ``verify``: worked examples, identities, structure."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from pseudoinv.core.chebfam import (
    IDENTITIES,
    P_poly,
    P_via_chebyshev,
    Q_poly,
    Q_via_chebyshev,
    R_poly,
    R_via_qp,
    check_identity,
    p_poly,
    p_via_chebyshev,
)
from pseudoinv.core.errors import PseudoInvError
from pseudoinv.core.fps import LaurentPoly, Series, recip
from pseudoinv.core.gammatool import b_from_gamma_ogf, b_scale, check_eta_H, eta_H_laurent, quad_closed_form, scale_pair
from pseudoinv.core.pseudo import b_from_f, canonical_root, g_family
from pseudoinv.core.ratsolve import b_equation, b_equation_cheb
from pseudoinv.core.riordan import (
    RiordanArray,
    identity,
    inverse,
    is_pseudo_involution,
    multiply,
    pseudo_inverse,
)
from pseudoinv.services import bfun
from pseudoinv.services.registry import REGISTRY, ExampleRegistryEntry, lookup
from pseudoinv.services.specs import UsageError

logger = logging.getLogger(__name__)

CheckFn = Callable[[], "tuple[bool, str]"]


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    run: CheckFn


@dataclass(frozen=True)
class CheckResult:
    name: str
    anchor: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict[str, object]:
        return {"name": self.name, "anchor": self.anchor, "passed": self.passed, "detail": self.detail}


def _same(actual, expected) -> tuple[bool, str]:
    actual, expected = list(actual), list(expected)
    if actual == expected:
        return True, ""
    for n, (a, e) in enumerate(zip(actual, expected)):
        if a != e:
            return False, f"index {n}: got {a}, expected {e}"
    return False, f"length {len(actual)} != {len(expected)}"


# ----------------------------------------------------------------------
# worked examples


def _prefix_check(entry: ExampleRegistryEntry, quantity: str, method: str | None = None) -> CheckFn:
    expected = entry.expected[quantity]
    N = len(expected.values) - 1
    spec = entry.spec

    def run() -> tuple[bool, str]:
        if quantity == "g":
            actual = spec.g(N).coeffs
        elif quantity == "f":
            actual = spec.f(N).coeffs
        elif quantity == "beta":
            actual = bfun.compute(spec, N, "definition").beta()
        else:
            actual = bfun.compute(spec, N, method).b
        return _same(actual, expected.values)

    return run


def _eta_H_check(name: str, eta: dict, H: dict) -> CheckFn:
    def run() -> tuple[bool, str]:
        gamma = lookup(name).spec.gamma.gamma
        got_eta, got_H = eta_H_laurent(gamma)
        if got_eta != LaurentPoly(eta) or got_H != LaurentPoly(H):
            return False, f"eta = {got_eta}, H = {got_H}"
        return check_eta_H(gamma), ""

    return run


def _fibonacci_equation() -> tuple[bool, str]:
    spec = lookup("fibonacci").spec
    phi = b_equation(spec.p, spec.q)
    # x - x^2 - 3z + zx + z^2, i.e. z B^2 - (1+z) B + (3-z) = 0 with x = z B
    expected = {(1, 0): 1, (2, 0): -1, (0, 1): -3, (1, 1): 1, (0, 2): 1}
    if phi.terms != {k: Fraction(v) for k, v in expected.items()}:
        return False, f"Phi = {phi}"
    cheb = b_equation_cheb(spec.p, spec.q).in_x()
    if cheb != phi:
        return False, f"Chebyshev form gives {cheb}"
    return True, ""


QUADRATIC_DEPTH = 16
QUADRATIC_TRIPLES = (
    (1, 1, 2),
    (2, 1, 3),
    (Fraction(1, 2), -1, Fraction(3, 4)),
    (-2, Fraction(1, 3), 5),
    (Fraction(-3, 2), Fraction(5, 2), Fraction(2, 3)),
)


def _quadratic_vs_gamma(a, b, c) -> CheckFn:
    def run() -> tuple[bool, str]:
        gamma = LaurentPoly({0: a, 1: b, 2: c})
        return _same(quad_closed_form(a, b, c, QUADRATIC_DEPTH).b, b_from_gamma_ogf(gamma, QUADRATIC_DEPTH).b)

    return run


def _quadratic_fractional_linear(b, c) -> CheckFn:
    # a = 0: ((b+3c) - (b-c) c^2 z) / (1 - bcz)
    def run() -> tuple[bool, str]:
        b_, c_ = Fraction(b), Fraction(c)
        numerator = Series([b_ + 3 * c_, -(b_ - c_) * c_**2], QUADRATIC_DEPTH)
        expected = numerator * recip(Series([1, -b_ * c_], QUADRATIC_DEPTH))
        return _same(quad_closed_form(0, b, c, QUADRATIC_DEPTH).b, expected.coeffs)

    return run


def _quadratic_linear(a, b) -> CheckFn:
    def run() -> tuple[bool, str]:
        expected = [Fraction(b) - Fraction(a)] + [Fraction(0)] * QUADRATIC_DEPTH
        return _same(quad_closed_form(a, b, 0, QUADRATIC_DEPTH).b, expected)

    return run


def _quadratic_checks() -> Iterator[Check]:
    for a, b, c in QUADRATIC_TRIPLES:
        yield Check(f"quad-laurent ({a}, {b}, {c}): closed form", "[FORMULA] (-a+b+3c) + ((a+b+c) c z C(acz^2)) o inner", _quadratic_vs_gamma(a, b, c))
    for b, c in ((-1, 2), (1, 3), (Fraction(2, 3), Fraction(-1, 2))):
        yield Check(f"quad-laurent (0, {b}, {c}): fractional linear", "[DERIVED] (b+3c) + (b+c)^2 c z / (1-bcz)", _quadratic_fractional_linear(b, c))
    for a, b in ((1, 1), (2, Fraction(-1, 2)), (3, 5)):
        yield Check(f"quad-laurent ({a}, {b}, 0): constant", "[FORMULA] B = b - a", _quadratic_linear(a, b))


def _example_checks() -> Iterator[Check]:
    for name in sorted(REGISTRY):
        entry = REGISTRY[name]
        for quantity, prefix in entry.expected.items():
            if quantity == "B":
                for method in entry.spec.methods_available():
                    yield Check(f"{name}: B via {method}", prefix.provenance, _prefix_check(entry, "B", method))
            else:
                yield Check(f"{name}: {quantity}", prefix.provenance, _prefix_check(entry, quantity))
    yield Check(
        "schroeder-little: eta and H", "[FORMULA] eta = 1-2z, H = 5+2z", _eta_H_check("schroeder-little", {0: 1, 1: -2}, {0: 5, 1: 2})
    )
    yield Check(
        "motzkin-ext-doubled: eta and H",
        "[FORMULA] eta = 4+3z+3z^2/4, H = z/2",
        _eta_H_check("motzkin-ext-doubled", {0: 4, 1: 3, 2: Fraction(3, 4)}, {1: Fraction(1, 2)}),
    )
    yield Check("fibonacci: B-equation", "[FORMULA] z B^2 - (1+z) B + (3-z) = 0", _fibonacci_equation)
    yield from _quadratic_checks()


# ----------------------------------------------------------------------
# identities


def _laurent_equal(left: LaurentPoly, right: LaurentPoly, label: str) -> tuple[bool, str]:
    return (True, "") if left == right else (False, f"{label}: {left} != {right}")


def _relations(n: int) -> tuple[bool, str]:
    def p(m: int) -> LaurentPoly:
        return p_poly(m).as_laurent()

    def P(m: int) -> LaurentPoly:
        return P_poly(m).as_laurent()

    def Q(m: int) -> LaurentPoly:
        return Q_poly(m).as_laurent()

    checks = [
        (P(n), p(n) - p(n - 1), "P_n = p_n - p_(n-1)"),
        (P(n) * P(n), p(2 * n), "P_n^2 = p_2n"),
        (p_via_chebyshev(n).as_laurent(), p(n), "p_n from U"),
        (P_via_chebyshev(n).as_laurent(), P(n), "P_n from U"),
        (Q_via_chebyshev(n).as_laurent(), Q(n), "Q_n from T"),
        (R_via_qp(n).as_laurent(), R_poly(n).as_laurent(), "R_n from Q and P"),
    ]
    if n >= 1:
        checks.append((Q(n), P(n) - P(n - 1), "Q_n = P_n - P_(n-1)"))
    for left, right, label in checks:
        ok, detail = _laurent_equal(left, right, label)
        if not ok:
            return ok, detail
    return True, ""


def _identity_check(family: str, n: int) -> CheckFn:
    return lambda: (check_identity(family, n), "")


def _group_axioms(name: str) -> CheckFn:
    def run() -> tuple[bool, str]:
        D = lookup(name).spec.riordan(12)
        left = multiply(D, inverse(D))
        if not left.agrees_with(identity(12, D.flavor)):
            return False, "D times its inverse is not the identity"
        other = lookup("pascal").spec.riordan(12, D.flavor)
        lhs = multiply(multiply(D, other), D)
        rhs = multiply(D, multiply(other, D))
        if not lhs.agrees_with(rhs):
            return False, "product is not associative"
        return True, ""

    return run


def _identity_checks() -> Iterator[Check]:
    for family in sorted(IDENTITIES):
        start = 0 if family in ("p", "P") else 1
        for n in range(start, 11):
            yield Check(f"{family}_{n}: two-variable substitution", "[FORMULA] substitution identities", _identity_check(family, n))
    for n in range(0, 11):
        yield Check(f"relations at n={n}", "[FORMULA] P_n = p_n - p_(n-1), P_n^2 = p_2n, Q_n = P_n - P_(n-1)", lambda n=n: _relations(n))
    for name in ("pascal", "catalan-doubled", "labeled-trees"):
        yield Check(f"{name}: group axioms", "[FORMULA] product and inverse formulas", _group_axioms(name))


# ----------------------------------------------------------------------
# structure theorems


_PSEUDO_INVOLUTIONS = ("pascal", "catalan-doubled", "fibonacci", "schroeder-little", "labeled-trees")


def _certified(certificate) -> tuple[bool, str]:
    if certificate:
        return True, ""
    return False, f"{certificate.condition} fails at index {certificate.index}"


def _fixture_is_pseudo_involution(name: str) -> CheckFn:
    def run() -> tuple[bool, str]:
        certificate = is_pseudo_involution(lookup(name).spec.riordan(12))
        return _certified(certificate)

    return run


def _root_check(name: str, psi: RiordanArray | None = None) -> CheckFn:
    def run() -> tuple[bool, str]:
        D = lookup(name).spec.riordan(12)
        X = canonical_root(D)
        if psi is not None:
            X = multiply(X, RiordanArray(psi.g.truncate(X.prec), psi.f.truncate(X.prec), D.flavor))
        product = multiply(X, pseudo_inverse(X))
        depth = min(product.prec, D.prec)
        if not product.agrees_with(D, depth):
            return False, "X Xhat != D"
        return True, ""

    return run


def _g_family_check(name: str) -> CheckFn:
    def run() -> tuple[bool, str]:
        f = lookup(name).spec.f(12)
        phi = Series([0, 1, 0, Fraction(-1, 3), 0, 2], 12)
        certificate = is_pseudo_involution(RiordanArray(g_family(f, phi), f))
        return _certified(certificate)

    return run


def _hat_product_check() -> tuple[bool, str]:
    X = RiordanArray(Series([1, 2, -1, 3], 10), Series([0, 1, Fraction(1, 2), 0, -2], 10))
    certificate = is_pseudo_involution(multiply(X, pseudo_inverse(X)))
    return _certified(certificate)


def _scaling_check(name: str, k: int) -> CheckFn:
    def run() -> tuple[bool, str]:
        g, f = lookup(name).spec.pair(34)
        _, scaled = scale_pair(g, f, k)
        return _same(b_from_f(scaled, 16).b, b_scale(b_from_f(f, 16), k).b)

    return run


def _structure_checks() -> Iterator[Check]:
    for name in _PSEUDO_INVOLUTIONS:
        yield Check(f"{name}: pseudo-involution", "[FORMULA] g o (-f) = 1/g", _fixture_is_pseudo_involution(name))
        yield Check(f"{name}: canonical root", "[FORMULA] X = (sqrt g, sqrt(zf))", _root_check(name))
        yield Check(f"{name}: g-family", "[FORMULA] g = exp(phi(sqrt(zf)))", _g_family_check(name))
    checkerboard = RiordanArray(Series([1, 0, 3, 0, -1], 12), Series([0, 1, 0, 2], 12))
    yield Check("catalan-doubled: root times checkerboard", "[FORMULA] roots differ by a checkerboard factor", _root_check("catalan-doubled", checkerboard))
    yield Check("X Xhat is a pseudo-involution", "[FORMULA] pseudo-inverse products", _hat_product_check)
    for name in ("catalan-doubled", "pascal"):
        for k in (-2, -1, 2, 3):
            yield Check(f"{name}: scaling by {k}", "[FORMULA] B_F(z) = k B_f(k^2 z)", _scaling_check(name, k))


SUITES: dict[str, Callable[[], Iterator[Check]]] = {
    "examples": _example_checks,
    "identities": _identity_checks,
    "structure": _structure_checks,
}


def _execute(check: Check) -> CheckResult:
    try:
        passed, detail = check.run()
    except (PseudoInvError, ArithmeticError, ValueError) as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    if not passed:
        logger.warning("check failed: %s (%s)", check.name, detail)
    return CheckResult(check.name, check.anchor, bool(passed), detail)


def run_suite(suite: str, workers: int | None = None) -> list[CheckResult]:
    """Run every check of ``suite``; results keep the suite's declaration order."""
    try:
        factory = SUITES[suite]
    except KeyError:
        raise UsageError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}") from None
    checks = list(factory())
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_execute, checks))


def verify_report(suite: str) -> dict[str, object]:
    results = run_suite(suite)
    failures = [r.name for r in results if not r.passed]
    return {
        "suite": suite,
        "passed": not failures,
        "total": len(results),
        "failures": failures,
        "checks": [r.to_json() for r in results],
    }
