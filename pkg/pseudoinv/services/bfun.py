"""B-sequences by several independent methods, cross-validated."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from pseudoinv.config.manager import config_manager
from pseudoinv.config.defaults import METHODS
from pseudoinv.core.gammatool import GammaFlavor, b_from_gamma_egf, b_from_gamma_ogf
from pseudoinv.core.pseudo import BSequence, b_from_f, b_from_half, b_from_matrix, pseudo_half
from pseudoinv.core.ratsolve import b_from_rational
from pseudoinv.core.riordan import Flavor, RiordanArray, entries
from pseudoinv.services import cache
from pseudoinv.services.specs import ProblemSpec, UsageError

logger = logging.getLogger(__name__)


class MethodDisagreement(ArithmeticError):
    def __init__(self, first: str, second: str, index: int) -> None:
        super().__init__(f"methods {first} and {second} disagree at b_{index}")
        self.first = first
        self.second = second
        self.index = index


def _working_precision(N: int) -> int:
    return 2 * N + 6


def _by_definition(spec: ProblemSpec, N: int) -> BSequence:
    f = spec.f(2 * N + 2)
    return b_from_f(f, N)


def _by_matrix(spec: ProblemSpec, N: int) -> BSequence:
    top = 2 * N + 2
    g, f = spec.pair(top)
    return b_from_matrix(entries(RiordanArray(g, f, Flavor.ORDINARY), top))


def _by_half(spec: ProblemSpec, N: int) -> BSequence:
    f = spec.f(_working_precision(N))
    return b_from_half(pseudo_half(f)).truncate(N)


def _by_gamma(spec: ProblemSpec, N: int) -> BSequence:
    if spec.gamma.flavor is GammaFlavor.OGF:
        return b_from_gamma_ogf(spec.gamma.gamma, N)
    return b_from_gamma_egf(spec.gamma.gamma, N)


def _by_rational(spec: ProblemSpec, N: int) -> BSequence:
    return b_from_rational(spec.p, spec.q, N)


_DISPATCH: dict[str, Callable[[ProblemSpec, int], BSequence]] = {
    "definition": _by_definition,
    "matrix": _by_matrix,
    "half": _by_half,
    "gamma": _by_gamma,
    "rational": _by_rational,
}


def parse_methods(text: str | Iterable[str] | None, spec: ProblemSpec) -> list[str]:
    """Validate a method list; ``None`` means every configured method the spec supports."""
    if text is None:
        configured = config_manager.get("bfun", "methods", list(METHODS))
        return [m for m in configured if m in spec.methods_available()]
    requested = [m.strip() for m in text.split(",")] if isinstance(text, str) else list(text)
    requested = [m for m in requested if m]
    if not requested:
        raise UsageError("no methods given")
    for method in requested:
        if method not in _DISPATCH:
            raise UsageError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
        if method not in spec.methods_available():
            raise UsageError(f"method {method!r} does not apply to a {spec.kind} spec")
    return list(dict.fromkeys(requested))


def compute(spec: ProblemSpec, N: int, method: str) -> BSequence:
    """``b_0..b_N`` of the companion of ``spec`` by one method."""
    runner = _DISPATCH[method]

    def _run() -> BSequence:
        started = time.perf_counter()
        result = runner(spec, N).truncate(N)
        logger.info("%s via %s to N=%d in %.3fs", spec.name or spec.kind, method, N, time.perf_counter() - started)
        return result

    return cache.get_bsequence(spec.key, method, N, _run)


@dataclass(frozen=True)
class BfunResult:
    N: int
    sequences: dict[str, BSequence]
    disagreement: tuple[str, str, int] | None = None

    @property
    def agree(self) -> bool:
        return self.disagreement is None

    def raise_for_disagreement(self) -> None:
        if self.disagreement is not None:
            raise MethodDisagreement(*self.disagreement)


def first_disagreement(sequences: dict[str, BSequence]) -> tuple[str, str, int] | None:
    """Earliest index at which any method differs from the first one."""
    items = list(sequences.items())
    if len(items) < 2:
        return None
    reference_name, reference = items[0]
    worst: tuple[str, str, int] | None = None
    for name, other in items[1:]:
        index = reference.first_difference(other)
        if index is not None and (worst is None or index < worst[2]):
            worst = (reference_name, name, index)
    return worst


def cross_validate(spec: ProblemSpec, N: int, methods: Sequence[str]) -> BfunResult:
    sequences = {method: compute(spec, N, method) for method in methods}
    disagreement = first_disagreement(sequences)
    if disagreement is not None:
        logger.warning("%s and %s disagree at b_%d", *disagreement)
    return BfunResult(N, sequences, disagreement)
