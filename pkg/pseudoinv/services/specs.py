"""Problem specifications: JSON parsing and construction of ``(g, f)``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from pseudoinv.config.manager import config_manager
from pseudoinv.core.errors import InsufficientPrecision
from pseudoinv.core.fps import LaurentPoly, Series, as_fraction
from pseudoinv.core.gammatool import GammaFlavor, GammaSpec, companion_from_gamma, solve_g
from pseudoinv.core.pseudo import companion_of
from pseudoinv.core.ratsolve import rational_g
from pseudoinv.core.riordan import Flavor, RiordanArray

KINDS = ("gamma-ogf", "gamma-egf", "rational", "explicit")


class UsageError(ValueError):
    """Raised for malformed specs, unknown names and out-of-range options."""


def _coefficient_list(value: Any, label: str) -> tuple:
    if not isinstance(value, list) or not value:
        raise UsageError(f"'{label}' must be a non-empty list of rational strings")
    try:
        return tuple(as_fraction(item) for item in value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"'{label}' holds a non-rational entry: {exc}") from exc


@dataclass(frozen=True)
class ProblemSpec:
    """One problem instance.

    ``gamma-*`` kinds carry a :class:`GammaSpec`, ``rational`` carries ``p`` and
    ``q``, ``explicit`` carries a prefix of ``g`` and optionally of ``f``.
    Explicit prefixes marked ``exact`` are polynomials and extend by zeros.
    """

    kind: str
    gamma: GammaSpec | None = None
    p: LaurentPoly | None = None
    q: LaurentPoly | None = None
    g_prefix: tuple = ()
    f_prefix: tuple = ()
    exact: bool = False
    name: str | None = field(default=None, compare=False)

    @property
    def key(self) -> str:
        """Canonical text used for caching; independent of the entry name."""
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @property
    def default_flavor(self) -> Flavor:
        return Flavor.EXPONENTIAL if self.kind == "gamma-egf" else Flavor.ORDINARY

    def methods_available(self) -> tuple[str, ...]:
        if self.kind.startswith("gamma"):
            return ("definition", "matrix", "half", "gamma")
        if self.kind == "rational":
            return ("definition", "matrix", "half", "rational")
        return ("definition", "matrix", "half")

    def g(self, N: int) -> Series:
        if self.gamma is not None:
            return solve_g(self.gamma, N)
        if self.kind == "rational":
            return rational_g(self.p, self.q, N)
        return self._prefix(self.g_prefix, N)

    def f(self, N: int, g: Series | None = None) -> Series:
        """Pseudo-involutory companion of ``g`` through degree ``N``."""
        if self.gamma is not None:
            return companion_from_gamma(self.gamma, N, g)
        if self.kind == "explicit" and self.f_prefix:
            return self._prefix(self.f_prefix, N)
        return companion_of(self.g(N) if g is None else g.truncate(N), N)

    def pair(self, N: int) -> tuple[Series, Series]:
        g = self.g(N)
        return g, self.f(N, g)

    def riordan(self, N: int, flavor: Flavor | str | None = None) -> RiordanArray:
        g, f = self.pair(N)
        return RiordanArray(g, f, Flavor(flavor) if flavor else self.default_flavor)

    def _prefix(self, coeffs: tuple, N: int) -> Series:
        if self.exact:
            return Series(coeffs[: N + 1] + (0,) * max(0, N + 1 - len(coeffs)), N)
        if N > len(coeffs) - 1:
            raise InsufficientPrecision(N, len(coeffs) - 1)
        return Series(coeffs[: N + 1], N)

    def to_json(self) -> dict[str, Any]:
        if self.gamma is not None:
            return {"kind": self.kind, **self.gamma.to_json()}
        if self.kind == "rational":
            return {
                "kind": self.kind,
                "p": [str(self.p.coefficient(e)) for e in range(self.p.max_degree + 1)],
                "q": [str(self.q.coefficient(e)) for e in range(self.q.max_degree + 1)],
            }
        payload: dict[str, Any] = {"kind": self.kind, "g": [str(c) for c in self.g_prefix]}
        if self.f_prefix:
            payload["f"] = [str(c) for c in self.f_prefix]
        if self.exact:
            payload["exact"] = True
        return payload


def _detect_kind(payload: Mapping[str, Any]) -> str:
    kind = payload.get("kind")
    if kind is not None:
        if kind not in KINDS:
            raise UsageError(f"unknown spec kind {kind!r}; expected one of {', '.join(KINDS)}")
        return kind
    if "gamma" in payload:
        return f"gamma-{payload.get('flavor', 'ogf')}"
    if "p" in payload or "q" in payload:
        return "rational"
    if "g" in payload:
        return "explicit"
    raise UsageError("spec must contain 'gamma', 'p'/'q' or 'g'")


def parse_spec(source: str | Mapping[str, Any], name: str | None = None) -> ProblemSpec:
    """Build a :class:`ProblemSpec` from inline JSON text or a decoded object."""
    if isinstance(source, str):
        try:
            payload = json.loads(source)
        except json.JSONDecodeError as exc:
            raise UsageError(f"spec is not valid JSON: {exc.msg}") from exc
    else:
        payload = source
    if not isinstance(payload, Mapping):
        raise UsageError("spec must be a JSON object")
    kind = _detect_kind(payload)
    if kind.startswith("gamma"):
        flavor = kind.split("-", 1)[1]
        if flavor not in {f.value for f in GammaFlavor}:
            raise UsageError(f"unknown gamma flavor {flavor!r}")
        try:
            gamma = GammaSpec.from_json({**payload, "flavor": flavor})
        except (TypeError, ZeroDivisionError) as exc:
            raise UsageError(f"bad gamma coefficients: {exc}") from exc
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return ProblemSpec(f"gamma-{flavor}", gamma=gamma, name=name)
    if kind == "rational":
        p = LaurentPoly.from_coeffs(_coefficient_list(payload.get("p", ["1"]), "p"))
        q = LaurentPoly.from_coeffs(_coefficient_list(payload.get("q", ["1"]), "q"))
        return ProblemSpec("rational", p=p, q=q, name=name)
    g = _coefficient_list(payload.get("g"), "g")
    f = _coefficient_list(payload["f"], "f") if "f" in payload else ()
    return ProblemSpec("explicit", g_prefix=g, f_prefix=f, exact=bool(payload.get("exact", False)), name=name)


def load_spec_file(path: str | Path) -> ProblemSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read spec file {path}: {exc.strerror}") from exc
    return parse_spec(text)


def check_precision(N: int) -> int:
    limit = int(config_manager.get("precision", "max", 512))
    if N < 0 or N > limit:
        raise UsageError(f"precision must be between 0 and {limit}, got {N}")
    return N


def resolve_spec(name: str | None = None, spec: str | None = None, spec_file: str | None = None) -> ProblemSpec:
    """Exactly one of ``name``, ``spec`` or ``spec_file`` selects the problem."""
    given = [value for value in (name, spec, spec_file) if value]
    if len(given) != 1:
        raise UsageError("give exactly one of --name, --spec or --spec-file")
    if name:
        from pseudoinv.services.registry import lookup

        return lookup(name).spec
    if spec:
        return parse_spec(spec)
    return load_spec_file(spec_file)
