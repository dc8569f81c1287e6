"""Report builders shared by the CLI and the HTTP API."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Sequence

from pseudoinv.config.manager import config_manager
from pseudoinv.core.chebfam import FAMILIES, family_triangle
from pseudoinv.core.errors import PseudoInvError
from pseudoinv.core.riordan import Flavor, RiordanArray, entries, is_pseudo_involution
from pseudoinv.services import bfun
from pseudoinv.services.specs import ProblemSpec, UsageError

FORMATS = ("json", "csv")


def _strings(values: Sequence[object]) -> list[str]:
    return [str(v) for v in values]


def _error(exc: Exception) -> dict[str, str]:
    return {"code": type(exc).__name__, "message": str(exc)}


def _header(spec: ProblemSpec, N: int) -> dict[str, Any]:
    return {"name": spec.name, "spec": spec.to_json(), "N": N}


def series_report(spec: ProblemSpec, N: int) -> dict[str, Any]:
    """``g``, its companion ``f`` and a pseudo-involution certificate.

    A failing companion is reported under ``error`` instead of raised so the
    caller still sees ``g``.
    """
    g = spec.g(N)
    report = {**_header(spec, N), "g": _strings(g.coeffs), "f": None, "certificate": None, "error": None}
    try:
        f = spec.f(N, g)
    except PseudoInvError as exc:
        report["error"] = _error(exc)
        return report
    report["f"] = _strings(f.coeffs)
    if N >= 1:
        report["certificate"] = is_pseudo_involution(RiordanArray(g, f, spec.default_flavor)).to_json()
    return report


def bfun_report(
    spec: ProblemSpec, N: int, methods: str | Sequence[str] | None = None, *, beta: bool = False
) -> dict[str, Any]:
    chosen = bfun.parse_methods(methods, spec)
    result = bfun.cross_validate(spec, N, chosen)
    report = {
        **_header(spec, N),
        "methods": {name: seq.to_json(include_beta=beta) for name, seq in result.sequences.items()},
        "agree": result.agree,
        "first_difference": None,
    }
    if result.disagreement is not None:
        first, second, index = result.disagreement
        report["first_difference"] = {"methods": [first, second], "index": index}
    return report


def matrix_report(
    spec: ProblemSpec | None, N: int, flavor: str | None = None, cheb: str | None = None
) -> dict[str, Any]:
    """Rows ``0..N`` of a Riordan array, or of a polynomial family with ``cheb``."""
    if (spec is None) == (cheb is None):
        raise UsageError("give a spec or a polynomial family, not both")
    if cheb is not None:
        if cheb not in FAMILIES:
            raise UsageError(f"unknown family {cheb!r}; expected one of {', '.join(FAMILIES)}")
        matrix = family_triangle(cheb, N)
        return {"family": cheb, "N": N, "flavor": None, "rows": matrix.to_json()}
    try:
        chosen = Flavor(flavor) if flavor else spec.default_flavor
    except ValueError as exc:
        raise UsageError(f"flavor must be 'ordinary' or 'exponential', got {flavor!r}") from exc
    matrix = entries(spec.riordan(N, chosen), N)
    return {**_header(spec, N), "flavor": chosen.value, "rows": matrix.to_json()}


# ----------------------------------------------------------------------
# rendering


def _csv_rows(report: dict[str, Any]) -> list[list[str]]:
    if "rows" in report:
        return report["rows"]
    if "methods" in report:
        rows = [["method", "n", "b", "beta"]]
        for name, payload in report["methods"].items():
            betas = payload.get("beta") or [""] * len(payload["b"])
            rows.extend([name, str(n), b, beta] for n, (b, beta) in enumerate(zip(payload["b"], betas)))
        return rows
    if "g" in report:
        f = report["f"] or []
        return [["n", "g", "f"]] + [
            [str(n), value, f[n] if n < len(f) else ""] for n, value in enumerate(report["g"])
        ]
    return [[str(key), json.dumps(value)] for key, value in report.items()]


def render(report: dict[str, Any], fmt: str | None = None) -> str:
    fmt = fmt or config_manager.get("output", "format", "json")
    if fmt == "json":
        indent = config_manager.get("output", "indent", 2)
        return json.dumps(report, indent=indent, ensure_ascii=False)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(_csv_rows(report))
        return buffer.getvalue().rstrip("\n")
    raise UsageError(f"format must be one of {', '.join(FORMATS)}, got {fmt!r}")
