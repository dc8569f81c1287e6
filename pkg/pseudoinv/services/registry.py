"""Named worked examples with expected coefficient prefixes.

Every prefix carries a provenance note: ``[FORMULA]`` for a published closed
form, ``[DERIVED]`` for values computed from the defining equation.
OEIS identifiers are documentation anchors only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from pseudoinv.services.specs import ProblemSpec, UsageError, parse_spec

QUANTITIES = ("g", "f", "B", "beta")


@dataclass(frozen=True)
class ExpectedPrefix:
    values: tuple[Fraction, ...]
    provenance: str

    def __post_init__(self) -> None:
        if not self.provenance.startswith(("[FORMULA]", "[DERIVED]")):
            raise ValueError(f"provenance must be tagged [FORMULA] or [DERIVED]: {self.provenance!r}")


@dataclass(frozen=True)
class ExampleRegistryEntry:
    name: str
    spec: ProblemSpec
    expected: Mapping[str, ExpectedPrefix] = field(default_factory=dict)
    anchor: str = ""

    @property
    def kind(self) -> str:
        return self.spec.kind

    @property
    def parameters(self) -> dict[str, object]:
        return self.spec.to_json()

    def to_json(self) -> dict[str, object]:
        return {
            "name": self.name,
            "kind": self.kind,
            "parameters": self.parameters,
            "anchor": self.anchor,
            "expected": {
                quantity: {"values": [str(v) for v in prefix.values], "provenance": prefix.provenance}
                for quantity, prefix in self.expected.items()
            },
        }


def _entry(name: str, spec: dict, anchor: str, **expected: tuple[list, str]) -> ExampleRegistryEntry:
    unknown = set(expected) - set(QUANTITIES)
    if unknown:
        raise ValueError(f"unknown quantities {sorted(unknown)} for {name}")
    prefixes = {
        quantity: ExpectedPrefix(tuple(Fraction(v) for v in values), provenance)
        for quantity, (values, provenance) in expected.items()
    }
    return ExampleRegistryEntry(name, parse_spec(spec, name=name), prefixes, anchor)


_ENTRIES = (
    _entry(
        "pascal",
        {"p": ["1"], "q": ["1", "-1"]},
        "Pascal triangle A007318",
        g=([1, 1, 1, 1, 1, 1], "[DERIVED] recip(1-z)"),
        f=([0, 1, 1, 1, 1, 1], "[DERIVED] z/(1-z)"),
        B=([1, 0, 0, 0], "[FORMULA] f = z/(1-z) has B = 1"),
    ),
    _entry(
        "catalan-doubled",
        {"kind": "gamma-ogf", "gamma": {"0": "1/2", "1": "1", "2": "1/2"}},
        "doubled Catalan 2C-1, A000108",
        g=([1, 2, 4, 10, 28, 84], "[DERIVED] 2C-1 from C = 1 + zC^2"),
        f=([0, 1, 2, 4, 10, 28], "[FORMULA] palindrome of darga 2 gives f = zg"),
        B=([2, 2, 4, 10, 28, 84], "[FORMULA] B = 2C"),
    ),
    _entry(
        "catalan",
        {"kind": "gamma-ogf", "gamma": {"2": "1"}},
        "Catalan numbers A000108",
        g=([1, 1, 2, 5, 14, 42], "[DERIVED] g = 1 + z g^2"),
        f=([0, 1, 3, 9, 28, 90], "[FORMULA] palindrome of darga 4 gives f = z g^3"),
    ),
    _entry(
        "fibonacci",
        {"p": ["1"], "q": ["1", "-1", "-1"]},
        "Fibonacci numbers A000045",
        g=([1, 1, 2, 3, 5, 8, 13], "[DERIVED] recip(1-z-z^2)"),
        f=([0, 1, 3, 9, 32, 126], "[DERIVED] companion_of solve of g g(-f) = 1"),
        B=([3, 5, 25, 150, 1000], "[DERIVED] expansion of (1+z-sqrt(1-10z+5z^2))/(2z)"),
    ),
    _entry(
        "fractional-linear",
        {"p": ["1", "1"], "q": ["1", "-2"]},
        "fractional-linear g with Pascal companion",
        g=([1, 3, 6, 12, 24], "[DERIVED] (1+z)/(1-2z)"),
        f=([0, 1, 1, 1, 1], "[DERIVED] g(-z/(1-z)) = (1-2z)/(1+z)"),
        B=([1, 0, 0], "[DERIVED] linear case root x = (b-a)z"),
    ),
    _entry(
        "schroeder-little",
        {"kind": "gamma-ogf", "gamma": {"1": "-1", "2": "2"}},
        "little Schroeder numbers A001003",
        g=([1, 1, 3, 11, 45, 197], "[DERIVED] solve_g from gamma = -z + 2z^2"),
        f=([0, 1, 5, 25, 127], "[DERIVED] z gamma(g) / (g gamma(1/g))"),
        B=([5, 2, -4, 8, -16, 32], "[FORMULA] b_0 = 5 and b_n = (-1)^(n-1) 2^n"),
    ),
    _entry(
        "schroeder-large",
        {"kind": "gamma-ogf", "gamma": {"1": "1", "2": "1"}},
        "large Schroeder numbers A006318",
        g=([1, 2, 6, 22, 90, 394], "[DERIVED] solve_g from gamma = z + z^2"),
    ),
    _entry(
        "motzkin-ext-doubled",
        {"kind": "gamma-ogf", "gamma": {"0": "3/2", "2": "1/2"}},
        "extended doubled Motzkin, A001006",
        g=([1, 2, 2, 4, 8, 18], "[DERIVED] solve_g from gamma = (3+z^2)/2"),
        B=([0, 2, 6, 24, 108], "[FORMULA] (1-3z-sqrt(1-6z-3z^2))/(3z)"),
    ),
    _entry(
        "labeled-trees",
        {"kind": "gamma-egf", "gamma": {"1": "1"}},
        "labeled rooted trees A000169",
        g=(["1", "1", "3/2", "8/3", "125/24"], "[DERIVED] T = exp(zT)"),
        f=(["0", "1", "2", "4", "25/3"], "[FORMULA] f = z T^2"),
        B=(["2", "1/3", "1/60", "1/2520"], "[FORMULA] B = 2 sinh(sqrt z)/sqrt z"),
        beta=([2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2], "[FORMULA] beta_n = 2"),
    ),
    _entry(
        "labeled-trees-2colored",
        {"kind": "gamma-egf", "gamma": {"0": "1", "1": "1"}},
        "labeled trees with 2-colored leaves",
        g=(["1", "2", "4", "28/3"], "[DERIVED] S = exp(z(1+S))"),
        f=(["0", "1", "2", "4", "28/3"], "[FORMULA] f = zS"),
        B=(["2", "4/3"], "[DERIVED] b_from_f(zS)"),
        beta=([2, 8], "[DERIVED] (2n+1)! b_n"),
    ),
)

REGISTRY: dict[str, ExampleRegistryEntry] = {entry.name: entry for entry in _ENTRIES}


def names() -> list[str]:
    return sorted(REGISTRY)


def lookup(name: str) -> ExampleRegistryEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UsageError(f"unknown example {name!r}; known: {', '.join(names())}") from None
