"""Exception hierarchy for the exact-arithmetic kernel."""

from __future__ import annotations


class PseudoInvError(ArithmeticError):
    """Raised when a mathematical precondition of an operation fails."""


class InsufficientPrecision(PseudoInvError):
    """Raised when a request needs more coefficients than a series carries."""

    def __init__(self, needed: int, available: int) -> None:
        super().__init__(f"need coefficients through index {needed}, only {available} available")
        self.needed = needed
        self.available = available
