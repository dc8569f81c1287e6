"""Exact computer-algebra kernel: series, Chebyshev families, Riordan arrays."""
