"""Exact integer polynomials (arbitrary precision) and small helpers.

Coefficients are stored lowest power first: coeffs[r] multiplies x**r.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _trim(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(int(v) for v in c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with exact (Python) integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        """Horner evaluation; exact for int x, float for float x."""
        acc = 0 if isinstance(x, int) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        if self.degree == 0:
            return IntPolynomial((0,))
        return IntPolynomial(tuple(r * c for r, c in enumerate(self.coeffs) if r > 0))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(tuple(out))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(tuple(k * c for c in self.coeffs))

    def eval_grid(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized float Horner evaluation on a grid."""
        acc = np.zeros_like(np.asarray(xs, dtype=float))
        for c in reversed(self.coeffs):
            acc = acc * xs + float(c)
        return acc


def deflate(coeffs, root: float, dtype=float) -> np.ndarray:
    """Synthetic division by (x - root) in floating point.

    coeffs is lowest power first; returns the quotient's coefficients, also
    lowest power first (the remainder is dropped).  Passing
    dtype=np.longdouble buys extra mantissa bits against the cancellation
    this division is prone to.
    """
    c = np.asarray(coeffs, dtype=dtype)
    if c.size < 2:
        raise ValueError("cannot deflate a constant polynomial")
    out = np.empty(c.size - 1, dtype=dtype)
    acc = c[-1]
    root = dtype(root)
    for r in range(c.size - 2, -1, -1):
        out[r] = acc
        acc = c[r] + acc * root
    return out
