"""Closed-form spherical Fourier transform of bound radial terms.

For a spherically symmetric f(r) the transform with kernel exp(i p.r) reduces
to a sine transform, and for a single term c * r^n * exp(-alpha r) it has the
closed form

    phi(p) = 4 pi c (n+1)! Im[(alpha - i p)^(-(n+2))] / p,        p > 0
    phi(0) = 4 pi c (n+2)! / alpha^(n+3),

valid for every integer n >= -1 and alpha > 0.  The n = -1, 0, 1 cases give
the familiar 4 pi / (alpha^2 + p^2), 8 pi alpha / (alpha^2 + p^2)^2 and
8 pi (3 alpha^2 - p^2) / (alpha^2 + p^2)^3.  Complex arithmetic keeps one
uniform formula instead of per-n expansions.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DivergentIntegralError, UnsupportedShapeError
from .radial_terms import ParameterBinding, RadialFunction


class MomentumFunction:
    """Numeric-term representation of a transformed radial function.

    Holds (c, n, alpha) triples; evaluation is vectorized over momenta p >= 0,
    with the p = 0 value supplied by the analytic limit.
    """

    __slots__ = ("coeffs", "powers", "alphas")

    def __init__(self, coeffs, powers, alphas):
        self.coeffs = np.asarray(coeffs, dtype=float)
        self.powers = np.asarray(powers, dtype=int)
        self.alphas = np.asarray(alphas, dtype=float)

    def at_zero(self) -> float:
        total = 0.0
        for c, n, al in zip(self.coeffs, self.powers, self.alphas):
            total += 4.0 * math.pi * c * math.factorial(n + 2) / al ** (n + 3)
        return total

    def __call__(self, p):
        p = np.asarray(p, dtype=float)
        scalar = p.ndim == 0
        pp = np.atleast_1d(p)
        if np.any(pp < 0):
            raise ValueError("momenta must be non-negative")
        out = np.zeros_like(pp)
        pos = pp > 0
        q = pp[pos]
        acc = np.zeros_like(q)
        for c, n, al in zip(self.coeffs, self.powers, self.alphas):
            fac = 4.0 * math.pi * c * math.factorial(n + 1)
            acc += fac * ((al - 1j * q) ** (-(n + 2))).imag
        out[pos] = acc / q
        if np.any(~pos):
            out[~pos] = self.at_zero()
        return float(out[0]) if scalar else out

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other: "MomentumFunction") -> "MomentumFunction":
        return MomentumFunction(
            np.concatenate([self.coeffs, other.coeffs]),
            np.concatenate([self.powers, other.powers]),
            np.concatenate([self.alphas, other.alphas]),
        )


def transform(f: RadialFunction, binding: ParameterBinding) -> MomentumFunction:
    """Transform term by term; requires n >= -1 and bound alpha > 0 throughout."""
    env = binding.env()
    coeffs, powers, alphas = [], [], []
    for t in f.terms:
        if t.power < -1:
            raise UnsupportedShapeError(
                f"cannot transform a term with power {t.power}; only n >= -1 is supported"
            )
        alpha = t.exponent.value(binding)
        if alpha <= 0:
            raise DivergentIntegralError(
                f"bound exponent {alpha} is not positive; the transform integral diverges"
            )
        coeffs.append(t.coeff.value(env))
        powers.append(t.power)
        alphas.append(alpha)
    return MomentumFunction(coeffs, powers, alphas)
