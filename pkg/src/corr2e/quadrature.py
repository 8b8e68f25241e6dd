"""Adaptive integration on the half line.

The half line is compactified through x = u / (1 - u), after which a global
adaptive scheme with a nested 15-point Gauss rule (whole interval vs. its two
halves) bisects the subinterval carrying the largest error estimate until the
summed estimate meets the tolerance.  Integrands are only ever evaluated at
interior nodes, so endpoint values (x = 0 or the point at infinity) never
need to be defined.

Integrands must be vectorized: they receive a numpy array of abscissae and
return an array of values.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .errors import AccuracyError

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(15)
_SEED_INTERVALS = 8


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 4000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_subdivisions < 1:
            raise ValueError(f"max_subdivisions must be >= 1, got {self.max_subdivisions}")

    @staticmethod
    def transform(u: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Map u in [0, 1) to x in [0, inf) and return (x, jacobian)."""
        w = 1.0 - u
        return u / w, 1.0 / w**2


DEFAULT_SPEC = QuadratureSpec()


def integrate_semi_infinite(
    f: Callable[[np.ndarray], np.ndarray],
    spec: QuadratureSpec | None = None,
) -> Tuple[float, float]:
    """Integrate ``f`` over (0, inf); returns (value, error_estimate).

    Raises :class:`AccuracyError` (carrying the best estimate) if the
    tolerance is not met within ``spec.max_subdivisions`` bisections.
    """
    spec = spec or DEFAULT_SPEC

    def compactified(u: np.ndarray) -> np.ndarray:
        x, jac = spec.transform(u)
        return np.asarray(f(x), dtype=float) * jac

    def rule(a: float, b: float) -> float:
        half = 0.5 * (b - a)
        u = a + half * (1.0 + _NODES)
        return half * float(_WEIGHTS @ compactified(u))

    counter = 0
    heap = []

    def push(a: float, b: float, coarse: float):
        nonlocal counter
        mid = 0.5 * (a + b)
        left = rule(a, mid)
        right = rule(mid, b)
        fine = left + right
        err = abs(fine - coarse)
        heapq.heappush(heap, (-err, counter, a, mid, b, left, right, fine))
        counter += 1
        return fine, err

    total = 0.0
    total_err = 0.0
    edges = np.linspace(0.0, 1.0, _SEED_INTERVALS + 1)
    for a, b in zip(edges[:-1], edges[1:]):
        fine, err = push(a, b, rule(a, b))
        total += fine
        total_err += err

    splits = 0
    while total_err > max(spec.rel_tol * abs(total), spec.abs_tol):
        if splits >= spec.max_subdivisions:
            raise AccuracyError(
                f"no convergence after {splits} subdivisions "
                f"(estimate {total:.6e}, error {total_err:.2e})",
                value=total,
                error_estimate=total_err,
            )
        neg_err, _, a, mid, b, left, right, fine = heapq.heappop(heap)
        total -= fine
        total_err += neg_err  # neg_err = -err
        for lo, hi, coarse in ((a, mid, left), (mid, b, right)):
            fine_child, err_child = push(lo, hi, coarse)
            total += fine_child
            total_err += err_child
        splits += 1

    return total, total_err
