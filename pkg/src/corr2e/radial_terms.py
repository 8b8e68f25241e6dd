"""Exact algebra for finite sums of C(Z,a,b) * r^n * exp(-alpha(Z,a,b) * r).

This family of functions is closed under addition, multiplication and
differentiation with respect to the parameters Z and b, and every member has
exact moments on [0, inf) through the Gamma-function formula.  Everything the
reduction pipeline produces -- reduced wave functions, their squares, the
auxiliary functions entering the correlated part -- lives in this algebra.

Coefficients C are exact expression trees (:mod:`corr2e.exprs`); exponents
alpha are integer linear combinations of Z, a and b, so parameter derivatives
of a term are again terms:

    d/dt [C r^n e^{-E r}] = C' r^n e^{-E r} - C (dE/dt) r^{n+1} e^{-E r}
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from . import exprs
from .errors import (
    DivergentIntegralError,
    ParameterError,
    SingularityError,
)

#: relative tolerance for the r -> 0 cancellation of 1/r coefficients
CANCELLATION_TOL = 1e-9

DIFF_PARAMS = ("Z", "b")


@dataclass(frozen=True)
class ParameterBinding:
    """One physical parameter set (Z, a, b, lambda).

    lam is the correlation switch: 1 keeps the interelectronic factor, 0 drops
    it.  The constraint a < Z keeps every exponent produced by the pipeline
    strictly positive.
    """

    Z: float
    a: float = 0.0
    b: float = 0.0
    lam: int = 0

    def __post_init__(self):
        if not self.Z > 0:
            raise ParameterError(f"Z must be positive, got {self.Z}")
        if self.a < 0:
            raise ParameterError(f"a must be non-negative, got {self.a}")
        if self.b < 0:
            raise ParameterError(f"b must be non-negative, got {self.b}")
        if self.lam not in (0, 1):
            raise ParameterError(f"lam must be 0 or 1, got {self.lam}")
        if not self.a < self.Z:
            raise ParameterError(f"a < Z required, got a={self.a}, Z={self.Z}")

    def env(self) -> dict:
        return {"Z": self.Z, "a": self.a, "b": self.b}


@dataclass(frozen=True, order=True)
class LinearExponent:
    """alpha = cZ*Z + ca*a + cb*b with integer coefficients."""

    cZ: int
    ca: int = 0
    cb: int = 0

    def __add__(self, other: "LinearExponent") -> "LinearExponent":
        return LinearExponent(self.cZ + other.cZ, self.ca + other.ca, self.cb + other.cb)

    def value(self, binding: ParameterBinding) -> float:
        return self.cZ * binding.Z + self.ca * binding.a + self.cb * binding.b

    def coefficient(self, param: str) -> int:
        """d(alpha)/d(param) for param in {'Z', 'a', 'b'}."""
        return {"Z": self.cZ, "a": self.ca, "b": self.cb}[param]


LinearExponent.ZERO = LinearExponent(0, 0, 0)


@dataclass(frozen=True)
class RadialTerm:
    coeff: exprs.Expr
    power: int
    exponent: LinearExponent

    def __post_init__(self):
        if self.power < -2:
            raise ValueError(f"powers below -2 never arise; got {self.power}")


CoeffLike = Union[exprs.Expr, int, float]


class RadialFunction:
    """A finite, canonicalized sum of :class:`RadialTerm`.

    Terms sharing (power, exponent) are merged on construction; structurally
    zero coefficients are dropped, so the zero function is the empty sum.
    Instances are immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[RadialTerm] = ()):
        merged: dict = {}
        for t in terms:
            key = (t.power, t.exponent)
            if key in merged:
                merged[key] = exprs.add(merged[key], t.coeff)
            else:
                merged[key] = t.coeff
        canon = [
            RadialTerm(coeff, power, exponent)
            for (power, exponent), coeff in sorted(merged.items())
            if not coeff.is_zero()
        ]
        object.__setattr__(self, "terms", tuple(canon))

    def __setattr__(self, *_):
        raise AttributeError("RadialFunction is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls) -> "RadialFunction":
        return cls(())

    @classmethod
    def term(cls, coeff: CoeffLike, power: int = 0,
             exponent: LinearExponent = LinearExponent.ZERO) -> "RadialFunction":
        return cls((RadialTerm(exprs.as_expr(coeff), power, exponent),))

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other: "RadialFunction") -> "RadialFunction":
        return RadialFunction(self.terms + other.terms)

    def __neg__(self) -> "RadialFunction":
        return RadialFunction(
            RadialTerm(exprs.neg(t.coeff), t.power, t.exponent) for t in self.terms
        )

    def __sub__(self, other: "RadialFunction") -> "RadialFunction":
        return self + (-other)

    def __mul__(self, other: "RadialFunction") -> "RadialFunction":
        out = []
        for s in self.terms:
            for t in other.terms:
                out.append(RadialTerm(exprs.mul(s.coeff, t.coeff),
                                      s.power + t.power,
                                      s.exponent + t.exponent))
        return RadialFunction(out)

    def scaled(self, factor: CoeffLike) -> "RadialFunction":
        f = exprs.as_expr(factor)
        return RadialFunction(
            RadialTerm(exprs.mul(f, t.coeff), t.power, t.exponent) for t in self.terms
        )

    def differentiate(self, param: str) -> "RadialFunction":
        """Exact derivative with respect to 'Z' or 'b'."""
        if param not in DIFF_PARAMS:
            raise ValueError(f"param must be one of {DIFF_PARAMS}, got {param!r}")
        out = []
        for t in self.terms:
            out.append(RadialTerm(t.coeff.diff(param), t.power, t.exponent))
            k = t.exponent.coefficient(param)
            if k != 0:
                out.append(RadialTerm(exprs.neg(exprs.mul(t.coeff, exprs.as_expr(k))),
                                      t.power + 1, t.exponent))
        return RadialFunction(out)

    # -- evaluation --------------------------------------------------------------

    def bind(self, binding: ParameterBinding) -> "BoundRadialFunction":
        return BoundRadialFunction(self, binding)

    def evaluate(self, binding: ParameterBinding, r):
        """Pointwise value at radius r (scalar or array, r > 0)."""
        return self.bind(binding)(r)

    def value_at_zero(self, binding: ParameterBinding) -> float:
        """The finite r -> 0 limit, after the 1/r cancellation."""
        return self.bind(binding).value_at_zero()

    def moment_integral(self, binding: ParameterBinding, extra_power: int) -> float:
        """Exact integral of r^extra_power * f(r) over [0, inf)."""
        return self.bind(binding).moment_integral(extra_power)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __repr__(self):
        if not self.terms:
            return "RadialFunction(0)"
        parts = [f"({t.coeff})*r^{t.power}*exp(-({t.exponent.cZ}Z"
                 f"{t.exponent.ca:+d}a{t.exponent.cb:+d}b)r)" for t in self.terms]
        return "RadialFunction(" + " + ".join(parts) + ")"


class BoundRadialFunction:
    """A RadialFunction with coefficients and exponents evaluated at a binding.

    Evaluation is vectorized over numpy arrays of radii.  Radii must be
    strictly positive unless every power is non-negative; use
    :meth:`value_at_zero` for the r -> 0 limit.
    """

    __slots__ = ("binding", "coeffs", "powers", "alphas")

    def __init__(self, function: RadialFunction, binding: ParameterBinding):
        env = binding.env()
        self.binding = binding
        self.coeffs = np.array([t.coeff.value(env) for t in function.terms], dtype=float)
        self.powers = np.array([t.power for t in function.terms], dtype=int)
        self.alphas = np.array([t.exponent.value(binding) for t in function.terms], dtype=float)

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        scalar = r.ndim == 0
        rr = np.atleast_1d(r)
        out = np.zeros_like(rr)
        with np.errstate(divide="ignore", invalid="ignore"):
            for c, n, al in zip(self.coeffs, self.powers, self.alphas):
                out += c * rr ** n * np.exp(-al * rr)
        return float(out[0]) if scalar else out

    def value_at_zero(self) -> float:
        if np.any(self.powers < -1):
            raise SingularityError("terms with power < -1 have no finite r -> 0 limit")
        pole = self.powers == -1
        pole_sum = float(np.sum(self.coeffs[pole]))
        if np.any(pole):
            scale = float(np.max(np.abs(self.coeffs[pole] * self.alphas[pole])))
            if abs(pole_sum) > CANCELLATION_TOL * max(scale, 1.0):
                raise SingularityError(
                    f"uncancelled 1/r pole: coefficient sum {pole_sum:.3e} "
                    f"exceeds tolerance {CANCELLATION_TOL:.1e} * {max(scale, 1.0):.3e}"
                )
        const = float(np.sum(self.coeffs[self.powers == 0]))
        slope = float(np.sum(self.coeffs[pole] * self.alphas[pole]))
        return const - slope

    def moment_integral(self, extra_power: int) -> float:
        total = 0.0
        for c, n, al in zip(self.coeffs, self.powers, self.alphas):
            m = n + extra_power
            if m < 0:
                raise DivergentIntegralError(
                    f"integral of r^{m} e^(-{al}r) diverges at the origin"
                )
            if al <= 0:
                raise DivergentIntegralError(
                    f"bound exponent {al} is not positive; integral diverges at infinity"
                )
            total += c * math.factorial(m) / al ** (m + 1)
        return total
