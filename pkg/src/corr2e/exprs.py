"""Exact expression trees for term coefficients.

Coefficients of the radial term algebra are small closed-form expressions in
the wave-function parameters (Z, a, b): rational constants combined by
addition, multiplication, negation and division.  Keeping them as trees (and
rational constants as :class:`fractions.Fraction`) makes differentiation with
respect to a parameter exact -- the derivative of a tree is another tree, so
repeated parameter derivatives never accumulate floating-point noise.

Constants that are not rational (the odd factor of pi) are carried as floats;
their derivative is exactly zero, so exactness of differentiation is
unaffected.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .errors import DegenerateParameterError

#: denominators smaller than this (in bound value) are treated as degenerate
DENOMINATOR_TOL = 1e-8

Scalar = Union[int, float, Fraction]

PARAMS = ("Z", "a", "b")


def as_expr(value) -> "Expr":
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, Fraction)):
        return Const(Fraction(value))
    if isinstance(value, float):
        return Const(value)
    raise TypeError(f"cannot build an expression from {value!r}")


class Expr:
    """Base node. Subclasses are immutable."""

    __slots__ = ()

    def diff(self, param: str) -> "Expr":
        raise NotImplementedError

    def value(self, env: Mapping[str, float]) -> float:
        raise NotImplementedError

    def __add__(self, other):
        return add(self, as_expr(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, neg(as_expr(other)))

    def __rsub__(self, other):
        return add(as_expr(other), neg(self))

    def __mul__(self, other):
        return mul(self, as_expr(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, as_expr(other))

    def __rtruediv__(self, other):
        return div(as_expr(other), self)

    def __neg__(self):
        return neg(self)

    def is_zero(self) -> bool:
        """Structural zero test (sufficient, not complete)."""
        return isinstance(self, Const) and self.val == 0


class Const(Expr):
    __slots__ = ("val",)

    def __init__(self, val: Scalar):
        self.val = Fraction(val) if isinstance(val, int) else val

    def diff(self, param):
        return Const(Fraction(0))

    def value(self, env):
        return float(self.val)

    def __repr__(self):
        return str(self.val)


class Sym(Expr):
    __slots__ = ("name",)

    def __init__(self, name: str):
        if name not in PARAMS:
            raise ValueError(f"unknown symbol {name!r}; expected one of {PARAMS}")
        self.name = name

    def diff(self, param):
        return Const(Fraction(1 if param == self.name else 0))

    def value(self, env):
        return float(env[self.name])

    def __repr__(self):
        return self.name


class Add(Expr):
    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: Expr, rhs: Expr):
        self.lhs, self.rhs = lhs, rhs

    def diff(self, param):
        return add(self.lhs.diff(param), self.rhs.diff(param))

    def value(self, env):
        return self.lhs.value(env) + self.rhs.value(env)

    def __repr__(self):
        return f"({self.lhs} + {self.rhs})"


class Mul(Expr):
    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: Expr, rhs: Expr):
        self.lhs, self.rhs = lhs, rhs

    def diff(self, param):
        return add(mul(self.lhs.diff(param), self.rhs), mul(self.lhs, self.rhs.diff(param)))

    def value(self, env):
        return self.lhs.value(env) * self.rhs.value(env)

    def __repr__(self):
        return f"({self.lhs} * {self.rhs})"


class Neg(Expr):
    __slots__ = ("arg",)

    def __init__(self, arg: Expr):
        self.arg = arg

    def diff(self, param):
        return neg(self.arg.diff(param))

    def value(self, env):
        return -self.arg.value(env)

    def __repr__(self):
        return f"-({self.arg})"


class Div(Expr):
    __slots__ = ("num", "den")

    def __init__(self, num: Expr, den: Expr):
        self.num, self.den = num, den

    def diff(self, param):
        # (u/v)' = (u'v - uv') / v^2
        u, v = self.num, self.den
        return div(add(mul(u.diff(param), v), neg(mul(u, v.diff(param)))), mul(v, v))

    def value(self, env):
        d = self.den.value(env)
        if abs(d) < DENOMINATOR_TOL:
            raise DegenerateParameterError(
                f"denominator {self.den!r} evaluates to {d:.3e}; parameters are degenerate"
            )
        return self.num.value(env) / d

    def __repr__(self):
        return f"({self.num} / {self.den})"


# -- smart constructors: fold constants so trivial cancellations stay exact --

def add(lhs: Expr, rhs: Expr) -> Expr:
    if isinstance(lhs, Const) and isinstance(rhs, Const):
        return Const(lhs.val + rhs.val)
    if lhs.is_zero():
        return rhs
    if rhs.is_zero():
        return lhs
    return Add(lhs, rhs)


def mul(lhs: Expr, rhs: Expr) -> Expr:
    if isinstance(lhs, Const) and isinstance(rhs, Const):
        return Const(lhs.val * rhs.val)
    if lhs.is_zero() or rhs.is_zero():
        return Const(Fraction(0))
    if isinstance(lhs, Const) and lhs.val == 1:
        return rhs
    if isinstance(rhs, Const) and rhs.val == 1:
        return lhs
    return Mul(lhs, rhs)


def neg(arg: Expr) -> Expr:
    if isinstance(arg, Const):
        return Const(-arg.val)
    if isinstance(arg, Neg):
        return arg.arg
    return Neg(arg)


def div(num: Expr, den: Expr) -> Expr:
    if num.is_zero():
        return Const(Fraction(0))
    if isinstance(den, Const) and den.val == 1:
        return num
    if isinstance(num, Const) and isinstance(den, Const) and isinstance(num.val, Fraction) \
            and isinstance(den.val, Fraction) and den.val != 0:
        return Const(num.val / den.val)
    return Div(num, den)


Z = Sym("Z")
A = Sym("a")
B = Sym("b")
ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))
HALF = Const(Fraction(1, 2))
