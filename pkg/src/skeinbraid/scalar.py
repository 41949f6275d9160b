"""Exact scalars of the skein computations.

Coefficients live in R = Q(q, z)[w] / (w**2 - lambda), lambda = (z + 1 - q) / (q z).
The base field is sympy's sparse rational function field, which keeps every
fraction reduced with a sign-normalised denominator, so structural equality
of two scalars is semantic equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Union

from sympy import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

RatFunc = FracElement

FIELD, Q, Z = field("q,z", QQ, grlex)
_RENDER_RING, _RQ, _RZ, _RW = ring("q,z,w", QQ, grlex)

LAMBDA: RatFunc = (Z + 1 - Q) / (Q * Z)

ScalarLike = Union["Scalar", RatFunc, int, Fraction]


def as_ratfunc(value: RatFunc | int | Fraction) -> RatFunc:
    """Coerce an int, Fraction or field element into the base field."""
    if isinstance(value, FracElement):
        if value.denom.LC < 0:
            # raw powers skip sign normalisation of the denominator
            return value.new(value.numer, value.denom)
        return value
    if isinstance(value, Fraction):
        return FIELD(value.numerator) / value.denominator
    if isinstance(value, int):
        return FIELD(value)
    raise TypeError(f"Cannot convert {type(value).__name__} to a rational function")


class Scalar:
    """The value ``a + b*w`` with ``w**2 = lambda``; immutable."""

    __slots__ = ("_a", "_b")

    _a: RatFunc
    _b: RatFunc

    def __init__(self, a: RatFunc | int | Fraction = 0, b: RatFunc | int | Fraction = 0):
        object.__setattr__(self, "_a", as_ratfunc(a))
        object.__setattr__(self, "_b", as_ratfunc(b))

    @classmethod
    def coerce(cls, value: ScalarLike) -> Scalar:
        if isinstance(value, Scalar):
            return value
        return cls(value)

    @property
    def a(self) -> RatFunc:
        return self._a

    @property
    def b(self) -> RatFunc:
        return self._b

    @property
    def has_w(self) -> bool:
        return bool(self._b)

    def is_zero(self) -> bool:
        return not self._a and not self._b

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"{type(self).__name__} is immutable")

    # --- field operations ---

    def __add__(self, other: ScalarLike) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self._a, -self._b)

    def __sub__(self, other: ScalarLike) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self._a - o._a, self._b - o._b)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> Scalar:
        if isinstance(other, Scalar):
            a, b, c, d = self._a, self._b, other._a, other._b
            return Scalar(a * c + b * d * LAMBDA, a * d + b * c)
        try:
            f = as_ratfunc(other)
        except TypeError:
            return NotImplemented
        return Scalar(self._a * f, self._b * f)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("Scalar division by zero")
        norm = self._a**2 - self._b**2 * LAMBDA
        return Scalar(self._a / norm, -self._b / norm)

    def __truediv__(self, other: ScalarLike) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> Scalar:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (FracElement, int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    # --- rendering ---

    def as_fraction(self) -> tuple[PolyElement, PolyElement]:
        """Numerator and denominator over Q[q, z, w], reduced."""
        a, b = self._a, self._b
        num = _lift(a.numer) * _lift(b.denom) + _lift(b.numer) * _lift(a.denom) * _RW
        den = _lift(a.denom) * _lift(b.denom)
        return num.cancel(den)

    def render(self) -> str:
        num, den = self.as_fraction()
        if den == 1:
            return str(num)
        return f"({num})/({den})"

    def to_json(self) -> dict[str, Any]:
        num, den = self.as_fraction()
        return {"num": str(num), "den": str(den), "has_w": self.has_w}

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Scalar({self.render()})"


def _lift(poly: PolyElement) -> PolyElement:
    return _RENDER_RING.from_dict({(i, j, 0): c for (i, j), c in poly.items()})


ZERO = Scalar(0)
ONE = Scalar(1)
W = Scalar(0, 1)


def add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def neg(x: Scalar) -> Scalar:
    return -x


def inv(x: Scalar) -> Scalar:
    return x.inverse()


def eq(x: Scalar, y: Scalar) -> bool:
    return x == y


def delta() -> Scalar:
    """Delta = -(1 - lambda q) / (w (1 - q)), kept in a + b w form."""
    return Scalar(0, -(1 - LAMBDA * Q) / ((1 - Q) * LAMBDA))


def sqrt_lambda_pow(e: int) -> Scalar:
    """w**e reduced to a + b w; negative exponents are allowed."""
    half, odd = divmod(e, 2)
    power = LAMBDA**half if half >= 0 else 1 / LAMBDA ** (-half)
    if odd:
        return Scalar(0, power)
    return Scalar(power)
