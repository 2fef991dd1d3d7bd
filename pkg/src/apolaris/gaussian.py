"""Exact Gaussian rationals a + b*i with a, b in Q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Number = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """Immutable complex number with arbitrary-precision rational parts.

    ``Fraction`` keeps both parts in lowest terms with a positive
    denominator, so equality and hashing are structural.
    """

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def coerce(cls, value: Number) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls._raw(Fraction(value), Fraction(0))
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact; build a GaussianRational explicitly")
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational._raw, (self.re, self.im))

    # arithmetic -------------------------------------------------------------

    def __add__(self, other: Number) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Number) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other: Number) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.im and not o.im:
            return GaussianRational._raw(self.re * o.re, Fraction(0))
        return GaussianRational._raw(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        d = o.abs2()
        if not d:
            raise ZeroDivisionError("division by zero Gaussian rational")
        n = self * o.conjugate()
        return GaussianRational._raw(n.re / d, n.im / d)

    def __rtruediv__(self, other: Number) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __pow__(self, n: int) -> "GaussianRational":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (GaussianRational(1) / self) ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|c|^2 as an exact non-negative rational."""
        return self.re * self.re + self.im * self.im

    # predicates / comparisons ----------------------------------------------

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def sort_key(self) -> tuple:
        return (self.re, self.im)

    # printing ----------------------------------------------------------------

    def __repr__(self) -> str:
        return f"GaussianRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"({self.re} {sign} {_imag_str(abs(self.im))})"


def _imag_str(b: Fraction) -> str:
    if b == 1:
        return "i"
    if b == -1:
        return "-i"
    return f"{b}i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
