"""Exact dyadic rationals ``numerator / 2**exponent``."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering

_FRACTION_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


@total_ordering
class Dyadic:
    """Immutable dyadic rational kept in reduced form.

    The numerator is odd unless the exponent is zero, so every value has
    exactly one representation and ``==``/``hash`` are structural.
    """

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        if exponent < 0:
            numerator <<= -exponent
            exponent = 0
        while exponent and not numerator & 1:
            numerator >>= 1
            exponent -= 1
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @classmethod
    def coerce(cls, x) -> "Dyadic":
        if isinstance(x, Dyadic):
            return x
        if isinstance(x, int):
            return cls(x)
        if isinstance(x, Fraction):
            return cls.from_fraction(x)
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Dyadic")

    @classmethod
    def from_fraction(cls, f: Fraction) -> "Dyadic":
        den = f.denominator
        if den & (den - 1):
            raise ValueError(f"{f} is not a dyadic rational")
        return cls(f.numerator, den.bit_length() - 1)

    @classmethod
    def parse(cls, s: str) -> "Dyadic":
        m = _FRACTION_RE.match(s)
        if not m:
            raise ValueError(f"malformed dyadic {s!r}")
        num = int(m.group(1))
        den = int(m.group(2) or 1)
        if den == 0:
            raise ValueError(f"zero denominator in {s!r}")
        return cls.from_fraction(Fraction(num, den))

    @property
    def denominator(self) -> int:
        return 1 << self.exponent

    def is_integer(self) -> bool:
        return self.exponent == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def _aligned(self, other: "Dyadic") -> tuple[int, int, int]:
        e = max(self.exponent, other.exponent)
        return (self.numerator << (e - self.exponent),
                other.numerator << (e - other.exponent), e)

    def __add__(self, other):
        other = _as_dyadic(other)
        if other is NotImplemented:
            return other
        a, b, e = self._aligned(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_dyadic(other)
        if other is NotImplemented:
            return other
        a, b, e = self._aligned(other)
        return Dyadic(a - b, e)

    def __rsub__(self, other):
        other = _as_dyadic(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Dyadic(-self.numerator, self.exponent)

    def __abs__(self):
        return Dyadic(abs(self.numerator), self.exponent)

    def __mul__(self, other):
        other = _as_dyadic(other)
        if other is NotImplemented:
            return other
        return Dyadic(self.numerator * other.numerator,
                      self.exponent + other.exponent)

    __rmul__ = __mul__

    def half(self) -> "Dyadic":
        return Dyadic(self.numerator, self.exponent + 1)

    def div_small(self, k: int) -> "Dyadic":
        """Divide by ``k`` in {1, 2, 4, ...} (and signs thereof)."""
        if k < 0:
            return (-self).div_small(-k)
        if k <= 0 or k & (k - 1):
            raise ValueError(f"division by {k} leaves the dyadics")
        return Dyadic(self.numerator, self.exponent + k.bit_length() - 1)

    def average(self, other: "Dyadic") -> "Dyadic":
        return (self + other).half()

    def __eq__(self, other):
        other = _as_dyadic(other)
        if other is NotImplemented:
            return other
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __lt__(self, other):
        other = _as_dyadic(other)
        if other is NotImplemented:
            return other
        a, b, _ = self._aligned(other)
        return a < b

    def __hash__(self):
        # agree with int and Fraction hashing since == accepts ints
        if not self.exponent:
            return hash(self.numerator)
        return hash(Fraction(self.numerator, 1 << self.exponent))

    def __float__(self):
        return self.numerator / self.denominator

    def __int__(self):
        if self.exponent:
            raise ValueError(f"{self} is not an integer")
        return self.numerator

    def floor(self) -> int:
        return self.numerator >> self.exponent

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self):
        return f"Dyadic({self})"


def _as_dyadic(x):
    if isinstance(x, Dyadic):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Dyadic(x)
    return NotImplemented


ZERO = Dyadic(0)
ONE = Dyadic(1)
MINUS_ONE = Dyadic(-1)
