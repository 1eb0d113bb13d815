"""Exact arithmetic over Z, Q and Z/n.

A :class:`Ring` knows how to canonicalize raw Python values (``int`` for Z
and Z/n, :class:`fractions.Fraction` for Q).  Matrix code works on those raw
values directly and calls :meth:`Ring.canon` once per computed entry;
:class:`RingElement` is the checked, user-facing wrapper.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import NotAUnit, RingMismatch, UnsupportedRing

INTEGERS = "Z"
RATIONALS = "Q"
MODN = "mod"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Ring:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == MODN:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise UnsupportedRing(f"modulus must be an integer >= 2, got {self.modulus!r}")
        elif self.kind in (INTEGERS, RATIONALS):
            if self.modulus is not None:
                raise UnsupportedRing(f"{self.kind} takes no modulus")
        else:
            raise UnsupportedRing(f"unknown ring kind {self.kind!r}")

    def __str__(self):
        return f"Z/{self.modulus}" if self.kind == MODN else self.kind

    @property
    def is_field(self) -> bool:
        return self.kind == RATIONALS or (self.kind == MODN and _is_prime(self.modulus))

    def canon(self, x):
        """Canonical representative of ``x`` (an int, Fraction or RingElement)."""
        if isinstance(x, RingElement):
            if x.ring != self:
                raise RingMismatch(f"element of {x.ring} used in {self}")
            return x.value
        if isinstance(x, float):
            raise TypeError("floating-point values are not exact ring elements")
        if self.kind == INTEGERS:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                return x.numerator
            return int(x)
        if self.kind == RATIONALS:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                # a/b with b invertible mod n
                return (x.numerator * pow(x.denominator, -1, self.modulus)) % self.modulus
            x = x.numerator
        return int(x) % self.modulus

    def __call__(self, x) -> RingElement:
        return RingElement(self, self.canon(x))

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    # raw-value arithmetic; inputs are assumed canonical
    def add(self, a, b):
        return self.canon(a + b)

    def sub(self, a, b):
        return self.canon(a - b)

    def neg(self, a):
        return self.canon(-a)

    def mul(self, a, b):
        return self.canon(a * b)

    def is_unit(self, a) -> bool:
        if self.kind == INTEGERS:
            return a in (1, -1)
        if self.kind == RATIONALS:
            return a != 0
        return gcd(a, self.modulus) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{a} is not a unit in {self}")
        if self.kind == INTEGERS:
            return a
        if self.kind == RATIONALS:
            return 1 / a
        return pow(a, -1, self.modulus)

    def lift(self, a) -> int:
        """Integer representative (only for Z and Z/n)."""
        if self.kind == RATIONALS:
            raise UnsupportedRing("rationals have no integer lift")
        return a


ZZ = Ring(INTEGERS)
QQ = Ring(RATIONALS)


def Zmod(n: int) -> Ring:
    return Ring(MODN, n)


@dataclass(frozen=True)
class RingElement:
    ring: Ring
    value: object

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.ring.canon(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElement(self.ring, self.ring.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def inverse(self) -> RingElement:
        return RingElement(self.ring, self.ring.inv(self.value))

    def __str__(self):
        return str(self.value)


def add(a: RingElement, b: RingElement) -> RingElement:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    return a + b


def mul(a: RingElement, b: RingElement) -> RingElement:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    return a * b


def is_unit(a: RingElement) -> bool:
    return a.is_unit()


def inverse_of_unit(a: RingElement) -> RingElement:
    return a.inverse()
