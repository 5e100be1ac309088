"""Exact coefficient fields: the rationals and prime fields."""

from __future__ import annotations

from fractions import Fraction

import gmpy2
from gmpy2 import mpq


class RationalField:
    """The field of rational numbers, with elements stored as ``gmpy2.mpq``."""

    characteristic = 0

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __call__(self, value) -> mpq:
        if isinstance(value, Fraction):
            return mpq(value.numerator, value.denominator)
        return mpq(value)

    def from_ratio(self, num: int, den: int) -> mpq:
        if den == 0:
            raise ZeroDivisionError("zero denominator in rational literal")
        return mpq(num, den)

    def is_integer(self, c) -> bool:
        return c.denominator == 1

    def format(self, c) -> str:
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"

    def descriptor(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class _ModP:
    """Residue class modulo a prime; the prime lives on the generated subclass."""

    __slots__ = ("v",)
    p = 2

    def __init__(self, v):
        self.v = v % self.p

    def _coerce(self, other):
        if isinstance(other, _ModP):
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, (Fraction, type(mpq(0)))):
            return int(other.numerator) * pow(int(other.denominator), -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.__class__(self.v + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.__class__(self.v - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.__class__(o - self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.__class__(self.v * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return self.__class__(self.v * pow(o, -1, self.p))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.__class__(o) / self

    def __neg__(self):
        return self.__class__(-self.v)

    def __pow__(self, n):
        return self.__class__(pow(self.v, n, self.p))

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return str(self.v)


class PrimeField:
    """The field with ``p`` elements."""

    def __init__(self, p: int):
        if p < 2 or not gmpy2.is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        self.characteristic = p
        self.p = p
        self.element = type(f"GF{p}", (_ModP,), {"__slots__": (), "p": p})
        self.zero = self.element(0)
        self.one = self.element(1)

    def __call__(self, value):
        if isinstance(value, _ModP):
            return self.element(value.v)
        if isinstance(value, Fraction) or isinstance(value, type(mpq(0))):
            num, den = int(value.numerator), int(value.denominator)
            return self.from_ratio(num, den)
        return self.element(int(value))

    def from_ratio(self, num: int, den: int):
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator divisible by {self.p}")
        return self.element(num * pow(den, -1, self.p))

    def is_integer(self, c) -> bool:
        return True

    def format(self, c) -> str:
        return str(c.v)

    def descriptor(self):
        return {"Fp": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_from_descriptor(desc):
    """Build a field from the JSON descriptor ``"Q"`` or ``{"Fp": p}``."""
    if desc == "Q" or desc == "QQ":
        return QQ
    if isinstance(desc, dict) and set(desc) == {"Fp"}:
        return GF(int(desc["Fp"]))
    raise ValueError(f"unknown field descriptor {desc!r}")
