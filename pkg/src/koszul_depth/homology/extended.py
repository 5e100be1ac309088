"""Integers extended by +inf and -inf."""

from __future__ import annotations

from functools import total_ordering


@total_ordering
class ExtendedInt:
    """An integer, ``+inf`` or ``-inf``.

    Sums of opposite infinities are undefined and raise ``ValueError``.
    Compares and hashes equal to plain ints when finite.
    """

    __slots__ = ("value", "inf")

    def __init__(self, value=0, inf: int = 0):
        if isinstance(value, ExtendedInt):
            self.value, self.inf = value.value, value.inf
            return
        self.inf = inf
        self.value = 0 if inf else int(value)

    @classmethod
    def coerce(cls, x) -> "ExtendedInt":
        if isinstance(x, ExtendedInt):
            return x
        if isinstance(x, str):
            s = x.strip().lower()
            if s in ("+inf", "inf", "+infinity", "infinity"):
                return POS_INF
            if s in ("-inf", "-infinity"):
                return NEG_INF
            return cls(int(s))
        if isinstance(x, float):
            if x == float("inf"):
                return POS_INF
            if x == float("-inf"):
                return NEG_INF
            if x != int(x):
                raise ValueError(f"{x} is not integral")
        return cls(int(x))

    @property
    def is_finite(self) -> bool:
        return self.inf == 0

    def __int__(self):
        if self.inf:
            raise OverflowError("infinite value has no integer form")
        return self.value

    def _key(self):
        return (self.inf, self.value)

    def __eq__(self, other):
        try:
            o = ExtendedInt.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._key() == o._key()

    def __lt__(self, other):
        o = ExtendedInt.coerce(other)
        return self._key() < o._key()

    def __hash__(self):
        if self.inf == 0:
            return hash(self.value)
        return hash(("inf", self.inf))

    def __neg__(self):
        return ExtendedInt(-self.value, -self.inf)

    def __add__(self, other):
        o = ExtendedInt.coerce(other)
        if self.inf and o.inf and self.inf != o.inf:
            raise ValueError("+inf + -inf is undefined")
        if self.inf:
            return self
        if o.inf:
            return o
        return ExtendedInt(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-ExtendedInt.coerce(other))

    def __rsub__(self, other):
        return ExtendedInt.coerce(other) + (-self)

    def to_json(self):
        if self.inf > 0:
            return "+inf"
        if self.inf < 0:
            return "-inf"
        return self.value

    def __str__(self):
        return str(self.to_json())

    def __repr__(self):
        return f"ExtendedInt({self})"


POS_INF = ExtendedInt(inf=1)
NEG_INF = ExtendedInt(inf=-1)


def ext(x) -> ExtendedInt:
    return ExtendedInt.coerce(x)


def ext_max(values) -> ExtendedInt:
    """``sup`` of a collection with ``sup of nothing = -inf``."""
    out = NEG_INF
    for v in values:
        v = ext(v)
        if v > out:
            out = v
    return out


def ext_min(values) -> ExtendedInt:
    """``inf`` of a collection with ``inf of nothing = +inf``."""
    out = POS_INF
    for v in values:
        v = ext(v)
        if v < out:
            out = v
    return out
