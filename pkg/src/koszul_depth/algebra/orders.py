"""Monomial orders.

Every supported order is realised as a linear functional on exponent
vectors, ``key(e) = sum(w[i] * e[i])``, with integer weights chosen so that
integer comparison of keys agrees with the order.  Linearity makes the key of
a product the sum of the keys, which the Groebner engine relies on.
"""

from __future__ import annotations

from functools import lru_cache

# Digit base for the mixed-radix encodings.  Exponents stay well below
# DIGIT // 4 so that every digit comparison is decided locally.
DIGIT = 1 << 20
MAX_EXPONENT = 1 << 15

ORDER_KINDS = ("grevlex", "grlex", "lex")


class MonomialOrder:
    """A global monomial order on ``nvars`` variables (variable 0 is largest)."""

    __slots__ = ("kind", "nvars", "weights")

    def __init__(self, kind: str, nvars: int):
        if kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.nvars = nvars
        self.weights = _weights(kind, nvars)

    def key(self, exp) -> int:
        return sum(w * e for w, e in zip(self.weights, exp))

    def compare(self, a, b) -> int:
        """Return -1, 0 or 1 as ``a`` is smaller than, equal to, or larger than ``b``."""
        if len(a) != self.nvars or len(b) != self.nvars:
            raise ValueError("exponent vectors do not match the variable count")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    @property
    def degree_compatible(self) -> bool:
        return self.kind != "lex"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.nvars) == (other.kind, other.nvars)

    def __hash__(self):
        return hash((self.kind, self.nvars))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.nvars})"


@lru_cache(maxsize=None)
def _weights(kind: str, n: int) -> tuple[int, ...]:
    top = DIGIT ** n
    if kind == "lex":
        return tuple(DIGIT ** (n - 1 - i) for i in range(n))
    if kind == "grlex":
        return tuple(top + DIGIT ** (n - 1 - i) for i in range(n))
    # grevlex: total degree first, then the smaller exponent of the last
    # variable wins, then the second to last, and so on.
    return tuple(top - DIGIT ** i for i in range(n))


def cmp_monomials(order: MonomialOrder, a, b) -> int:
    return order.compare(tuple(a), tuple(b))
