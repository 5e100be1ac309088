"""Sparse multivariate polynomials with exact coefficients."""

from __future__ import annotations

from .fields import QQ, RationalField
from .orders import MonomialOrder


class PolynomialRing:
    """``k[x_1, ..., x_v]`` with a fixed monomial order."""

    def __init__(self, field=QQ, variables=("x",), order: str = "grevlex"):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"variable names must be distinct: {variables}")
        self.field = field
        self.variables = variables
        self.nvars = len(variables)
        self.order = MonomialOrder(order, self.nvars)
        self._index = {v: i for i, v in enumerate(variables)}
        self.zero = Poly(self, {})
        self.one = self.constant(1)

    def index(self, name: str) -> int:
        return self._index[name]

    def gen(self, name_or_index) -> "Poly":
        i = name_or_index if isinstance(name_or_index, int) else self._index[name_or_index]
        exp = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Poly(self, {exp: self.field.one})

    def gens(self) -> list["Poly"]:
        return [self.gen(i) for i in range(self.nvars)]

    def constant(self, c) -> "Poly":
        c = self.field(c)
        if not c:
            return self.zero
        return Poly(self, {(0,) * self.nvars: c})

    def monomial(self, exp, coeff=1) -> "Poly":
        c = self.field(coeff)
        if not c:
            return self.zero
        return Poly(self, {tuple(exp): c})

    def from_terms(self, terms) -> "Poly":
        """Build a polynomial from ``(exponent, coefficient)`` pairs, combining repeats."""
        acc: dict = {}
        for exp, c in terms:
            exp = tuple(exp)
            acc[exp] = acc.get(exp, self.field.zero) + self.field(c)
        return Poly(self, {e: c for e, c in acc.items() if c})

    def __call__(self, value) -> "Poly":
        if isinstance(value, Poly):
            if value.ring is not self and value.ring != self:
                raise ValueError("polynomial belongs to a different ring")
            return value
        if isinstance(value, str):
            from .grammar import parse_poly
            return parse_poly(value, self)
        return self.constant(value)

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.field == other.field
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.variables, self.order.kind))

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.variables)}]"


class Poly:
    """An immutable polynomial; ``terms`` lists (exponent, coefficient) pairs in descending order."""

    __slots__ = ("ring", "_d", "_hash", "_terms")

    def __init__(self, ring: PolynomialRing, data: dict):
        # ``data`` must already be free of zero coefficients.
        self.ring = ring
        self._d = data
        self._hash = None
        self._terms = None

    # -- inspection -------------------------------------------------------
    @property
    def terms(self):
        if self._terms is None:
            key = self.ring.order.key
            self._terms = sorted(self._d.items(), key=lambda t: key(t[0]), reverse=True)
        return self._terms

    def items(self):
        return self._d.items()

    def coefficient(self, exp):
        return self._d.get(tuple(exp), self.ring.field.zero)

    def __len__(self):
        return len(self._d)

    def __bool__(self):
        return bool(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def is_constant(self) -> bool:
        return not self._d or (len(self._d) == 1 and not any(next(iter(self._d))))

    @property
    def lead_monomial(self):
        return self.terms[0][0] if self._d else None

    @property
    def lead_coeff(self):
        return self.terms[0][1] if self._d else self.ring.field.zero

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self._d), default=-1)

    def low_degree(self) -> int:
        return min((sum(e) for e in self._d), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._d}) <= 1

    def constant_term(self):
        return self._d.get((0,) * self.ring.nvars, self.ring.field.zero)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        if not other._d:
            return self
        if not self._d:
            return other
        d = dict(self._d)
        for e, c in other._d.items():
            s = d.get(e)
            if s is None:
                d[e] = c
            else:
                s = s + c
                if s:
                    d[e] = s
                else:
                    del d[e]
        return Poly(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self._d.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero
            return Poly(self.ring, {e: v * c for e, v in self._d.items()})
        other = self._coerce(other)
        if not self._d or not other._d:
            return self.ring.zero
        d: dict = {}
        for e1, c1 in self._d.items():
            for e2, c2 in other._d.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = d.get(e)
                d[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly(self.ring, {e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        return self * c

    def mul_monomial(self, exp, c=None):
        f = self.ring.field
        c = f.one if c is None else f(c)
        return Poly(self.ring, {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self._d.items()})

    def monic(self):
        if not self._d:
            return self
        return self * (self.ring.field.one / self.lead_coeff)

    def homogeneous_part(self, d: int):
        return Poly(self.ring, {e: c for e, c in self._d.items() if sum(e) == d})

    def substitute(self, images) -> "Poly":
        """Ring map sending variable ``i`` to ``images[i]`` (polynomials of a possibly different ring)."""
        target = images[0].ring if images else self.ring
        result = target.zero
        for e, c in self._d.items():
            t = target.constant(c)
            for img, k in zip(images, e):
                if k:
                    t = t * img ** k
            result = result + t
        return result

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self._d == other._d
        try:
            return self._d == self.ring.constant(other)._d
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._d.items()))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def format_poly(p: Poly) -> str:
    """Render ``p`` in the instance grammar (parseable by ``parse_poly``)."""
    if not p._d:
        return "0"
    ring = p.ring
    field = ring.field
    pieces = []
    for exp, c in p.terms:
        if isinstance(field, RationalField):
            neg = c < 0
            mag = -c if neg else c
        else:
            neg = False
            mag = c
        mono = "*".join(
            v if k == 1 else f"{v}^{k}" for v, k in zip(ring.variables, exp) if k
        )
        cs = field.format(mag)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out
