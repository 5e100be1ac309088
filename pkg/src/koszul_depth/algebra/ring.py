"""Quotient rings ``k[x_1..x_v] / I`` (the ideal may be empty)."""

from __future__ import annotations

from .fields import QQ, field_from_descriptor
from .grammar import parse_poly
from .poly import Poly, PolynomialRing


class Ring:
    """A finitely generated commutative ``k``-algebra given by generators and an ideal.

    Elements are ``Poly`` objects of ``poly_ring``; ``reduce`` picks the
    normal form with respect to a Groebner basis of the ideal, so two
    elements are equal in the ring iff their normal forms agree.
    """

    def __init__(self, field=QQ, variables=("x",), order: str = "grevlex", ideal=()):
        self.poly_ring = PolynomialRing(field, variables, order)
        self.field = field
        self.variables = self.poly_ring.variables
        self.nvars = self.poly_ring.nvars
        self.order = self.poly_ring.order
        gens = []
        for g in ideal:
            p = parse_poly(g, self.poly_ring) if isinstance(g, str) else self.poly_ring(g)
            if p:
                gens.append(p)
        self.ideal = tuple(gens)
        self.graded = all(g.is_homogeneous() for g in self.ideal)
        self._gb = None
        self._dim = None
        self.zero = self.poly_ring.zero
        self.one = self.poly_ring.one

    # -- construction -----------------------------------------------------
    @classmethod
    def from_descriptor(cls, desc: dict) -> "Ring":
        field = field_from_descriptor(desc.get("field", "Q"))
        variables = desc.get("vars")
        if not variables:
            raise ValueError("ring descriptor needs a non-empty 'vars' list")
        return cls(field, variables, desc.get("order", "grevlex"), desc.get("ideal", ()))

    def descriptor(self) -> dict:
        return {
            "field": self.field.descriptor(),
            "vars": list(self.variables),
            "order": self.order.kind,
            "ideal": [str(g) for g in self.ideal],
        }

    def quotient(self, extra) -> "Ring":
        """The ring ``self / (extra)``."""
        extra = [parse_poly(g, self.poly_ring) if isinstance(g, str) else g for g in extra]
        return Ring(self.field, self.variables, self.order.kind, list(self.ideal) + extra)

    def ambient(self) -> "Ring":
        return Ring(self.field, self.variables, self.order.kind)

    # -- elements ---------------------------------------------------------
    def __call__(self, value) -> Poly:
        if isinstance(value, str):
            return self.reduce(parse_poly(value, self.poly_ring))
        return self.reduce(self.poly_ring(value))

    def gen(self, name_or_index) -> Poly:
        return self.reduce(self.poly_ring.gen(name_or_index))

    def gens(self) -> list[Poly]:
        return [self.gen(i) for i in range(self.nvars)]

    @property
    def is_polynomial(self) -> bool:
        return not self.ideal

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def ideal_gb(self) -> list[Poly]:
        """Reduced Groebner basis of the defining ideal."""
        if self._gb is None:
            from ..groebner.core import ideal_groebner_basis
            self._gb = ideal_groebner_basis(self.poly_ring, self.ideal)
        return self._gb

    def reduce(self, p: Poly) -> Poly:
        if not self.ideal or not p:
            return p
        from ..groebner.core import reduce_poly
        return reduce_poly(p, self.ideal_gb)

    def is_zero_ring(self) -> bool:
        return any(g.is_constant() and g for g in self.ideal_gb)

    def equal(self, a: Poly, b: Poly) -> bool:
        return not self.reduce(a - b)

    def is_unit(self, p: Poly) -> bool:
        """Test ``1 in (I, p)``."""
        p = self.reduce(p)
        if not p:
            return False
        if p.is_constant():
            return True
        from ..groebner.core import ideal_groebner_basis
        gb = ideal_groebner_basis(self.poly_ring, list(self.ideal) + [p])
        return any(g.is_constant() for g in gb)

    def krull_dim(self) -> int:
        if self._dim is None:
            from ..groebner.core import krull_dim
            self._dim = krull_dim(self)
        return self._dim

    def parse(self, text: str, params=None) -> Poly:
        return self.reduce(parse_poly(text, self.poly_ring, params))

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.poly_ring == other.poly_ring
            and set(self.ideal) == set(other.ideal)
        )

    def __hash__(self):
        return hash((self.poly_ring, frozenset(self.ideal)))

    def __repr__(self):
        base = repr(self.poly_ring)
        if self.ideal:
            return f"{base}/({', '.join(map(str, self.ideal))})"
        return base
