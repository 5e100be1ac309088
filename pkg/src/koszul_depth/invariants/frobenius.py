"""Frobenius pushforwards ``phi^e_* R`` over prime fields."""

from __future__ import annotations

from itertools import product

from ..homology.modules import PresentedModule


def frobenius_pushforward(ring, e: int = 1) -> PresentedModule:
    """``R`` viewed as an ``R``-module through ``r -> r^q`` with ``q = p^e``.

    Generators are the monomials ``x^a`` with ``0 <= a_i < q``.  A polynomial
    ``h`` decomposes as ``sum_a h_a^q x^a``; the relations are the
    decompositions of ``g x^b`` for ``g`` in the defining ideal.  The module
    is ungraded in general (the action multiplies degrees by ``q``).
    """
    p = ring.characteristic
    if not p:
        raise ValueError("Frobenius needs a field of positive characteristic")
    if e < 1:
        raise ValueError("e must be positive")
    q = p ** e
    pr = ring.poly_ring
    n = ring.nvars
    basis = list(product(range(q), repeat=n))
    index = {a: i for i, a in enumerate(basis)}

    def decompose(h):
        col = [pr.zero] * len(basis)
        for exp, c in h.items():
            a = tuple(t % q for t in exp)
            rest = tuple(t // q for t in exp)
            col[index[a]] = col[index[a]] + pr.monomial(rest) * pr.constant(c)
        return tuple(col)

    rels = []
    for g in ring.ideal:
        for b in basis:
            rels.append(decompose(g * pr.monomial(b)))
    M = PresentedModule(ring, len(basis), rels, None, check=False)
    return M
