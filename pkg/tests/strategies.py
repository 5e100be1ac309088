"""Hypothesis strategies for small polynomials over QQ[x, y] and GF(p)[x, y]."""

from hypothesis import strategies as st

from koszul_depth.algebra.fields import GF, QQ
from koszul_depth.algebra.ring import Ring

RINGS = {
    "QQ": Ring(QQ, ("x", "y")),
    "GF5": Ring(GF(5), ("x", "y")),
}

exponents = st.tuples(st.integers(0, 3), st.integers(0, 3))
coeffs = st.integers(-4, 4).filter(lambda c: c != 0)


@st.composite
def polys(draw, ring=RINGS["QQ"], max_terms=4):
    terms = draw(st.lists(st.tuples(exponents, coeffs), max_size=max_terms))
    p = ring.zero
    for e, c in terms:
        p = p + ring.poly_ring.monomial(e, c)
    return p


@st.composite
def homogeneous_polys(draw, ring=RINGS["QQ"], degree=None):
    d = draw(st.integers(1, 3)) if degree is None else degree
    cs = draw(st.lists(st.integers(-3, 3), min_size=d + 1, max_size=d + 1))
    p = ring.zero
    for i, c in enumerate(cs):
        if c:
            p = p + ring.poly_ring.monomial((i, d - i), c)
    return p
