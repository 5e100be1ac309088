"""Groebner bases, normal forms, syzygies and lifts for vectors of polynomials.

Vectors are tuples of ``Poly``; a list of vectors of length ``m`` spans a
submodule of ``R^m``.  For a quotient ring ``R = k[x]/I`` every computation
happens in the ambient free module with ``I * e_j`` appended (as already
completed Groebner data), so membership, syzygies and lifts are over ``R``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..algebra.poly import Poly, PolynomialRing
from ..algebra.ring import Ring
from . import engine
from .engine import Packing, Reducer, buchberger_terms, elimination_order, top_order


@lru_cache(maxsize=None)
def packing_for(nvars: int) -> Packing:
    return Packing(nvars)


def as_ring(ring) -> Ring:
    if isinstance(ring, Ring):
        return ring
    if isinstance(ring, PolynomialRing):
        return _ring_from_poly_ring(ring)
    raise TypeError(f"expected a ring, got {type(ring).__name__}")


@lru_cache(maxsize=64)
def _ring_from_poly_ring(pr: PolynomialRing) -> Ring:
    r = Ring(pr.field, pr.variables, pr.order.kind)
    r.poly_ring = pr
    return r


# -- conversion -------------------------------------------------------------

def vec_to_terms(vec, order: engine.ModuleOrder, packing: Packing, offset: int = 0):
    out = []
    pack = packing.pack
    key = order.key
    for c, p in enumerate(vec):
        if not p:
            continue
        comp = c + offset
        for exp, coeff in p.items():
            out.append((key(comp, exp), comp, pack(exp), coeff))
    out.sort(key=lambda t: t[0], reverse=True)
    return out


def terms_to_vec(terms, poly_ring: PolynomialRing, ncomps: int, offset: int = 0):
    data = [dict() for _ in range(ncomps)]
    unpack = packing_for(poly_ring.nvars).unpack
    for _, comp, p, c in terms:
        j = comp - offset
        if 0 <= j < ncomps:
            data[j][unpack(p)] = c
    return tuple(Poly(poly_ring, d) for d in data)


def _as_vec(v, ring=None):
    if isinstance(v, str):
        if ring is None:
            raise ValueError("a ring is needed to parse polynomial strings")
        return (as_ring(ring).parse(v),)
    if isinstance(v, Poly):
        return (v,)
    return tuple(as_ring(ring).parse(p) if isinstance(p, str) else p for p in v)


def _comp_weights(degrees, ncomps):
    if degrees is None:
        return [0] * ncomps
    return list(degrees)


# -- polynomial-level helpers -----------------------------------------------

@lru_cache(maxsize=256)
def _ideal_gb_cached(poly_ring: PolynomialRing, gens: tuple) -> tuple:
    packing = packing_for(poly_ring.nvars)
    order = top_order(poly_ring.order, 1)
    inputs = [vec_to_terms((g,), order, packing) for g in gens if g]
    res = buchberger_terms(inputs, order, packing, poly_ring.field, [0])
    return tuple(terms_to_vec(e.terms, poly_ring, 1)[0] for e in res.basis)


def ideal_groebner_basis(poly_ring: PolynomialRing, gens) -> list[Poly]:
    """Reduced monic Groebner basis of the ideal ``(gens)`` of ``poly_ring``."""
    return list(_ideal_gb_cached(poly_ring, tuple(g for g in gens if g)))


@lru_cache(maxsize=256)
def _poly_reducer(poly_ring: PolynomialRing, gb: tuple):
    packing = packing_for(poly_ring.nvars)
    order = top_order(poly_ring.order, 1)
    red = Reducer(packing, order, poly_ring.field)
    for i, g in enumerate(gb):
        red.add(engine.Elem(vec_to_terms((g,), order, packing), 0, i))
    return red, order, packing


def reduce_poly(p: Poly, gb) -> Poly:
    """Normal form of ``p`` with respect to a Groebner basis ``gb`` of an ideal."""
    if not p:
        return p
    red, order, packing = _poly_reducer(p.ring, tuple(gb))
    terms = vec_to_terms((p,), order, packing)
    h = {k: c for k, _, _, c in terms}
    info = {k: (comp, pk) for k, comp, pk, _ in terms}
    rem = red.reduce(h, info)
    return terms_to_vec(rem, p.ring, 1)[0]


def _seed_terms(ring: Ring, order, packing, ncomps: int, offset: int = 0):
    out = []
    gb = ring.ideal_gb if ring.ideal else []
    for j in range(ncomps):
        for g in gb:
            vec = [ring.zero] * ncomps
            vec[j] = g
            out.append(vec_to_terms(vec, order, packing, offset))
    return out


# -- submodules -------------------------------------------------------------

class SubmoduleBasis:
    """Groebner basis of ``N + I R^m`` for a submodule ``N`` of ``R^m``.

    ``basis`` holds the reduced basis vectors excluding the ones coming from
    the defining ideal of the ring.
    """

    def __init__(self, ring: Ring, rank: int, gens, degrees=None, track_minimal=False):
        self.ring = ring
        self.rank = rank
        self.degrees = None if degrees is None else tuple(degrees)
        pr = ring.poly_ring
        self.packing = packing_for(pr.nvars)
        self.order = top_order(pr.order, rank)
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != rank:
                raise ValueError(f"generator of length {len(g)} in a free module of rank {rank}")
        self.gens = gens
        inputs = [vec_to_terms(g, self.order, self.packing) for g in gens]
        seeds = _seed_terms(ring, self.order, self.packing, rank)
        res = buchberger_terms(
            inputs, self.order, self.packing, pr.field,
            _comp_weights(self.degrees, rank), seeds=seeds, track_minimal=track_minimal,
        )
        self._res = res
        self.minimal_inputs = res.minimal_inputs
        self.elems = res.basis
        self.basis = [terms_to_vec(e.terms, pr, rank) for e in res.basis if not e.seed]
        self.leads = [(e.lcomp, self.packing.unpack(e.lp)) for e in res.basis]

    def reduce(self, vec):
        vec = _as_vec(vec)
        if len(vec) != self.rank:
            raise ValueError("vector length does not match the ambient rank")
        terms = vec_to_terms(vec, self.order, self.packing)
        if not terms:
            return vec
        h = {k: c for k, _, _, c in terms}
        info = {k: (comp, p) for k, comp, p, _ in terms}
        rem = self._res.reducer.reduce(h, info)
        return terms_to_vec(rem, self.ring.poly_ring, self.rank)

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def is_everything(self) -> bool:
        zero = (0,) * self.ring.nvars
        have = {c for c, e in self.leads if e == zero}
        return len(have) == self.rank

    def hilbert_function(self, d: int) -> int:
        """``dim_k (R^m / N)_d`` counted by standard monomials (graded data required)."""
        if self.degrees is None:
            raise ValueError("Hilbert function needs generator degrees")
        n = self.ring.nvars
        total = 0
        by_comp: dict[int, list] = {}
        for c, e in self.leads:
            by_comp.setdefault(c, []).append(e)
        for c in range(self.rank):
            dd = d - self.degrees[c]
            if dd < 0:
                continue
            leads = by_comp.get(c, [])
            for exp in monomials_of_degree(n, dd):
                if not any(all(a <= b for a, b in zip(l, exp)) for l in leads):
                    total += 1
        return total


@lru_cache(maxsize=4096)
def monomials_of_degree(n: int, d: int) -> tuple:
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=1024)
def _submodule_cached(ring, rank, gens, degrees):
    return SubmoduleBasis(ring, rank, gens, degrees)


def submodule_basis(ring: Ring, rank: int, gens, degrees=None) -> SubmoduleBasis:
    gens = tuple(tuple(g) for g in gens)
    return _submodule_cached(ring, rank, gens, None if degrees is None else tuple(degrees))


class AugmentedBasis:
    """Groebner data for the columns ``f_1..f_n`` of a map ``R^n -> R^m``.

    One elimination computation over ``R^m (+) R^n`` on ``(f_k, e_k)``
    yields the syzygy module of the columns (over ``R``) and the ability to
    lift any vector of the image to coefficients.
    """

    def __init__(self, ring: Ring, rank: int, cols):
        self.ring = ring
        self.m = rank
        cols = [tuple(c) for c in cols]
        self.cols = cols
        self.n = n = len(cols)
        pr = ring.poly_ring
        self.packing = packing_for(pr.nvars)
        leads = []
        for c in cols:
            lead = None
            for j, p in enumerate(c):
                if p:
                    e = p.lead_monomial
                    if lead is None or _beats(pr, (j, e), lead):
                        lead = (j, e)
            leads.append(lead)
        self.order = elimination_order(pr.order, rank, leads)
        inputs = []
        one = pr.one
        zero = pr.zero
        for k, c in enumerate(cols):
            unit = [zero] * n
            unit[k] = one
            inputs.append(vec_to_terms(tuple(c) + tuple(unit), self.order, self.packing))
        seeds = _seed_terms(ring, self.order, self.packing, rank) + _seed_terms(
            ring, self.order, self.packing, n, offset=rank
        )
        res = buchberger_terms(inputs, self.order, self.packing, pr.field, [0] * (rank + n), seeds=seeds)
        self._res = res
        syz = []
        for e in res.basis:
            if e.lcomp >= rank and not e.seed:
                v = terms_to_vec(e.terms, pr, n, offset=rank)
                if any(v):
                    syz.append(v)
        self.syzygies = syz

    def lift(self, vec):
        """Coefficients ``c`` with ``sum c_k f_k = vec`` in ``R^m``, or ``None``."""
        vec = _as_vec(vec)
        if len(vec) != self.m:
            raise ValueError("vector length does not match the target rank")
        pr = self.ring.poly_ring
        terms = vec_to_terms(vec, self.order, self.packing)
        if not terms:
            return tuple(pr.zero for _ in range(self.n))
        h = {k: c for k, _, _, c in terms}
        info = {k: (comp, p) for k, comp, p, _ in terms}
        rem = self._res.reducer.reduce(h, info)
        if any(comp < self.m for _, comp, _, _ in rem):
            return None
        sec = terms_to_vec(rem, pr, self.n, offset=self.m)
        return tuple(self.ring.reduce(-p) for p in sec)


def _beats(pr, a, b) -> bool:
    # TOP with e_0 largest: compare monomials, then smaller index wins.
    ka, kb = pr.order.key(a[1]), pr.order.key(b[1])
    if ka != kb:
        return ka > kb
    return a[0] < b[0]


@lru_cache(maxsize=1024)
def _augmented_cached(ring, rank, cols):
    return AugmentedBasis(ring, rank, list(cols))


def augmented_basis(ring: Ring, rank: int, cols) -> AugmentedBasis:
    return _augmented_cached(ring, rank, tuple(tuple(c) for c in cols))


def syzygy_vectors(ring: Ring, rank: int, cols) -> list[tuple]:
    """Generators of the syzygies over ``R`` among ``cols`` (vectors in ``R^rank``)."""
    cols = [tuple(c) for c in cols]
    if not cols:
        return []
    return list(augmented_basis(ring, rank, cols).syzygies)


def minimal_generators(ring: Ring, rank: int, gens, degrees=None):
    """A minimal homogeneous generating subset when everything is graded,
    otherwise the generators with zeros and repeats dropped."""
    gens = [tuple(ring.reduce(p) for p in g) for g in gens]
    nonzero = []
    seen = set()
    for g in gens:
        if any(g) and g not in seen:
            seen.add(g)
            nonzero.append(g)
    if degrees is None or not ring.graded:
        return nonzero
    degs = [vector_degree(g, degrees) for g in nonzero]
    if any(d is None for d in degs):
        return nonzero
    sb = SubmoduleBasis(ring, rank, nonzero, degrees, track_minimal=True)
    keep = sorted(sb.minimal_inputs)
    return [nonzero[i] for i in keep]


def vector_degree(vec, degrees):
    """Internal degree of a homogeneous vector (``None`` when inhomogeneous or zero)."""
    d = None
    for p, w in zip(vec, degrees):
        for exp in p._d:
            x = sum(exp) + w
            if d is None:
                d = x
            elif d != x:
                return None
    return d


# -- public-facing operations ----------------------------------------------

class GroebnerBasis:
    """A reduced Groebner basis with transformation certificates.

    ``certificates[i]`` expresses ``basis[i]`` in the original generators;
    ``input_certificates[j]`` expresses input ``j`` in the basis.
    """

    def __init__(self, ring, rank, gens, basis, certificates, order_kind):
        self.ring = ring
        self.rank = rank
        self.gens = gens
        self.basis = basis
        self.certificates = certificates
        self.order = order_kind
        self._sb = None
        self._input_certs = None

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    @property
    def submodule(self) -> SubmoduleBasis:
        if self._sb is None:
            self._sb = submodule_basis(self.ring, self.rank, self.basis)
        return self._sb

    def contains(self, vec) -> bool:
        return self.submodule.contains(vec)

    @property
    def input_certificates(self):
        if self._input_certs is None:
            certs = []
            for g in self.gens:
                q, r = normal_form(g, self)
                if any(r):
                    raise ArithmeticError("input generator not reduced by its own Groebner basis")
                certs.append(q)
            self._input_certs = certs
        return self._input_certs

    def verify(self) -> bool:
        """Check both certificate directions exactly."""
        ring = self.ring
        for b, c in zip(self.basis, self.certificates):
            acc = [ring.zero] * self.rank
            for coeff, g in zip(c, self.gens):
                for i in range(self.rank):
                    acc[i] = acc[i] + coeff * g[i]
            if any(ring.reduce(a - x) for a, x in zip(acc, b)):
                return False
        for g, q in zip(self.gens, self.input_certificates):
            acc = [ring.zero] * self.rank
            for coeff, b in zip(q, self.basis):
                for i in range(self.rank):
                    acc[i] = acc[i] + coeff * b[i]
            if any(ring.reduce(a - x) for a, x in zip(acc, g)):
                return False
        return True


def buchberger(gens, ring=None, rank=None, certificates=True) -> GroebnerBasis:
    """Reduced Groebner basis of the span of ``gens`` (polynomials or vectors).

    The ring's own order is used (term-over-position on vectors); to use
    another order build the ring with it.
    """
    gens = [_as_vec(g, ring) for g in gens]
    if ring is None:
        if not gens:
            raise ValueError("a ring is needed to interpret an empty generator list")
        ring = gens[0][0].ring
    ring = as_ring(ring)
    if rank is None:
        rank = len(gens[0]) if gens else 1
    pr = ring.poly_ring
    if not gens:
        return GroebnerBasis(ring, rank, [], [], [], pr.order.kind)
    if not certificates:
        sb = SubmoduleBasis(ring, rank, gens)
        return GroebnerBasis(ring, rank, gens, sb.basis, None, pr.order.kind)
    aug = AugmentedBasis(ring, rank, gens)
    basis, certs = [], []
    for e in aug._res.basis:
        if e.lcomp < rank and not e.seed:
            basis.append(terms_to_vec(e.terms, pr, rank))
            certs.append(terms_to_vec(e.terms, pr, len(gens), offset=rank))
    order = list(range(len(basis)))
    order.sort(key=lambda i: _vec_sort_key(basis[i], pr), reverse=True)
    return GroebnerBasis(ring, rank, gens, [basis[i] for i in order], [certs[i] for i in order],
                         pr.order.kind)


def _vec_sort_key(vec, pr):
    for j, p in enumerate(vec):
        if p:
            return (pr.order.key(p.lead_monomial), -j)
    return (-1, 0)


def normal_form(v, gb):
    """Division of ``v`` by the elements of ``gb`` (a ``GroebnerBasis`` or a list).

    Returns ``(quotients, remainder)`` with ``v = sum q_i g_i + remainder``
    (modulo the ring's defining ideal for quotient rings) and no remainder
    term divisible by a leading term of ``gb``.
    """
    scalar = isinstance(v, Poly)
    vec = _as_vec(v)
    if isinstance(gb, GroebnerBasis):
        elems, ring = list(gb.basis), gb.ring
    else:
        elems = [_as_vec(g) for g in gb]
        ring = as_ring(vec[0].ring)
    rank = len(vec)
    for g in elems:
        if len(g) != rank:
            raise ValueError("rank mismatch between vector and basis")
    pr = ring.poly_ring
    packing = packing_for(pr.nvars)
    order = top_order(pr.order, rank)
    red = Reducer(packing, order, pr.field)
    for i, g in enumerate(elems):
        t = vec_to_terms(g, order, packing)
        if t:
            red.add(engine.Elem(t, 0, i))
    nseeds = len(elems)
    if ring.ideal:
        for j, t in enumerate(_seed_terms(ring, order, packing, rank)):
            red.add(engine.Elem(t, 0, nseeds + j))
    terms = vec_to_terms(vec, order, packing)
    h = {k: c for k, _, _, c in terms}
    info = {k: (comp, p) for k, comp, p, _ in terms}
    quots: dict = {}
    rem = red.reduce(h, info, quotients=quots)
    unpack = packing.unpack
    q = []
    for i in range(len(elems)):
        d = quots.get(i, {})
        q.append(Poly(pr, {unpack(p): c for p, c in d.items() if c}))
    r = terms_to_vec(rem, pr, rank)
    if scalar:
        return q, r[0]
    return q, r


def syzygies(gens, ring=None):
    """Columns generating the syzygy module of ``gens`` (polynomials or vectors)."""
    from ..algebra.matrix import Matrix
    gens = [_as_vec(g, ring) for g in gens]
    if ring is None:
        ring = gens[0][0].ring
    ring = as_ring(ring)
    rank = len(gens[0]) if gens else 1
    syz = syzygy_vectors(ring, rank, gens)
    return Matrix.from_columns(ring.poly_ring, len(gens), syz)


def krull_dim(ring) -> int:
    """Krull dimension via maximal independent sets modulo the lead-term ideal; ``-1`` for the zero ring."""
    ring = as_ring(ring)
    gb = ring.ideal_gb if ring.ideal else []
    leads = [g.lead_monomial for g in gb]
    if any(not any(e) for e in leads):
        return -1
    n = ring.nvars
    supports = [frozenset(i for i, a in enumerate(e) if a) for e in leads]
    for size in range(n, -1, -1):
        for s in combinations(range(n), size):
            ss = set(s)
            if not any(sup <= ss for sup in supports):
                return size
    return 0
