"""Buchberger's algorithm for submodules of free modules over ``k[x]``.

Internal representation: a module term ``c * x^e * e_comp`` is stored as
``(key, comp, packed_e, c)``, where ``packed_e`` holds one 16-bit field per
variable and ``key`` is an integer that is *linear* in the exponent, so the
key of ``x^t * term`` is ``key + mult * mkey(t)``.  Divisibility of packed
exponents is one big-integer operation using a guard bit per field.

Pairs are selected by the sugar strategy (ties broken by lcm), the
Gebauer-Moeller installation of the chain criterion is always applied, and
the coprime-lead criterion is applied when the lead terms sit on a
single-component basis element pair.
"""

from __future__ import annotations

import heapq
from itertools import count

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1


class Packing:
    """Exponent packing for ``n`` variables."""

    __slots__ = ("n", "guard", "shifts")

    def __init__(self, n: int):
        self.n = n
        self.shifts = tuple(FIELD_BITS * i for i in range(n))
        self.guard = sum(1 << (s + FIELD_BITS - 1) for s in self.shifts)

    def pack(self, exp) -> int:
        p = 0
        for s, e in zip(self.shifts, exp):
            p |= e << s
        return p

    def unpack(self, p: int) -> tuple:
        return tuple((p >> s) & FIELD_MASK for s in self.shifts)

    def degree(self, p: int) -> int:
        d = 0
        while p:
            d += p & FIELD_MASK
            p >>= FIELD_BITS
        return d

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b + g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        out = 0
        for s in self.shifts:
            x = (a >> s) & FIELD_MASK
            y = (b >> s) & FIELD_MASK
            out |= (x if x > y else y) << s
        return out

    def coprime(self, a: int, b: int) -> bool:
        for s in self.shifts:
            if (a >> s) & FIELD_MASK and (b >> s) & FIELD_MASK:
                return False
        return True


class ModuleOrder:
    """Monomial order on ``ncomps`` components: ``key(c, e) = base[c] + mult * mkey(e)``.

    ``base`` encodes block membership, Schreyer shifts and position
    tie-breaks; all bases must be distinct modulo ``mult``.
    """

    __slots__ = ("weights", "mult", "base", "ncomps", "block")

    def __init__(self, weights, mult: int, base, block=None):
        self.weights = tuple(weights)
        self.mult = mult
        self.base = tuple(base)
        self.ncomps = len(self.base)
        self.block = tuple(block) if block is not None else (0,) * self.ncomps

    def mkey(self, exp) -> int:
        return sum(w * e for w, e in zip(self.weights, exp))

    def key(self, comp: int, exp) -> int:
        return self.base[comp] + self.mult * self.mkey(exp)


def _block_offset(weights, mult, max_degree=1 << 12):
    top = max(weights, default=1) * max_degree
    return (top + 2) * mult * 4


def top_order(mono_order, ncomps: int) -> ModuleOrder:
    """Term-over-position order induced from the ring order, ``e_0 > e_1 > ...``."""
    mult = max(ncomps, 1)
    return ModuleOrder(mono_order.weights, mult, [mult - 1 - c for c in range(ncomps)])


def elimination_order(mono_order, n1: int, leads) -> ModuleOrder:
    """Order on ``R^n1 (+) R^n2`` with the first block eliminated.

    The first block carries the term-over-position order; on the second
    block ``x^m e_k`` is compared as ``x^m * leads[k]`` in the first block
    (a Schreyer order), ties broken by ``k``.  ``leads[k]`` is a pair
    ``(component, exponent)`` or ``None`` for a zero column.
    """
    n2 = len(leads)
    a, b = max(n1, 1), max(n2, 1)
    mult = a * b
    w = mono_order.weights
    big = _block_offset(w, mult)
    # Every first-block key exceeds every second-block key.
    base = [big + (a - 1 - c) * b for c in range(n1)]
    block = [0] * n1
    for k, lead in enumerate(leads):
        if lead is None:
            comp, exp = n1 - 1 if n1 else 0, (0,) * len(w)
        else:
            comp, exp = lead
        shift = sum(x * y for x, y in zip(w, exp))
        base.append(shift * mult + (a - 1 - comp) * b + (b - 1 - k))
        block.append(1)
    return ModuleOrder(w, mult, base, block)


class Elem:
    """A basis element: terms sorted by descending key, monic."""

    __slots__ = ("terms", "lk", "lc", "lp", "lcomp", "sugar", "idx", "single", "seed")

    def __init__(self, terms, sugar, idx, seed=False):
        self.terms = terms
        self.lk, self.lcomp, self.lp, self.lc = terms[0]
        self.sugar = sugar
        self.idx = idx
        comp = self.lcomp
        self.single = all(t[1] == comp for t in terms)
        self.seed = seed


class ReductionStats:
    __slots__ = ("pairs", "zero", "criteria")

    def __init__(self):
        self.pairs = 0
        self.zero = 0
        self.criteria = 0


class Reducer:
    """Holds the reducers, indexed by lead component."""

    def __init__(self, packing: Packing, order: ModuleOrder, field):
        self.packing = packing
        self.order = order
        self.field = field
        self.by_comp: dict[int, list[Elem]] = {}
        self.elems: list[Elem] = []

    def add(self, e: Elem):
        self.by_comp.setdefault(e.lcomp, []).append(e)
        self.elems.append(e)

    def find(self, comp, p):
        cands = self.by_comp.get(comp)
        if not cands:
            return None
        g = self.packing.guard
        pg = p + g
        for e in cands:
            if (pg - e.lp) & g == g:
                return e
        return None

    def reduce(self, h: dict, info: dict, full: bool = True, quotients=None):
        """Reduce the vector ``h`` (key -> coeff, with ``info`` key -> (comp, packed)).

        Returns the remainder as a descending term list.  When ``full`` is
        false, stops at the first irreducible lead term and returns it
        followed by the unreduced rest.  ``quotients`` (dict elem.idx ->
        dict packed -> coeff) records the division quotients when given.
        """
        heap = [-k for k in h]
        heapq.heapify(heap)
        rem = []
        find = self.find
        pop = heapq.heappop
        push = heapq.heappush
        while heap:
            k = -pop(heap)
            c = h.get(k)
            if c is None:
                continue
            comp, p = info[k]
            e = find(comp, p)
            if e is None:
                del h[k]
                rem.append((k, comp, p, c))
                if not full:
                    rest = sorted(h, reverse=True)
                    rem.extend((kk, info[kk][0], info[kk][1], h[kk]) for kk in rest)
                    return rem
                continue
            q = c / e.lc
            dk = k - e.lk
            dp = p - e.lp
            del h[k]
            if quotients is not None:
                qd = quotients.setdefault(e.idx, {})
                qd[dp] = qd.get(dp, 0) + q
            terms = e.terms
            for i in range(1, len(terms)):
                tk, tcomp, tp, tc = terms[i]
                nk = tk + dk
                old = h.get(nk)
                if old is None:
                    h[nk] = -q * tc
                    info[nk] = (tcomp, tp + dp)
                    push(heap, -nk)
                else:
                    v = old - q * tc
                    if v:
                        h[nk] = v
                    else:
                        del h[nk]
        return rem


def _sugar_of(terms, packing, comp_weights):
    return max(packing.degree(p) + comp_weights[c] for _, c, p, _ in terms)


def _monic(terms, field):
    lc = terms[0][3]
    if lc == field.one:
        return terms
    inv = field.one / lc
    return [(k, c, p, v * inv) for k, c, p, v in terms]


class GBResult:
    """Outcome of a Buchberger run."""

    def __init__(self, reducer: Reducer, basis: list[Elem], minimal_inputs, stats):
        self.reducer = reducer
        self.basis = basis
        self.minimal_inputs = minimal_inputs
        self.stats = stats

    def reduce_terms(self, h: dict, info: dict, full=True):
        return self.reducer.reduce(h, info, full=full)


def buchberger_terms(inputs, order: ModuleOrder, packing: Packing, field, comp_weights,
                     seeds=(), reduce_final=True, track_minimal=False):
    """Compute a Groebner basis of the submodule spanned by ``inputs`` and ``seeds``.

    ``inputs``/``seeds`` are descending term lists; ``seeds`` must already be
    a Groebner basis of what they span (pairs among them are skipped).
    With ``track_minimal`` and homogeneous inputs, the returned
    ``minimal_inputs`` lists the indices of inputs not lying in the span of
    lower-degree material and earlier inputs: a minimal generating set.
    """
    reducer = Reducer(packing, order, field)
    stats = ReductionStats()
    active: list[Elem] = []
    redundant: set[int] = set()
    pairs: dict[tuple[int, int], int] = {}
    queue: list = []
    seq = count()
    elems: list[Elem] = []
    ideal_case = order.ncomps == 1

    def install(e: Elem):
        # Gebauer-Moeller update for the new element ``e``.
        lp = e.lp
        cands = []
        for g in active:
            if g.idx in redundant or g.lcomp != e.lcomp:
                continue
            if g.seed and e.seed:
                continue
            cands.append((g, packing.lcm(g.lp, lp)))
        kept = []
        rest = list(cands)
        while rest:
            g1, l1 = rest.pop()
            copr = (ideal_case or (g1.single and e.single)) and packing.coprime(g1.lp, lp)
            if copr:
                kept.append((g1, l1, True))
                continue
            if any(packing.divides(l2, l1) for _, l2 in rest) or any(
                packing.divides(l2, l1) for _, l2, _ in kept
            ):
                stats.criteria += 1
                continue
            kept.append((g1, l1, False))
        # Old pairs that the new lead makes superfluous.
        for (i, j), l in list(pairs.items()):
            if elems[i].lcomp != e.lcomp:
                continue
            if packing.divides(lp, l):
                li = packing.lcm(elems[i].lp, lp)
                lj = packing.lcm(elems[j].lp, lp)
                if li != l and lj != l:
                    del pairs[(i, j)]
                    stats.criteria += 1
        for g in active:
            if g.idx not in redundant and g.lcomp == e.lcomp and packing.divides(lp, g.lp):
                redundant.add(g.idx)
        for g1, l1, copr in kept:
            if copr:
                stats.criteria += 1
                continue
            dg1 = packing.degree(l1 - g1.lp)
            de = packing.degree(l1 - lp)
            sugar = max(g1.sugar + dg1, e.sugar + de)
            lkey = order.key(e.lcomp, packing.unpack(l1))
            pairs[(g1.idx, e.idx)] = l1
            heapq.heappush(queue, (sugar, 0, lkey, next(seq), g1.idx, e.idx))
        active.append(e)
        reducer.add(e)

    def new_elem(terms, sugar, seed=False):
        e = Elem(_monic(terms, field), sugar, len(elems), seed=seed)
        elems.append(e)
        return e

    for t in seeds:
        install(new_elem(list(t), _sugar_of(t, packing, comp_weights), seed=True))

    for n, t in enumerate(inputs):
        if not t:
            continue
        heapq.heappush(queue, (_sugar_of(t, packing, comp_weights), 1, t[0][0], next(seq), -1, n))

    minimal = []
    while queue:
        sugar, kind, _, _, i, j = heapq.heappop(queue)
        if kind == 0:
            l = pairs.pop((i, j), None)
            if l is None:
                continue
            stats.pairs += 1
            f, g = elems[i], elems[j]
            h, info = _spair(f, g, l, order, packing)
        else:
            t = inputs[j]
            h = {k: c for k, _, _, c in t}
            info = {k: (comp, p) for k, comp, p, _ in t}
        rem = reducer.reduce(h, info, full=True)
        if not rem:
            stats.zero += 1
            continue
        if kind == 1:
            minimal.append(j)
        install(new_elem(rem, sugar))

    basis = [e for e in active if e.idx not in redundant]
    if reduce_final:
        basis = _interreduce(basis, packing, order, field)
    return GBResult(reducer, basis, minimal if track_minimal else None, stats)


def _spair(f: Elem, g: Elem, l: int, order, packing):
    tf = l - f.lp
    tg = l - g.lp
    exps = packing.unpack
    mult = order.mult
    dkf = mult * order.mkey(exps(tf))
    dkg = mult * order.mkey(exps(tg))
    h: dict = {}
    info: dict = {}
    for k, comp, p, c in f.terms[1:]:
        nk = k + dkf
        h[nk] = c
        info[nk] = (comp, p + tf)
    q = f.lc / g.lc
    for k, comp, p, c in g.terms[1:]:
        nk = k + dkg
        old = h.get(nk)
        if old is None:
            h[nk] = -q * c
            info[nk] = (comp, p + tg)
        else:
            v = old - q * c
            if v:
                h[nk] = v
            else:
                del h[nk]
    return h, info


def _interreduce(basis, packing, order, field):
    # A lead term never divides a smaller term, so one reducer holding the
    # whole (minimal) basis serves every element's tail.
    out = []
    others = Reducer(packing, order, field)
    for o in basis:
        others.add(o)
    for e in basis:
        h = {k: c for k, _, _, c in e.terms[1:]}
        info = {k: (comp, p) for k, comp, p, _ in e.terms[1:]}
        tail = others.reduce(h, info, full=True)
        ne = Elem([e.terms[0]] + tail, e.sugar, e.idx, seed=e.seed)
        out.append(ne)
    # Reducers in the final structure should use the reduced elements.
    return sorted(out, key=lambda e: e.lk)
