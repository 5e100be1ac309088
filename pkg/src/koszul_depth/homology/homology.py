"""Homology modules of complexes, induced maps, and sup/inf/amp."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.matrix import Matrix
from ..groebner.core import submodule_basis, syzygy_vectors
from .extended import NEG_INF, POS_INF, ExtendedInt, ext
from ..complexes.complex import SplitComplex
from .modules import ModuleMap, PresentedModule, Subquotient, subquotient


class HomologyModule:
    """``H_i(C)`` presented on cycle representatives."""

    def __init__(self, complex_, i: int, sq: Subquotient | None, module: PresentedModule):
        self.complex = complex_
        self.degree = i
        self.sq = sq
        self.module = module

    @property
    def reps(self):
        return self.sq.reps if self.sq is not None else []

    def coordinates(self, cycle):
        if self.sq is None:
            return tuple(cycle)
        return self.sq.coordinates(cycle)

    def is_zero(self) -> bool:
        return self.module.is_zero()

    def hilbert_function(self, d: int) -> int:
        return self.module.hilbert_function(d)


def cycles(C, i: int) -> list[tuple]:
    """Generators (vectors in the cover of ``C_i``) of the cycles in degree ``i``."""
    src, tgt = C.module(i), C.module(i - 1)
    ring = C.ring
    n = src.ngens
    if n == 0:
        return []
    d = C.diff(i)
    if tgt.ngens == 0 or d.is_zero():
        return [src.unit_vector(j) for j in range(n)]
    cols = list(d.columns()) + list(tgt.relations)
    syz = syzygy_vectors(ring, tgt.ngens, cols)
    return [tuple(s[:n]) for s in syz if any(s[:n])]


def boundaries(C, i: int) -> list[tuple]:
    """Image of ``diff(i + 1)`` together with the relations of ``C_i``."""
    d = C.diff(i + 1)
    out = [c for c in d.columns() if any(c)] if d.ncols else []
    return out + list(C.module(i).relations)


def homology_at(C, i: int) -> HomologyModule:
    """Presented ``H_i(C)``; for a rule complex simply the module in degree ``i``."""
    if C.is_rule():
        m = C.module(i)
        return HomologyModule(C, i, None, m)
    cache = C._homology
    if i in cache:
        return cache[i]
    src = C.module(i)
    if src.ngens == 0:
        h = HomologyModule(C, i, None, PresentedModule(C.ring, 0, (), () if C.ring.graded else None,
                                                       check=False))
        cache[i] = h
        return h
    Z = cycles(C, i)
    B = boundaries(C, i)
    sq = subquotient(C.ring, src.ngens, Z, B, src.degrees)
    h = HomologyModule(C, i, sq, sq.module)
    cache[i] = h
    return h


def homology_vanishes(C, i: int) -> bool:
    """Cheaper test of ``H_i(C) = 0``: every cycle generator lies in the boundaries."""
    if C.is_rule():
        return C.module(i).is_zero()
    cache = C._homology
    if i in cache:
        return cache[i].is_zero()
    src = C.module(i)
    if src.ngens == 0:
        return True
    Z = cycles(C, i)
    if not Z:
        return True
    B = boundaries(C, i)
    if not B:
        return False
    sb = submodule_basis(C.ring, src.ngens, B)
    return all(sb.contains(z) for z in Z)


def induced_map(f, i: int) -> ModuleMap:
    """The map ``H_i(source) -> H_i(target)`` induced by the chain map ``f``."""
    hs = homology_at(f.source, i)
    ht = homology_at(f.target, i)
    pr = f.source.ring.poly_ring
    cols = []
    fi = f.at(i)
    ring = f.source.ring
    for z in hs.reps:
        img = tuple(ring.reduce(p) for p in fi.apply(z))
        if ht.module.ngens == 0:
            cols.append(())
        else:
            cols.append(ht.coordinates(img))
    mat = Matrix.from_columns(pr, ht.module.ngens, cols) if cols else Matrix.zeros(pr, ht.module.ngens, 0)
    return ModuleMap(hs.module, ht.module, mat)


def multiplication_map(M: PresentedModule, r) -> ModuleMap:
    pr = M.ring.poly_ring
    return ModuleMap(M, M, Matrix.identity(pr, M.ngens).scale(r) if M.ngens else Matrix.zeros(pr, 0, 0))


@dataclass
class SupInfAmp:
    sup: ExtendedInt
    inf: ExtendedInt
    amp: ExtendedInt
    empty: bool
    certainty: str = "exact"
    nonzero_degrees: list = field(default_factory=list)

    def as_tuple(self):
        return (self.sup, self.inf, self.amp)

    def to_json(self):
        return {
            "sup": self.sup.to_json(), "inf": self.inf.to_json(), "amp": self.amp.to_json(),
            "empty": self.empty, "certainty": self.certainty,
        }


def amplitude(sup: ExtendedInt, inf: ExtendedInt) -> tuple[ExtendedInt, bool]:
    """``sup - inf`` with the empty-homology convention: ``-inf`` flagged empty."""
    if sup == NEG_INF and inf == POS_INF:
        return NEG_INF, True
    return sup - inf, False


def sup_inf_amp(C, vanishes=None) -> SupInfAmp:
    """Extremes of nonvanishing homology.

    For a rule complex the tail decides the infinite cases: a periodic tail
    with a nonzero module gives an exact infinite value in its direction,
    and a parametric tail gives a conditional answer judged on samples.
    """
    if isinstance(C, SplitComplex):
        return _split_sup_inf_amp(C)
    if vanishes is None:
        vanishes = lambda i: homology_vanishes(C, i)
    lo, hi = C.window
    nz = [i for i in range(lo, hi + 1) if not vanishes(i)]
    sup = ext(max(nz)) if nz else NEG_INF
    inf = ext(min(nz)) if nz else POS_INF
    certainty = "exact"
    if C.is_rule():
        if C.tail.kind == "parametric":
            certainty = "conditional"
        up = C.tail_samples("up")
        if any(not m.is_zero() for _, m in up):
            sup = POS_INF
            if not nz:
                inf = ext(min(i for i, m in up if not m.is_zero()))
        down = C.tail_samples("down")
        if any(not m.is_zero() for _, m in down):
            inf = NEG_INF
            if not nz and sup == NEG_INF:
                sup = ext(max(i for i, m in down if not m.is_zero()))
    amp, empty = amplitude(sup, inf)
    return SupInfAmp(sup, inf, amp, empty, certainty, nz)


def _split_sup_inf_amp(S) -> SupInfAmp:
    sups, infs, nz = [], [], []
    for j, X in S.summands():
        r = sup_inf_amp(X)
        if not r.empty:
            sups.append(r.sup + j)
            infs.append(r.inf + j)
            nz.extend(i + j for i in r.nonzero_degrees)
    sup = max(sups) if sups else NEG_INF
    inf = min(infs) if infs else POS_INF
    if any(not sup_inf_amp(X).empty for _, X in S.tail_summands("up")):
        sup = POS_INF
        if not sups:
            inf = min(sup_inf_amp(X).inf + j for j, X in S.tail_summands("up") if not sup_inf_amp(X).empty)
    if any(not sup_inf_amp(X).empty for _, X in S.tail_summands("down")):
        inf = NEG_INF
        if not sups and sup == NEG_INF:
            sup = max(sup_inf_amp(X).sup + j for j, X in S.tail_summands("down") if not sup_inf_amp(X).empty)
    amp, empty = amplitude(sup, inf)
    certainty = "conditional" if S.tail_kind == "parametric" else "exact"
    return SupInfAmp(sup, inf, amp, empty, certainty, sorted(set(nz)))
