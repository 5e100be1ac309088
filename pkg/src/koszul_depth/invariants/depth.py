"""Depth by four routes, width by two, depth at a prime.

Every route accepts a finite-window ``Complex``, a ``PresentedModule``
(placed in degree 0) or a ``RuleComplex``.  Rule complexes have zero
differential, so every route splits over their modules:
``depth(S^j X) = depth X - j`` and ``width(S^j X) = width X + j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.matrix import Matrix
from ..algebra.poly import Poly
from ..complexes.complex import ChainMap, Complex, split_of
from ..complexes.ops import hom_complex, koszul, tensor
from ..derived.functors import InsufficientCap, as_complex, ltensor, rhom
from ..derived.resolution import resolve
from ..groebner.core import augmented_basis, ideal_groebner_basis, reduce_poly, submodule_basis, syzygy_vectors
from ..groebner.ideals import ideal_power, is_unit_ideal
from ..homology.extended import NEG_INF, POS_INF, ExtendedInt, ext
from ..homology.homology import boundaries, homology_at, homology_vanishes, sup_inf_amp
from ..homology.modules import PresentedModule

EXACT, CONDITIONAL, INCONCLUSIVE = "exact", "conditional", "inconclusive"


class UnitIdealError(ValueError):
    pass


@dataclass
class DepthReport:
    value: ExtendedInt | None
    route: str
    certainty: str = EXACT
    evidence: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.certainty == EXACT

    def to_json(self):
        return {
            "value": None if self.value is None else self.value.to_json(),
            "route": self.route,
            "certainty": self.certainty,
            "evidence": _jsonable(self.evidence),
        }


WidthReport = DepthReport


def _jsonable(x):
    if isinstance(x, ExtendedInt):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Poly):
        return str(x)
    return x


def _ideal(ring, gens):
    out = []
    for g in gens:
        p = ring.parse(g) if isinstance(g, str) else ring.reduce(g)
        out.append(p)
    if not out:
        out = [ring.zero]
    return out


def _check_proper(ring, gens):
    if is_unit_ideal(ring, gens):
        raise UnitIdealError("the ideal is the whole ring")


def _worse(a: str, b: str) -> str:
    order = {EXACT: 0, CONDITIONAL: 1, INCONCLUSIVE: 2}
    return a if order[a] >= order[b] else b


# -- rule complexes ---------------------------------------------------------

def _over_rule(C, route_fn, kind: str, route: str) -> DepthReport:
    """Combine per-summand values of a rule or split complex.

    ``kind`` is ``"depth"`` (inf of value - j) or ``"width"`` (inf of value + j).
    """
    S = split_of(C)
    certainty = CONDITIONAL if S.tail_kind == "parametric" else EXACT
    per = {}
    best = POS_INF
    blowup = "up" if kind == "depth" else "down"
    groups = [(None, S.summands())] + [(d, S.tail_summands(d)) for d in ("up", "down")]
    for direction, items in groups:
        for j, X in items:
            r = route_fn(X)
            if r.value is None:
                return DepthReport(None, route, INCONCLUSIVE, {"degree": j, "inner": r.to_json()})
            if not r.value.is_finite and r.value == POS_INF:
                continue
            certainty = _worse(certainty, r.certainty)
            v = r.value - j if kind == "depth" else r.value + j
            per[j if direction is None else f"tail {j}"] = v
            if direction == blowup and r.value.is_finite:
                best = NEG_INF
            else:
                best = min(best, v)
    return DepthReport(best, route, certainty, {"per_degree": per, "tail": S.tail_kind})


# -- Koszul routes ----------------------------------------------------------

def depth_koszul(a_gens, C) -> DepthReport:
    """``n - sup(K (x) C)`` for the Koszul complex ``K`` on the ``n`` generators."""
    C = as_complex(C)
    ring = C.ring
    gens = _ideal(ring, a_gens)
    _check_proper(ring, gens)
    if C.is_rule():
        return _over_rule(C, lambda X: depth_koszul(gens, X), "depth", "koszul")
    K = koszul(gens, ring)
    T = tensor(K, C)
    s = sup_inf_amp(T)
    return DepthReport(len(gens) - s.sup, "koszul", EXACT, {"n": len(gens), "sup_KxC": s.sup,
                                                              "nonzero": s.nonzero_degrees})


def depth_koszul_coh(a_gens, C) -> DepthReport:
    """``-sup Hom(K, C)``: least ``l`` with ``H_{-l}(Hom(K, C)) != 0``."""
    C = as_complex(C)
    ring = C.ring
    gens = _ideal(ring, a_gens)
    _check_proper(ring, gens)
    if C.is_rule():
        return _over_rule(C, lambda X: depth_koszul_coh(gens, X), "depth", "koszul_cohomology")
    K = koszul(gens, ring)
    H = hom_complex(K, C)
    s = sup_inf_amp(H)
    return DepthReport(-s.sup, "koszul_cohomology", EXACT, {"sup_HomKC": s.sup,
                                                            "nonzero": s.nonzero_degrees})


def width_koszul(a_gens, C) -> DepthReport:
    """``inf(K (x) C)``."""
    C = as_complex(C)
    ring = C.ring
    gens = _ideal(ring, a_gens)
    _check_proper(ring, gens)
    if C.is_rule():
        return _over_rule(C, lambda X: width_koszul(gens, X), "width", "koszul")
    T = tensor(koszul(gens, ring), C)
    s = sup_inf_amp(T)
    return DepthReport(s.inf, "koszul", EXACT, {"inf_KxC": s.inf, "nonzero": s.nonzero_degrees})


# -- Ext / Tor routes -------------------------------------------------------

def _quotient_module(ring, gens) -> PresentedModule:
    return PresentedModule.cyclic(ring, gens)


def depth_ext(a_gens, C, candidate: int | None = None, cap: int = 24, slack: int = 2) -> DepthReport:
    """Least ``l`` with ``Ext^l(R/a, C) != 0``.

    Standalone mode searches upward from ``-sup C``; with ``candidate`` it
    verifies vanishing below the candidate and nonvanishing at it.
    """
    C = as_complex(C)
    ring = C.ring
    gens = _ideal(ring, a_gens)
    _check_proper(ring, gens)
    if C.is_rule():
        return _over_rule(C, lambda X: depth_ext(gens, X, None, cap, slack), "depth", "ext")
    s = sup_inf_amp(C)
    if s.empty:
        return DepthReport(POS_INF, "ext", EXACT, {"reason": "C is exact"})
    A = _quotient_module(ring, gens)
    start = -int(s.sup)
    stop = len(gens) - int(s.inf) + slack
    if candidate is not None:
        stop = candidate
    try:
        D = rhom(A, C, (-stop, -start), cap)
    except InsufficientCap:
        return DepthReport(None, "ext", INCONCLUSIVE, {"reason": "cap"})
    checked = []
    for l in range(start, stop + 1):
        if not D.is_certified(-l):
            return DepthReport(None, "ext", INCONCLUSIVE, {"checked": checked, "cap": cap})
        zero = D.vanishes(-l)
        checked.append(l)
        if not zero:
            if candidate is not None and l != candidate:
                return DepthReport(ext(l), "ext", EXACT, {"mode": "certificate", "refuted": candidate})
            return DepthReport(ext(l), "ext", EXACT, {"checked": checked,
                                                      "mode": "certificate" if candidate is not None
                                                      else "search",
                                                      "resolution_complete": D.complete})
    if D.complete:
        # All of RHom(R/a, C) was computed: it vanishes in the search range,
        # and beyond it the Hom complex has no terms with homology.
        H = D.complex
        rest = [l for l in range(-H.hi, -H.lo + 1) if l > stop and not D.vanishes(-l)]
        if not rest:
            return DepthReport(POS_INF, "ext", EXACT, {"checked": checked, "resolution_complete": True})
        return DepthReport(ext(min(rest)), "ext", EXACT, {"checked": checked})
    return DepthReport(None, "ext", INCONCLUSIVE, {"checked": checked, "cap": cap})


def width_tor(a_gens, C, candidate: int | None = None, cap: int = 24, slack: int = 2) -> DepthReport:
    """Least ``l`` with ``Tor_l(R/a, C) != 0``, searching upward from ``inf C``."""
    C = as_complex(C)
    ring = C.ring
    gens = _ideal(ring, a_gens)
    _check_proper(ring, gens)
    if C.is_rule():
        return _over_rule(C, lambda X: width_tor(gens, X, None, cap, slack), "width", "tor")
    s = sup_inf_amp(C)
    if s.empty:
        return DepthReport(POS_INF, "tor", EXACT, {"reason": "C is exact"})
    A = _quotient_module(ring, gens)
    start = int(s.inf)
    stop = int(s.sup) + len(gens) + slack if candidate is None else candidate
    D = ltensor(A, C, (start, stop), cap)
    checked = []
    for l in range(start, stop + 1):
        if not D.is_certified(l):
            return DepthReport(None, "tor", INCONCLUSIVE, {"checked": checked, "cap": cap})
        checked.append(l)
        if not D.vanishes(l):
            return DepthReport(ext(l), "tor", EXACT, {"checked": checked,
                                                      "mode": "certificate" if candidate is not None
                                                      else "search"})
    if D.complete:
        T = D.complex
        rest = [l for l in range(max(stop + 1, T.lo), T.hi + 1) if not D.vanishes(l)]
        if not rest:
            return DepthReport(POS_INF, "tor", EXACT, {"checked": checked})
        return DepthReport(ext(min(rest)), "tor", EXACT, {"checked": checked})
    return DepthReport(None, "tor", INCONCLUSIVE, {"checked": checked, "cap": cap})


# -- local cohomology as a colimit of Ext ------------------------------------

def comparison_map(F_big, F_small, length: int):
    """Lift the identity on degree 0 to a chain map between resolutions of cyclic modules.

    ``F_big`` resolves ``R/J`` and ``F_small`` resolves ``R/I`` with ``J`` inside ``I``.
    """
    ring = F_big.ring
    pr = ring.poly_ring
    maps = {0: Matrix.identity(pr, 1)}
    for k in range(1, length + 1):
        rb = F_big.rank(k)
        rs = F_small.rank(k)
        if rb == 0:
            break
        if rs == 0:
            maps[k] = Matrix.zeros(pr, 0, rb)
            continue
        prev = maps.get(k - 1)
        aug = augmented_basis(ring, F_small.rank(k - 1), F_small.diff(k).columns())
        cols = []
        dcols = F_big.diff(k).columns()
        for c in dcols:
            v = prev.apply(c)
            v = tuple(ring.reduce(p) for p in v)
            lift = aug.lift(v)
            if lift is None:
                raise ArithmeticError("comparison map does not lift")
            cols.append(lift)
        maps[k] = Matrix.from_columns(pr, rs, cols)
    return maps


def hom_precompose(phi: dict, F_big, F_small, C, H_small, H_big) -> ChainMap:
    """``Hom(F_small, C) -> Hom(F_big, C)``, ``f -> f o phi``."""
    pr = C.ring.poly_ring
    maps = {}
    for n in range(H_small.lo, H_small.hi + 1):
        src_total = H_small.rank(n)
        tgt_total = H_big.rank(n)
        if not src_total or not tgt_total:
            continue
        rows = [[pr.zero] * src_total for _ in range(tgt_total)]
        # offsets of Hom(F_j, C_{j+n}) blocks in both complexes
        def offsets(F):
            out, off = {}, 0
            for j in range(F.lo, F.hi + 1):
                a, b = F.rank(j), C.rank(j + n)
                if a and b:
                    out[j] = off
                    off += a * b
            return out
        so, to = offsets(F_small), offsets(F_big)
        for j, s0 in so.items():
            if j not in to or j not in phi:
                continue
            t0 = to[j]
            m = phi[j]
            nc = C.rank(j + n)
            for a2 in range(F_big.rank(j)):
                for a in range(F_small.rank(j)):
                    e = m.rows[a][a2]
                    if e:
                        for b in range(nc):
                            rows[t0 + a2 * nc + b][s0 + a * nc + b] = e
        maps[n] = Matrix(pr, tgt_total, src_total, rows)
    return ChainMap(H_small, H_big, maps, check=False)


def depth_lc(a_gens, C, n_max: int = 4, cap: int = 24, slack: int = 2) -> DepthReport:
    """Least ``i`` with ``colim_m Ext^i(R/a^m, C) != 0``.

    Indices where ``Ext^j(R/a, C) = 0`` for all ``j <= i`` have
    ``Ext^i(R/a^m, C) = 0`` for every ``m`` by weak sensitivity, so only
    ``m = 1`` is computed there.  At the first index where ``Ext^i(R/a, C)``
    is nonzero the system ``E_m = Ext^i(R/a^m, C)``, ``m = 1..n_max``, is
    computed with its transition maps; the kernel of ``E_m0 -> E_m`` must
    agree for three consecutive ``m`` before the image of ``E_m0`` in the
    colimit is judged.
    """
    C = as_complex(C)
    ring = C.ring
    gens = _ideal(ring, a_gens)
    _check_proper(ring, gens)
    if C.is_rule():
        return _over_rule(C, lambda X: depth_lc(gens, X, n_max, cap, slack), "depth", "local_cohomology")
    s = sup_inf_amp(C)
    if s.empty:
        return DepthReport(POS_INF, "local_cohomology", EXACT, {"reason": "C is exact"})
    start = -int(s.sup)
    stop = len(gens) - int(s.inf) + slack
    evidence = {"n_max": n_max, "checked": []}
    system: dict = {}

    def build(m, length):
        key = (m, length)
        if key not in system:
            I_m = ideal_power(ring, gens, m)
            r = resolve(PresentedModule.cyclic(ring, I_m), length)
            system[key] = (r, hom_complex(r.complex, C))
        return system[key]

    def certified(r, i):
        return r.complete or -i >= C.hi - r.length + 1

    below_certified = True
    for i in range(start, stop + 1):
        length = min(max(C.hi + i + 1, 1), cap)
        r1, H1 = build(1, length)
        if not certified(r1, i):
            return DepthReport(None, "local_cohomology", INCONCLUSIVE, {**evidence, "reason": "resolution cap"})
        if below_certified and homology_vanishes(H1, -i):
            evidence["checked"].append({"i": i, "Ext_R/a": 0})
            continue
        below_certified = False
        # Boundaries of Hom(F, C) in degree -i only involve F_j with j <= C.hi + i.
        short = min(max(C.hi + i, 1), cap)
        verdict = _colimit_image(ring, C, -i, n_max, r1, H1, lambda m: build(m, short))
        evidence["checked"].append({"i": i, **verdict})
        if verdict["status"] == "unstable":
            return DepthReport(None, "local_cohomology", INCONCLUSIVE, {**evidence, "reason": "no stabilization"})
        if verdict["status"] == "nonzero":
            return DepthReport(ext(i), "local_cohomology", EXACT, evidence)
    r1, _ = build(1, min(max(C.hi + stop + 1, 1), cap))
    if r1.complete and below_certified:
        return DepthReport(POS_INF, "local_cohomology", EXACT, evidence)
    return DepthReport(None, "local_cohomology", INCONCLUSIVE, {**evidence, "reason": "search range"})


def _colimit_image(ring, C, deg, n_max, r1, H1, build):
    """Judge the image of ``E_1 = H_deg Hom(F^1, C)`` in the colimit over ``m``.

    The kernel of ``E_1 -> E_m`` is computed as the combinations of the cycle
    representatives of ``E_1`` whose image lies in the boundaries of
    ``Hom(F^m, C)``; it must agree for three consecutive ``m``.
    """
    E1 = homology_at(H1, deg)
    reps = E1.reps
    r = len(reps)
    if r == 0 or E1.is_zero():
        return {"status": "zero", "m0": 1}
    prev_res, psi = r1, None
    kernels = []
    for m in range(2, n_max + 1):
        rm, Hm = build(m)
        if not (rm.complete or deg >= C.hi - rm.length):
            return {"status": "unstable", "m0": 1, "reason": "resolution cap"}
        phi = comparison_map(rm.complex, prev_res.complex, rm.length)
        if psi is None:
            psi = phi
        else:
            psi = {j: psi[j] @ phi[j] for j in phi if j in psi}
        prev_res = rm
        chain = hom_precompose(psi, rm.complex, r1.complex, C, H1, Hm)
        M = chain.at(deg)
        rank = Hm.rank(deg)
        if rank == 0:
            kernels.append(None)
        else:
            imgs = [tuple(ring.reduce(p) for p in M.apply(v)) for v in reps]
            B = boundaries(Hm, deg)
            syz = syzygy_vectors(ring, rank, imgs + B)
            kernels.append([tuple(z[:r]) for z in syz if any(z[:r])])
        if len(kernels) >= 3 and _same_kernel(ring, r, kernels[-1], kernels[-2]) \
                and _same_kernel(ring, r, kernels[-2], kernels[-3]):
            K = kernels[-1]
            if K is None:
                everything = True
            elif not K:
                everything = False
            else:
                pr = ring.poly_ring
                sb = submodule_basis(ring, r, K)
                everything = all(sb.contains(tuple(pr.one if t == j else pr.zero for t in range(r)))
                                 for j in range(r))
            return {"status": "zero" if everything else "nonzero", "m0": 1, "stable_from": m - 2}
    return {"status": "unstable", "m0": 1}


def _same_kernel(ring, r, A, B) -> bool:
    if A is None or B is None:
        return A is None and B is None
    if not A or not B:
        return not A and not B
    sa, sb = submodule_basis(ring, r, A), submodule_basis(ring, r, B)
    return all(sa.contains(v) for v in B) and all(sb.contains(v) for v in A)


# -- depth at a prime -------------------------------------------------------

def ideal_contains(ring, ideal_gens, p) -> bool:
    gb = ideal_groebner_basis(ring.poly_ring, list(ring.ideal) + list(ideal_gens))
    return not reduce_poly(p, gb)


def depth_at_prime(p_gens, C) -> DepthReport:
    """``depth`` of ``C`` localized at the prime ``p``: ``n - max{i : Ann H_i(K(p) (x) C) in p}``."""
    C = as_complex(C)
    ring = C.ring
    gens = _ideal(ring, p_gens)
    _check_proper(ring, gens)
    if C.is_rule():
        return _over_rule(C, lambda X: depth_at_prime(gens, X), "depth", "prime")
    K = koszul(gens, ring)
    T = tensor(K, C)
    top = None
    for i in range(T.hi, T.lo - 1, -1):
        H = homology_at(T, i).module
        if H.is_zero():
            continue
        ann = H.annihilator()
        if all(ideal_contains(ring, gens, a) for a in ann):
            top = i
            break
    if top is None:
        return DepthReport(POS_INF, "prime", EXACT, {"n": len(gens)})
    return DepthReport(ext(len(gens) - top), "prime", EXACT, {"n": len(gens), "top": top})
