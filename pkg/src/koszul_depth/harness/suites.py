"""Property suites: each suite turns one theorem into checks on an instance."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..complexes.complex import Complex, SplitComplex
from ..complexes.ops import hom_complex, koszul, se_sequence_check, split_tensor, tensor
from ..derived.functors import FdResult, LowerBoundOnly, fd, ltensor, rhom
from ..derived.resolution import ResolutionError, resolve
from ..groebner.core import krull_dim
from ..groebner.ideals import ideal_contains, ideal_equal, ideal_intersection, ideal_power, ideal_product
from ..homology.extended import NEG_INF, POS_INF, ExtendedInt, ext, ext_max
from ..homology.homology import homology_at, homology_vanishes, sup_inf_amp
from ..homology.modules import PresentedModule, socle_test
from ..homology.oracle import default_bound, oracle_table
from ..invariants.depth import (
    CONDITIONAL, EXACT, INCONCLUSIVE, depth_at_prime, depth_ext, depth_koszul, depth_koszul_coh,
    depth_lc, width_koszul, width_tor,
)
from ..invariants.duality import is_finite_length, matlis_dual
from ..invariants.frobenius import frobenius_pushforward
from .instance import Instance

PASS, FAIL, INC, COND, HYP = "pass", "fail", "inconclusive", "conditional", "hypothesis"


@dataclass
class Check:
    suite: str
    name: str
    status: str
    values: dict = field(default_factory=dict)
    mandatory: bool = True

    def to_json(self):
        return {"suite": self.suite, "check": self.name, "status": self.status,
                "values": _plain(self.values), "mandatory": self.mandatory}


@dataclass
class Report:
    instance: str
    suite: str
    checks: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        mand = [c for c in self.checks if c.mandatory]
        if any(c.status == FAIL for c in mand):
            return FAIL
        if any(c.status == INC for c in mand):
            return INC
        return PASS

    def counts(self) -> dict:
        out = {}
        for c in self.checks:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    def to_json(self):
        return {"instance": self.instance, "suite": self.suite, "status": self.status,
                "counts": self.counts(), "checks": [c.to_json() for c in self.checks]}

    def to_text(self) -> str:
        lines = [f"[{self.status.upper()}] {self.instance} :: {self.suite}"]
        for c in self.checks:
            vals = ", ".join(f"{k}={_fmt(v)}" for k, v in c.values.items())
            tag = "" if c.mandatory else " (info)"
            lines.append(f"  {c.status:<12} {c.name}{tag}" + (f"  [{vals}]" if vals else ""))
        return "\n".join(lines)


def _plain(x):
    if isinstance(x, ExtendedInt):
        return x.to_json()
    if isinstance(x, LowerBoundOnly):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _fmt(v):
    v = _plain(v)
    if isinstance(v, list):
        return "[" + ",".join(str(_fmt(t)) for t in v) + "]"
    return v


def _expected(inst: Instance, key: str):
    e = inst.expect.get(key)
    if e is None:
        return None
    v = e["value"]
    if isinstance(v, int) or v in ("+inf", "-inf"):
        return ext(v)
    return v


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def threads() -> int:
    try:
        return max(1, int(os.environ.get("KOSZUL_DEPTH_THREADS", "1")))
    except ValueError:
        return 1


# -- shared helpers -----------------------------------------------------------

def _is_finite(C) -> bool:
    return isinstance(C, Complex)


def _maximal(inst: Instance):
    return inst.ring.gens()


def _is_maximal(inst: Instance, gens) -> bool:
    return ideal_equal(inst.ring, gens, _maximal(inst))


def _graded_local(inst: Instance, gens) -> bool:
    R = inst.ring
    return R.graded and all((not g) or (g.is_homogeneous() and g.degree() > 0) for g in gens)


def _resolvable(C) -> bool:
    if not isinstance(C, Complex):
        return False
    return C.is_free or len(C.modules) <= 1 or all(d.is_zero() for d in C.diffs.values())


def derived_tensor(A, B, cap: int):
    """``A (x)^L B`` as a concrete complex, or ``None`` when it cannot be certified completely.

    ``B`` may be a rule complex; ``A`` must be resolvable.
    """
    if not _resolvable(A):
        return None
    if isinstance(B, Complex) and (B.is_free or A.is_free):
        return tensor(A, B)
    res = resolve(A, cap)
    if not res.complete:
        return None
    if isinstance(B, Complex):
        return tensor(res.complex, B)
    return split_tensor(B, res.complex)


def full_ltensor(A, B, cap: int):
    """``A (x)^L B`` with ``A`` resolved as far as ``cap`` allows."""
    A, B = _as_complex(A), _as_complex(B)
    if A.is_empty or B.is_empty:
        return ltensor(A, B, None, cap)
    return ltensor(A, B, (A.lo + B.lo, A.hi + B.hi + cap), cap)


def full_rhom(A, B, cap: int):
    A, B = _as_complex(A), _as_complex(B)
    if A.is_empty or B.is_empty:
        return rhom(A, B, None, cap)
    return rhom(A, B, (B.lo - A.hi - cap, B.hi - A.lo), cap)


def _as_complex(X):
    return Complex.from_module(X) if isinstance(X, PresentedModule) else X


def certified_sup(D) -> ExtendedInt | None:
    H = D.complex
    if H.is_empty:
        return NEG_INF
    lo_cert = D.certified[0]
    for i in range(H.hi, H.lo - 1, -1):
        if not D.is_certified(i):
            return None
        if not D.vanishes(i):
            return ext(i)
    return NEG_INF if lo_cert <= H.lo else None


def certified_inf(D) -> ExtendedInt | None:
    H = D.complex
    if H.is_empty:
        return POS_INF
    for i in range(H.lo, H.hi + 1):
        if not D.is_certified(i):
            return None
        if not D.vanishes(i):
            return ext(i)
    return POS_INF if D.certified[1] >= H.hi else None


def _routes(gens, C, caps):
    fns = [
        lambda: depth_koszul(gens, C),
        lambda: depth_koszul_coh(gens, C),
        lambda: depth_ext(gens, C, cap=caps["resolution_length"]),
        lambda: depth_lc(gens, C, n_max=caps["lc_n_max"], cap=caps["resolution_length"]),
    ]
    n = threads()
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            futures = [pool.submit(f) for f in fns]
            return [f.result() for f in futures]
    return [f() for f in fns]


def _agreement(reports, expected=None):
    vals = [r.value for r in reports]
    certs = [r.certainty for r in reports]
    exact_vals = {v for v, c in zip(vals, certs) if c == EXACT}
    if len(exact_vals) > 1:
        return FAIL
    if any(c == INCONCLUSIVE for c in certs):
        return INC
    if len({v for v in vals}) > 1:
        return FAIL
    if expected is not None and vals[0] != expected:
        return FAIL
    if any(c == CONDITIONAL for c in certs):
        return COND
    return PASS


# -- suites ---------------------------------------------------------------------

def suite_theorem_i(inst: Instance, rep: Report):
    for a, c in inst.pairs():
        C = inst.complex(c)
        gens = inst.ideal(a)
        t = time.perf_counter()
        reports = _routes(gens, C, inst.caps)
        rep.timings[f"depth[{a},{c}]"] = round(time.perf_counter() - t, 4)
        expected = _expected(inst, f"depth[{a},{c}]")
        values = {r.route: r.value for r in reports}
        values["certainty"] = [r.certainty for r in reports]
        if expected is not None:
            values["expected"] = expected
        rep.checks.append(Check("theorem-I", f"depth[{a},{c}] four routes", _agreement(reports, expected), values))


def suite_oracle(inst: Instance, rep: Report):
    bound_cap = inst.caps.get("oracle_bound")
    targets = [(c, inst.complex(c)) for c in sorted(inst.complexes_data)]
    for a, c in inst.pairs():
        C = inst.complex(c)
        if _is_finite(C):
            targets.append((f"K({a})x{c}", tensor(koszul(inst.ideal(a), inst.ring), C)))
    for name, C in targets:
        if not _is_finite(C) or not C.graded or C.is_empty:
            continue
        bound = bound_cap if bound_cap is not None else max(default_bound(C, 2), 8)
        bad = []
        tables = oracle_table(C, bound)
        for i in range(C.lo, C.hi + 1):
            H = homology_at(C, i).module
            for d, dim in tables[i].items():
                if (H.hilbert_function(d) if H.ngens else 0) != dim:
                    bad.append((i, d))
        rep.checks.append(Check("oracle", f"{name} Hilbert functions through degree {bound}",
                                _verdict(not bad and bound >= 8), {"bound": bound, "mismatches": bad}))


def suite_width(inst: Instance, rep: Report):
    for a, c in inst.pairs():
        C = inst.complex(c)
        gens = inst.ideal(a)
        r1 = width_koszul(gens, C)
        r2 = width_tor(gens, C, cap=inst.caps["resolution_length"])
        rep.checks.append(Check("width", f"width[{a},{c}] koszul = tor", _agreement([r1, r2]),
                                {"koszul": r1.value, "tor": r2.value}))


def suite_les(inst: Instance, rep: Report):
    elems = inst.params.get("elements")
    R = inst.ring
    for c in sorted(inst.complexes_data):
        C = inst.complex(c)
        if not _is_finite(C):
            continue
        xs = elems if elems is not None else [str(g) for g in R.gens()[:2]] + ["0"]
        for x in xs:
            r = se_sequence_check(C, R.parse(x))
            rep.checks.append(Check("les", f"long exact sequence for {x} on {c}", _verdict(r.exact),
                                    {"positions": len(r.checks)}))


def _kills(gens, H: PresentedModule) -> bool:
    for g in gens:
        for j in range(H.ngens):
            v = tuple(g * p for p in H.unit_vector(j))
            if not H.is_zero_element(v):
                return False
    return True


def suite_annihilation(inst: Instance, rep: Report):
    for a, c in inst.pairs():
        C = inst.complex(c)
        if not _is_finite(C):
            continue
        gens = inst.ideal(a)
        K = koszul(gens, inst.ring)
        ok = True
        for X in (tensor(K, C), hom_complex(K, C)):
            for i in range(X.lo, X.hi + 1):
                H = homology_at(X, i).module
                if H.ngens and not _kills(gens, H):
                    ok = False
        rep.checks.append(Check("annihilation", f"({a}) kills H(K x {c}) and H(Hom(K,{c}))", _verdict(ok)))


def suite_koszul_bounds(inst: Instance, rep: Report):
    for a, c in inst.pairs():
        C = inst.complex(c)
        gens = inst.ideal(a)
        if not _is_finite(C) or not _graded_local(inst, gens) or not C.graded:
            rep.checks.append(Check("koszul-bounds", f"{a},{c}", HYP, {"reason": "not graded-local"}, False))
            continue
        n = len(gens)
        K = koszul(gens, inst.ring)
        s = sup_inf_amp(C)
        t = sup_inf_amp(tensor(K, C))
        h = sup_inf_amp(hom_complex(K, C))
        ok = s.sup <= t.sup <= s.sup + n and t.inf == s.inf
        dual = t.sup == h.sup + n
        vals = {"sup C": s.sup, "sup KxC": t.sup, "inf C": s.inf, "inf KxC": t.inf, "n": n}
        rep.checks.append(Check("koszul-bounds", f"sup/inf bounds K({a}) x {c}", _verdict(ok), vals))
        rep.checks.append(Check("koszul-bounds", f"self-duality K({a}) on {c}", _verdict(dual),
                                {"sup KxC": t.sup, "sup Hom(K,C)": h.sup}))


def suite_accounting(inst: Instance, rep: Report):
    cap = inst.caps["resolution_length"]
    for A_name, B_name in inst.params.get("accounting", []):
        A, B = inst.complex(A_name), inst.complex(B_name)
        label = f"{A_name},{B_name}"
        sA, sB = sup_inf_amp(A), sup_inf_amp(B)
        # (1) inf of the derived tensor product
        D = full_ltensor(A, B, cap)
        inf_t = certified_inf(D)
        if inf_t is None:
            rep.checks.append(Check("accounting", f"(1) {label}", INC))
        else:
            ok = inf_t >= sA.inf + sB.inf if not (sA.empty or sB.empty) else True
            eq_case = None
            if not sA.empty and not sB.empty:
                HA = homology_at(A, int(sA.inf)).module
                HB = homology_at(B, int(sB.inf)).module
                eq_case = not HA.tensor(HB).is_zero()
                if eq_case:
                    ok = ok and inf_t == sA.inf + sB.inf
            rep.checks.append(Check("accounting", f"(1) inf {label}", _verdict(ok),
                                    {"inf": inf_t, "inf A + inf B": sA.inf + sB.inf if not (sA.empty or sB.empty)
                                     else None, "equality case": eq_case}))
        # (2) sup against fd
        fB = fd(B, cap)
        sup_t = certified_sup(D) if D.complete else None
        if not fB.exact:
            rep.checks.append(Check("accounting", f"(2) sup {label}", HYP, {"fd B": fB.value}, False))
        elif sup_t is None:
            rep.checks.append(Check("accounting", f"(2) sup {label}", INC))
        else:
            rep.checks.append(Check("accounting", f"(2) sup {label}", _verdict(sup_t <= sA.sup + fB.value),
                                    {"sup": sup_t, "sup A + fd B": sA.sup + fB.value}))
        # (3) and (4) for RHom
        if not _resolvable(A):
            continue
        H = full_rhom(A, B, cap)
        sup_h = certified_sup(H)
        if sup_h is None:
            rep.checks.append(Check("accounting", f"(3) sup RHom {label}", INC))
            continue
        ok3 = True
        eq3 = None
        if not (sA.empty or sB.empty):
            ok3 = sup_h <= sB.sup - sA.inf
            HA = homology_at(A, int(sA.inf)).module
            HB = homology_at(B, int(sB.sup)).module
            hom0 = rhom(HA, HB, (0, 0), cap)
            eq3 = not hom0.vanishes(0)
            if eq3:
                ok3 = ok3 and sup_h == sB.sup - sA.inf
        rep.checks.append(Check("accounting", f"(3) sup RHom {label}", _verdict(ok3),
                                {"sup": sup_h, "equality case": eq3}))
        if sA.empty:
            continue
        bound = NEG_INF
        unknown = False
        for l in range(int(sA.inf), int(sA.sup) + 1):
            Hl = homology_at(A, l).module
            if Hl.is_zero():
                continue
            v = certified_sup(full_rhom(Hl, B, cap))
            if v is None:
                unknown = True
                break
            bound = max(bound, v - l)
        if unknown:
            rep.checks.append(Check("accounting", f"(4) sup RHom {label}", INC))
        else:
            rep.checks.append(Check("accounting", f"(4) sup RHom {label}", _verdict(sup_h <= bound),
                                    {"sup": sup_h, "bound": bound}))


def _torsion_exponent(inst, gens, X, limit: int = 8):
    """Least ``d`` with ``a^d H(X) = 0``, or ``None``."""
    s = sup_inf_amp(X)
    if s.empty:
        return 1
    for d in range(1, limit + 1):
        power = ideal_power(inst.ring, gens, d)
        ok = True
        for l in range(int(s.inf), int(s.sup) + 1):
            H = homology_at(X, l).module
            if not H.ngens:
                continue
            if not _kills(power, H):
                ok = False
                break
        if ok:
            return d
    return None


def suite_weak_sensitivity(inst: Instance, rep: Report):
    cap = inst.caps["resolution_length"]
    for a, X_name, M_name in inst.params.get("weak", []):
        gens = inst.ideal(a)
        X, M = inst.complex(X_name), inst.complex(M_name)
        label = f"{a},{X_name},{M_name}"
        d = _torsion_exponent(inst, gens, X)
        sX = sup_inf_amp(X)
        if d is None or sX.empty:
            rep.checks.append(Check("weak-sensitivity", label, HYP, {"reason": "not a-torsion"}, False))
            continue
        A = PresentedModule.cyclic(inst.ring, gens)
        lhs = certified_sup(full_rhom(X, M, cap))
        rhs = certified_sup(full_rhom(A, M, cap))
        if lhs is None or rhs is None:
            rep.checks.append(Check("weak-sensitivity", f"depth {label}", INC))
        else:
            rep.checks.append(Check("weak-sensitivity", f"depth {label}", _verdict(lhs <= rhs - sX.inf),
                                    {"sup RHom(X,M)": lhs, "sup RHom(R/a,M)": rhs, "inf X": sX.inf, "d": d}))
        lhs = certified_inf(full_ltensor(X, M, cap))
        rhs = certified_inf(full_ltensor(A, M, cap))
        if lhs is None or rhs is None:
            rep.checks.append(Check("weak-sensitivity", f"width {label}", INC))
        else:
            rep.checks.append(Check("weak-sensitivity", f"width {label}", _verdict(lhs >= rhs + sX.inf),
                                    {"inf XxM": lhs, "inf R/a x M": rhs, "inf X": sX.inf}))


def suite_amplitude(inst: Instance, rep: Report):
    cap = inst.caps["resolution_length"]
    for M_name, F_name in inst.params.get("amplitude", []):
        M, F = inst.complex(M_name), inst.complex(F_name)
        label = f"{M_name},{F_name}"
        sF = sup_inf_amp(F)
        fF = fd(F, cap)
        if sF.empty or not sF.sup.is_finite or not fF.exact:
            rep.checks.append(Check("amplitude", label, HYP, {"fd F": fF.value}, False))
            continue
        T = derived_tensor(F, M, cap)
        if T is None:
            rep.checks.append(Check("amplitude", label, INC))
            continue
        sM, sT = sup_inf_amp(M), sup_inf_amp(T)
        ok_sup = sM.sup + sF.inf <= sT.sup
        ok_inf = sM.inf + sF.inf == sT.inf
        ok_amp = sM.amp <= sT.amp
        shape = "equal" if sM.amp == sT.amp else "strict"
        status = _verdict(ok_sup and ok_inf and ok_amp)
        if status == PASS and (sM.certainty != EXACT or sT.certainty != EXACT):
            status = COND
        rep.checks.append(Check("amplitude", f"sup/inf/amp {label}", status,
                                {"sup M": sM.sup, "inf M": sM.inf, "inf F": sF.inf, "sup MxF": sT.sup,
                                 "inf MxF": sT.inf, "amp M": sM.amp, "amp MxF": sT.amp, "amp": shape}))


def suite_auslander_buchsbaum(inst: Instance, rep: Report):
    cap = inst.caps["resolution_length"]
    m = _maximal(inst)
    R = inst.ring
    k = PresentedModule.residue_field(R)
    for M_name, P_name in inst.params.get("ab", []):
        M, P = inst.complex(M_name), inst.complex(P_name)
        label = f"{M_name},{P_name}"
        sP = sup_inf_amp(P)
        fP = fd(P, cap)
        if sP.empty or not sP.sup.is_finite or not sP.inf.is_finite or not fP.exact:
            rep.checks.append(Check("auslander-buchsbaum", label, HYP, {"fd P": fP.value}, False))
            continue
        T = derived_tensor(P, M, cap)
        if T is None:
            rep.checks.append(Check("auslander-buchsbaum", label, INC))
            continue
        kP = derived_tensor(P, Complex.from_module(k), cap)
        sup_kP = sup_inf_amp(kP).sup
        dM = depth_koszul(m, M)
        dT = depth_koszul(m, T)
        ok = dT.value == dM.value - sup_kP
        status = _verdict(ok)
        if ok and (dM.certainty != EXACT or dT.certainty != EXACT):
            status = COND
        rep.checks.append(Check("auslander-buchsbaum", f"depth(M x P) = depth M - sup(k x P) {label}", status,
                                {"depth MxP": dT.value, "depth M": dM.value, "sup kxP": sup_kP,
                                 "fd P": fP.value}))


def suite_fd_chain(inst: Instance, rep: Report):
    cap = inst.caps["resolution_length"]
    Q = inst.ring
    J = [Q.parse(g) for g in inst.params["chain"]["J"]]
    J2 = [Q.parse(g) for g in inst.params["chain"]["J2"]]
    R = Q.quotient(J)
    fQR = fd(PresentedModule.cyclic(Q, J), cap)
    fRF = fd(PresentedModule.cyclic(R, J2), cap)
    F_Q = PresentedModule.cyclic(Q, J + J2)
    fQF = fd(F_Q, cap)
    infF = ext(0) if not F_Q.is_zero() else POS_INF
    vals = {"fd_Q R": fQR.value, "fd_R F": fRF.value, "fd_Q F": fQF.value, "inf F": infF}
    for key, val in (("fd_Q[R]", fQR.value), ("fd_R[F]", fRF.value), ("fd_Q[F]", fQF.value), ("inf[F]", infF)):
        e = _expected(inst, key)
        if e is not None:
            rep.checks.append(Check("fd-chain", f"{key} = {_fmt(e)}", _verdict(val == e), {"value": val}))
    if not fRF.exact:
        rep.checks.append(Check("fd-chain", "chain inequalities", HYP, vals, False))
        return
    if not (fQR.exact and fQF.exact):
        rep.checks.append(Check("fd-chain", "chain inequalities", INC, vals))
        return
    ok = fQR.value + infF <= fQF.value <= fQR.value + fRF.value
    rep.checks.append(Check("fd-chain", "fd_Q R + inf F <= fd_Q F <= fd_Q R + fd_R F", _verdict(ok), vals))


def suite_frobenius(inst: Instance, rep: Report):
    fp = inst.params.get("frobenius", {})
    e = int(fp.get("e", 1))
    lo, hi = fp.get("tor_range", [1, 12])
    R = inst.ring
    Fm = frobenius_pushforward(R, e)
    r = fd(Fm, cap=max(hi, inst.caps["fd_cap"]))
    nz = set(r.tor_nonzero)
    regular = bool(fp.get("regular", R.is_polynomial))
    if regular != R.is_polynomial:
        rep.checks.append(Check("theorem-V", "regularity flag", FAIL, {"flag": regular}))
    if regular:
        ok = r.exact and r.value == 0 and not any(i in nz for i in range(lo, hi + 1))
        rep.checks.append(Check("theorem-V", f"phi^{e}_* R free (fd 0, Tor_i = 0 for {lo}<=i<={hi})",
                                _verdict(ok), {"fd": r.value, "tor_nonzero": sorted(nz), "rank": Fm.ngens}))
    else:
        ok = (not r.exact) and all(i in nz for i in range(lo, hi + 1))
        rep.checks.append(Check("theorem-V", f"Tor_i(k, phi^{e}_* R) != 0 for {lo}<=i<={hi}: not finite at cap",
                                _verdict(ok), {"fd": r.value, "tor_nonzero": sorted(nz)}))
    exp = inst.expect.get("fd[frobenius]")
    if exp is not None:
        want = exp["value"]
        got = r.value.to_json() if r.exact else "not-finite-at-cap"
        rep.checks.append(Check("theorem-V", "expected classification", _verdict(got == want), {"value": got}))


def suite_example_26(inst: Instance, rep: Report):
    M = inst.complex("M")
    w = int(inst.params.get("window", 5))
    for d in range(w + 1):
        gens = inst.ideal(f"a{d}")
        reports = _routes(gens, M, inst.caps)
        exp = _expected(inst, f"depth[a{d},M]")
        rep.checks.append(Check("example-2.6", f"depth_(t-{d}) M = {-d}", _agreement(reports, exp),
                                {r.route: r.value for r in reports}))
    reports = _routes(inst.ideal("zero"), M, inst.caps)
    rep.checks.append(Check("example-2.6", "depth_(0) M = -inf", _agreement(reports, NEG_INF),
                            {r.route: r.value for r in reports}))
    s = sup_inf_amp(M)
    rep.checks.append(Check("example-2.6", "sup M = +inf", COND if s.sup == POS_INF else FAIL, {"sup": s.sup}))
    # The infimum over primes is not attained: every listed prime gives a finite local depth.
    loc = [depth_at_prime(inst.prime(p), M).value for p in sorted(inst.primes)]
    rep.checks.append(Check("example-2.6", "local depths finite while depth_(0) M = -inf",
                            _verdict(all(v.is_finite for v in loc)), {"local": loc}, mandatory=False))


def suite_infinity(inst: Instance, rep: Report):
    for a, c in inst.pairs():
        gens = inst.ideal(a)
        if not _graded_local(inst, gens):
            rep.checks.append(Check("infinity", f"{a},{c}", HYP, {"reason": "not graded-local"}, False))
            continue
        C = inst.complex(c)
        s = sup_inf_amp(C)
        d = depth_koszul(gens, C)
        w = width_koszul(gens, C)
        ok = ((d.value == NEG_INF) == (s.sup == POS_INF)) and ((d.value == POS_INF) == (s.sup == NEG_INF)) \
            and ((w.value == POS_INF) == (s.inf == POS_INF)) and ((w.value == NEG_INF) == (s.inf == NEG_INF))
        status = _verdict(ok)
        if ok and (d.certainty != EXACT or s.certainty != EXACT):
            status = COND
        rep.checks.append(Check("infinity", f"+-inf characterizations {a},{c}", status,
                                {"depth": d.value, "sup": s.sup, "width": w.value, "inf": s.inf}))


def suite_duality(inst: Instance, rep: Report):
    for name in inst.params.get("duality", []):
        C = inst.complex(name)
        if not isinstance(C, Complex) or len(C.modules) != 1:
            rep.checks.append(Check("duality", name, HYP, {"reason": "not a module"}, False))
            continue
        (deg, M), = C.modules.items()
        if not M.graded or not is_finite_length(M):
            rep.checks.append(Check("duality", name, HYP, {"reason": "not graded finite length"}, False))
            continue
        D = Complex.from_module(matlis_dual(M), -deg)
        for a in sorted(inst.ideals):
            gens = inst.ideal(a)
            if not _graded_local(inst, gens):
                continue
            d1, w1 = depth_koszul(gens, C).value, width_koszul(gens, D).value
            w2, d2 = width_koszul(gens, C).value, depth_koszul(gens, D).value
            rep.checks.append(Check("duality", f"depth_{a} {name} = width_{a} dual", _verdict(d1 == w1),
                                    {"depth": d1, "width dual": w1}))
            rep.checks.append(Check("duality", f"width_{a} {name} = depth_{a} dual", _verdict(w2 == d2),
                                    {"width": w2, "depth dual": d2}))


def suite_width_additivity(inst: Instance, rep: Report):
    cap = inst.caps["resolution_length"]
    m = _maximal(inst)
    for M_name, N_name in inst.params.get("additivity", []):
        M, N = inst.complex(M_name), inst.complex(N_name)
        T = derived_tensor(M, N, cap)
        if T is None:
            rep.checks.append(Check("width-additivity", f"{M_name},{N_name}", INC))
            continue
        lhs = width_koszul(m, T).value
        wm, wn = width_koszul(m, M).value, width_koszul(m, N).value
        rep.checks.append(Check("width-additivity", f"width(M x N) = width M + width N {M_name},{N_name}",
                                _verdict(lhs == wm + wn), {"width MxN": lhs, "width M": wm, "width N": wn}))
    for M_name, N_name in inst.params.get("rhom_additivity", []):
        M, N = inst.complex(M_name), inst.complex(N_name)
        if not _resolvable(M):
            rep.checks.append(Check("width-additivity", f"RHom {M_name},{N_name}", HYP, {}, False))
            continue
        D = full_rhom(M, N, cap)
        if not D.complete:
            rep.checks.append(Check("width-additivity", f"RHom {M_name},{N_name}", INC))
            continue
        lhs = depth_koszul(m, D.complex).value
        wm, dn = width_koszul(m, M).value, depth_koszul(m, N).value
        rep.checks.append(Check("width-additivity", f"depth RHom(M,N) = width M + depth N {M_name},{N_name}",
                                _verdict(lhs == wm + dn), {"depth RHom": lhs, "width M": wm, "depth N": dn}))


def _redundant_lists(R, gens):
    gens = [g for g in gens if g]
    if not gens:
        return []
    out = [list(reversed(gens)), gens + [gens[0]], [R.reduce(2 * g) for g in gens]]
    if len(gens) >= 2:
        out.append(gens + [R.reduce(gens[0] + gens[1])])
        out.append(gens[:1] + [R.reduce(gens[1] + gens[0] * gens[0])] + gens[2:])
    else:
        out.append(gens + [R.reduce(gens[0] * gens[0])])
    return out


def suite_generator_independence(inst: Instance, rep: Report):
    R = inst.ring
    for a, c in inst.pairs():
        C = inst.complex(c)
        gens = inst.ideal(a)
        base = depth_koszul(gens, C).value
        alts = _redundant_lists(R, gens)
        vals = [depth_koszul(g, C).value for g in alts]
        rep.checks.append(Check("generator-independence", f"depth_koszul[{a},{c}] over {len(alts)} generating lists",
                                _verdict(all(v == base for v in vals)), {"base": base, "others": vals}))
        if not (_is_finite(C) and C.graded and _graded_local(inst, gens)) or not base.is_finite:
            continue
        # Top Koszul homology does not depend on the generating list up to the
        # twist by the degrees of the extra generators.
        def top_hf(g):
            T = tensor(koszul(g, R), C)
            s = sup_inf_amp(T).sup
            H = homology_at(T, int(s)).module
            return {d: H.hilbert_function(d) for d in range(-6, 13)}
        base_deg = sum(g.degree() for g in gens)
        ref = top_hf(gens)
        same = True
        for g in alts:
            if not all(h.is_homogeneous() for h in g):
                continue
            tw = sum(h.degree() for h in g) - base_deg
            hf = top_hf(g)
            same = same and all(hf[d] == ref[d - tw] for d in range(-6 + max(tw, 0), 13 + min(tw, 0)))
        rep.checks.append(Check("generator-independence", f"top Koszul homology [{a},{c}]",
                                _verdict(same), {"hilbert": [ref[d] for d in range(-2, 9)]}))


def suite_depth_comparisons(inst: Instance, rep: Report):
    R = inst.ring
    m = _maximal(inst)
    for a, b, c in inst.params.get("compare", []):
        C = inst.complex(c)
        A, B = inst.ideal(a), inst.ideal(b)
        da, db = depth_koszul(A, C).value, depth_koszul(B, C).value
        dab = depth_koszul(ideal_product(R, A, B) or [R.zero], C).value
        dcap = depth_koszul(ideal_intersection(R, A, B) or [R.zero], C).value
        rep.checks.append(Check("depth-comparisons", f"depth ab = depth a∩b = min ({a},{b},{c})",
                                _verdict(dab == dcap == min(da, db)),
                                {"ab": dab, "cap": dcap, "a": da, "b": db}))
        d2 = depth_koszul(ideal_power(R, A, 2), C).value
        rep.checks.append(Check("depth-comparisons", f"depth {a} = depth {a}^2 on {c}", _verdict(da == d2),
                                {"a": da, "a^2": d2}))
        if _graded_local(inst, A):
            dm = depth_koszul(m, C).value
            dim = krull_dim(R.quotient(A))
            ok = dm <= da + dim
            rep.checks.append(Check("depth-comparisons", f"depth_m {c} <= depth_{a} + dim R/{a}", _verdict(ok),
                                    {"m": dm, "a": da, "dim": dim}))


def suite_locality(inst: Instance, rep: Report):
    R = inst.ring
    for a, c, primes in inst.params.get("locality", []):
        C = inst.complex(c)
        A = inst.ideal(a)
        bad = [p for p in primes if not all(ideal_contains(R, inst.primes[p], g) for g in A)]
        if bad:
            rep.checks.append(Check("locality", f"{a},{c}", HYP, {"primes not containing a": bad}, False))
            continue
        loc = {p: depth_at_prime(inst.prime(p), C).value for p in primes}
        d = depth_koszul(A, C).value
        rep.checks.append(Check("locality", f"depth_{a} {c} = min over primes", _verdict(d == min(loc.values())),
                                {"depth": d, "local": loc}))


def suite_lower_bound(inst: Instance, rep: Report):
    m = _maximal(inst)
    for a, c in inst.pairs():
        if not _is_maximal(inst, inst.ideal(a)):
            continue
        C = inst.complex(c)
        if not _is_finite(C):
            continue
        s = sup_inf_amp(C)
        if not s.sup.is_finite:
            continue
        d = depth_koszul(m, C).value
        soc = socle_test(homology_at(C, int(s.sup)).module, m)
        ok = d >= -s.sup and ((d == -s.sup) == soc)
        rep.checks.append(Check("lower-bound", f"depth {c} >= -sup, equality iff socle", _verdict(ok),
                                {"depth": d, "sup": s.sup, "socle": soc}))


def _is_torsion(H: PresentedModule) -> bool:
    return H.is_zero() or is_finite_length(H)


def suite_upper_bound(inst: Instance, rep: Report):
    m = _maximal(inst)
    dimR = krull_dim(inst.ring)
    for a, c in inst.pairs():
        if not _is_maximal(inst, inst.ideal(a)):
            continue
        C = inst.complex(c)
        if not _is_finite(C):
            continue
        d = depth_koszul(m, C).value
        found = False
        for s in range(C.lo, C.hi + 1):
            H = homology_at(C, s).module
            if H.is_zero() or not socle_test(H, m):
                continue
            if not all(_is_torsion(homology_at(C, j).module) for j in range(s + 1, s + dimR)):
                continue
            found = True
            rep.checks.append(Check("upper-bound", f"depth {c} <= -{s}", _verdict(d <= -s), {"depth": d, "s": s}))
        if not found:
            rep.checks.append(Check("upper-bound", f"{c}", HYP, {"reason": "no band"}, False))


SUITES = {
    "theorem-I": suite_theorem_i,
    "oracle": suite_oracle,
    "width": suite_width,
    "les": suite_les,
    "annihilation": suite_annihilation,
    "koszul-bounds": suite_koszul_bounds,
    "accounting": suite_accounting,
    "weak-sensitivity": suite_weak_sensitivity,
    "amplitude": suite_amplitude,
    "auslander-buchsbaum": suite_auslander_buchsbaum,
    "fd-chain": suite_fd_chain,
    "theorem-V": suite_frobenius,
    "example-2.6": suite_example_26,
    "infinity": suite_infinity,
    "duality": suite_duality,
    "width-additivity": suite_width_additivity,
    "generator-independence": suite_generator_independence,
    "depth-comparisons": suite_depth_comparisons,
    "locality": suite_locality,
    "lower-bound": suite_lower_bound,
    "upper-bound": suite_upper_bound,
}


class UnknownSuite(KeyError):
    pass


def run_suite(inst: Instance, suite: str) -> Report:
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; known: {', '.join(sorted(SUITES))}")
    rep = Report(inst.name, suite)
    t = time.perf_counter()
    try:
        SUITES[suite](inst, rep)
    except (ResolutionError, ArithmeticError) as exc:
        rep.checks.append(Check(suite, "computation", INC, {"error": str(exc)}))
    rep.timings["total"] = round(time.perf_counter() - t, 4)
    return rep


def run_instances(instances, suite: str = "all") -> list[Report]:
    reports = []
    for inst in instances:
        names = inst.suites if suite == "all" else ([suite] if suite in inst.suites else [])
        for s in names:
            reports.append(run_suite(inst, s))
    return reports
