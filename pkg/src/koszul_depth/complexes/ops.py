"""Constructions on complexes: suspension, truncation, tensor, Hom, Koszul complexes.

Sign conventions:
  suspension   (S^n C)_i = C_{i-n} with differential (-1)^n d
  tensor       d(a (x) b) = da (x) b + (-1)^|a| a (x) db
  Hom          d(f) = d o f - (-1)^|f| f o d
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..algebra.matrix import Matrix
from ..algebra.ring import Ring
from ..homology.modules import PresentedModule, subquotient
from .complex import ChainMap, Complex, ComplexError, RuleComplex, SplitComplex, split_of


def shift(C, n: int):
    """``n``-th suspension."""
    if C.is_rule():
        return C.shift(n)
    if n == 0:
        return C
    sign = -1 if n % 2 else 1
    mods = {i + n: m for i, m in C.modules.items()}
    diffs = {i + n: (d if sign == 1 else -d) for i, d in C.diffs.items()}
    return Complex(C.ring, mods, diffs, check=False)


def _same_ring(C, D):
    if C.ring != D.ring:
        raise ComplexError("complexes over different rings")


def _blocks(C, D, n):
    """Summands ``(i, j)`` of ``(C (x) D)_n`` with their offsets."""
    out = []
    off = 0
    for i in range(C.lo, C.hi + 1):
        j = n - i
        a, b = C.rank(i), D.rank(j)
        if a and b:
            out.append((i, j, off))
            off += a * b
    return out, off


def tensor(C: Complex, D: Complex) -> Complex:
    """Total tensor complex, generators of ``C_i (x) D_j`` indexed ``a * rank(D_j) + b``."""
    _same_ring(C, D)
    ring = C.ring
    pr = ring.poly_ring
    if C.is_empty or D.is_empty:
        return Complex.zero(ring)
    lo, hi = C.lo + D.lo, C.hi + D.hi
    mods = {}
    layout = {}
    for n in range(lo, hi + 1):
        blocks, total = _blocks(C, D, n)
        layout[n] = (blocks, total)
        if total:
            parts = [C.module(i).tensor(D.module(j)) for i, j, _ in blocks]
            mods[n] = parts[0].direct_sum(*parts[1:]) if len(parts) > 1 else parts[0]
    diffs = {}
    for n in range(lo + 1, hi + 1):
        sblocks, stotal = layout[n]
        tblocks, ttotal = layout[n - 1]
        if not stotal or not ttotal:
            continue
        toff = {(i, j): off for i, j, off in tblocks}
        rows = [[pr.zero] * stotal for _ in range(ttotal)]
        for i, j, off in sblocks:
            ci, dj = C.rank(i), D.rank(j)
            # d_C (x) 1 into (i - 1, j)
            if (i - 1, j) in toff:
                dc = C.diff(i)
                t0 = toff[(i - 1, j)]
                for a in range(ci):
                    for a2 in range(dc.nrows):
                        e = dc.rows[a2][a]
                        if e:
                            for b in range(dj):
                                rows[t0 + a2 * dj + b][off + a * dj + b] = e
            # (-1)^i 1 (x) d_D into (i, j - 1)
            if (i, j - 1) in toff:
                dd = D.diff(j)
                t0 = toff[(i, j - 1)]
                nb = D.rank(j - 1)
                sgn = -1 if i % 2 else 1
                for b in range(dj):
                    for b2 in range(dd.nrows):
                        e = dd.rows[b2][b]
                        if e:
                            for a in range(ci):
                                rows[t0 + a * nb + b2][off + a * dj + b] = e if sgn == 1 else -e
        diffs[n] = Matrix(pr, ttotal, stotal, rows)
    return Complex(ring, mods, diffs, check=False)


def hom_complex(C: Complex, D: Complex) -> Complex:
    """``Hom(C, D)`` for a complex ``C`` of free modules.

    ``Hom(C_i, D_{i+n})`` contributes ``rank(C_i)`` copies of ``D_{i+n}``;
    the coordinate of ``e_a^* (x) d_b`` has index ``a * ngens(D_{i+n}) + b``.
    """
    _same_ring(C, D)
    if not C.is_free:
        raise ComplexError("Hom is only built out of a complex of free modules")
    ring = C.ring
    pr = ring.poly_ring
    if C.is_empty or D.is_empty:
        return Complex.zero(ring)
    lo, hi = D.lo - C.hi, D.hi - C.lo

    def blocks(n):
        out, off = [], 0
        for i in range(C.lo, C.hi + 1):
            a, b = C.rank(i), D.rank(i + n)
            if a and b:
                out.append((i, off))
                off += a * b
        return out, off

    mods, layout = {}, {}
    for n in range(lo, hi + 1):
        bl, total = blocks(n)
        layout[n] = (bl, total)
        if total:
            parts = []
            for i, _ in bl:
                Dm = D.module(i + n)
                Ci = C.module(i)
                copies = [Dm] * Ci.ngens
                s = copies[0].direct_sum(*copies[1:]) if len(copies) > 1 else copies[0]
                if s.graded and Ci.graded:
                    degs = [Dm.degrees[b] - Ci.degrees[a] for a in range(Ci.ngens) for b in range(Dm.ngens)]
                    s = PresentedModule(ring, s.ngens, s.relations, degs, check=False)
                else:
                    s = s.ungraded()
                parts.append(s)
            mods[n] = parts[0].direct_sum(*parts[1:]) if len(parts) > 1 else parts[0]
    diffs = {}
    for n in range(lo + 1, hi + 1):
        sbl, stot = layout[n]
        tbl, ttot = layout[n - 1]
        if not stot or not ttot:
            continue
        toff = dict(tbl)
        rows = [[pr.zero] * stot for _ in range(ttot)]
        sign = -1 if n % 2 == 0 else 1  # -(-1)^n
        for i, off in sbl:
            ci = C.rank(i)
            dn = D.rank(i + n)
            # d_D o f : Hom(C_i, D_{i+n}) -> Hom(C_i, D_{i+n-1})
            if i in toff:
                dd = D.diff(i + n)
                t0 = toff[i]
                nb = D.rank(i + n - 1)
                for a in range(ci):
                    for b in range(dn):
                        for b2 in range(nb):
                            e = dd.rows[b2][b]
                            if e:
                                rows[t0 + a * nb + b2][off + a * dn + b] = e
            # -(-1)^n f o d_C : Hom(C_i, D_{i+n}) -> Hom(C_{i+1}, D_{i+n})
            if i + 1 in toff:
                dc = C.diff(i + 1)
                t0 = toff[i + 1]
                for a2 in range(C.rank(i + 1)):
                    for a in range(ci):
                        e = dc.rows[a][a2]
                        if e:
                            for b in range(dn):
                                r = t0 + a2 * dn + b
                                c = off + a * dn + b
                                rows[r][c] = rows[r][c] + (e if sign == 1 else -e)
        diffs[n] = Matrix(pr, ttot, stot, rows)
    return Complex(ring, mods, diffs, check=False)


def koszul(xs, ring: Ring | None = None) -> Complex:
    """Koszul complex on ``xs``: basis of degree ``i`` are the ``i``-subsets, sorted."""
    xs = list(xs)
    if not xs:
        raise ValueError("the Koszul complex needs at least one element")
    if ring is None:
        raise ValueError("a ring is required")
    xs = [ring.parse(x) if isinstance(x, str) else ring.reduce(x) for x in xs]
    n = len(xs)
    pr = ring.poly_ring
    graded = ring.graded and all(x.is_homogeneous() for x in xs)
    wts = [max(x.degree(), 0) for x in xs]
    subsets = {i: list(combinations(range(n), i)) for i in range(n + 1)}
    index = {i: {s: k for k, s in enumerate(subsets[i])} for i in range(n + 1)}
    mods = {}
    for i in range(n + 1):
        degs = [sum(wts[t] for t in s) for s in subsets[i]] if graded else None
        mods[i] = PresentedModule(ring, len(subsets[i]), (), degs, check=False)
    diffs = {}
    for i in range(1, n + 1):
        rows = [[pr.zero] * len(subsets[i]) for _ in range(len(subsets[i - 1]))]
        for c, s in enumerate(subsets[i]):
            for pos, t in enumerate(s):
                face = s[:pos] + s[pos + 1:]
                e = xs[t] if pos % 2 == 0 else -xs[t]
                if e:
                    rows[index[i - 1][face]][c] = e
        diffs[i] = Matrix(pr, len(subsets[i - 1]), len(subsets[i]), rows)
    return Complex(ring, mods, diffs, check=False)


def truncate(C: Complex, mode: str, i: int) -> Complex:
    """Soft truncations.

    ``"above"``: ``... -> C_{i+1} -> Ker(d_i) -> 0`` with the kernel in degree ``i``.
    ``"below"``: ``0 -> Coker(d_{i+1}) -> C_{i-1} -> ...`` with the cokernel in degree ``i``.
    The corner module is returned presented (generators plus relations).
    """
    ring = C.ring
    pr = ring.poly_ring
    if C.is_empty:
        return Complex.zero(ring)
    if mode == "above":
        from ..homology.homology import cycles
        src = C.module(i)
        Z = cycles(C, i)
        sq = subquotient(ring, src.ngens, Z, src.relations, src.degrees)
        corner = sq.module
        mods = {j: C.module(j) for j in range(i + 1, C.hi + 1)}
        mods[i] = corner
        diffs = {j: C.diff(j) for j in range(i + 2, C.hi + 1)}
        if C.rank(i + 1) and corner.ngens:
            cols = [sq.coordinates(c) for c in C.diff(i + 1).columns()]
            diffs[i + 1] = Matrix.from_columns(pr, corner.ngens, cols)
        return Complex(ring, mods, diffs, check=False)
    if mode == "below":
        src = C.module(i)
        rels = list(src.relations) + [c for c in C.diff(i + 1).columns() if any(c)]
        corner = PresentedModule(ring, src.ngens, rels, src.degrees, check=False)
        mods = {j: C.module(j) for j in range(C.lo, i)}
        mods[i] = corner
        diffs = {j: C.diff(j) for j in range(C.lo + 1, i + 1)}
        return Complex(ring, mods, diffs, check=False)
    raise ValueError(f"unknown truncation mode {mode!r}")


def truncation_inclusion(C: Complex, i: int) -> ChainMap:
    """The inclusion of the ``"above"`` truncation at ``i`` into ``C``."""
    T = truncate(C, "above", i)
    from ..homology.homology import homology_at  # noqa: F401
    pr = C.ring.poly_ring
    from ..homology.homology import cycles
    src = C.module(i)
    Z = cycles(C, i)
    sq = subquotient(C.ring, src.ngens, Z, src.relations, src.degrees)
    maps = {j: Matrix.identity(pr, C.rank(j)) for j in range(i + 1, C.hi + 1)}
    if sq.module.ngens:
        maps[i] = Matrix.from_columns(pr, src.ngens, sq.reps)
    return ChainMap(T, C, maps)


def tensor_with_module(C: Complex, M: PresentedModule) -> Complex:
    return tensor(C, Complex.from_module(M))


@dataclass
class LesReport:
    element: str
    exact: bool
    checks: list = field(default_factory=list)


def se_sequence_check(C: Complex, x) -> LesReport:
    """Exactness of ``H_i(C) -x-> H_i(C) -> H_i(K(x) (x) C) -> H_{i-1}(C) -x-> H_{i-1}(C)``."""
    from ..homology.homology import homology_at, induced_map, multiplication_map
    ring = C.ring
    pr = ring.poly_ring
    x = ring.parse(x) if isinstance(x, str) else ring.reduce(x)
    K = koszul([x], ring)
    T = tensor(K, C)
    # T_n = (K_0 (x) C_n) (+) (K_1 (x) C_{n-1}); with K_0 first in the block order.
    incl, proj = {}, {}
    for n in range(T.lo, T.hi + 1):
        a, b = C.rank(n), C.rank(n - 1)
        tn = T.rank(n)
        if tn == 0:
            continue
        if a:
            rows = [[pr.zero] * a for _ in range(tn)]
            for k in range(a):
                rows[k][k] = pr.one
            incl[n] = Matrix(pr, tn, a, rows)
        if b:
            rows = [[pr.zero] * tn for _ in range(b)]
            for k in range(b):
                rows[k][a + k] = pr.one
            proj[n] = Matrix(pr, b, tn, rows)
    SC = shift(C, 1)
    iota = ChainMap(C, T, incl, check=False)
    pi = ChainMap(T, SC, proj, check=False)
    checks = []
    ok = True
    lo, hi = C.lo, C.hi + 1
    for i in range(lo, hi + 1):
        H = homology_at(C, i).module
        HT = homology_at(T, i).module
        Hm = homology_at(SC, i).module  # = H_{i-1}(C) up to the sign of the differential
        mx = multiplication_map(H, x)
        mxm = multiplication_map(Hm, x)
        ii = induced_map(iota, i)
        pp = induced_map(pi, i)
        for name, f, g in (("at H_i(C)", mx, ii), ("at H_i(KxC)", ii, pp), ("at H_{i-1}(C)", pp, mxm)):
            im = f.image()
            ker = g.kernel()
            good = im.equals(ker)
            checks.append({"degree": i, "position": name, "exact": good})
            ok = ok and good
    return LesReport(str(x), ok, checks)


def split_tensor(C, P: Complex) -> SplitComplex:
    """``C (x) P`` for a rule complex ``C`` and a finite complex ``P``, summand by summand."""
    S = split_of(C)
    return SplitComplex(S.ring, [(j, tensor(X, P)) for j, X in S.pieces],
                        [(j, tensor(X, P)) for j, X in S.up],
                        [(j, tensor(X, P)) for j, X in S.down], S.tail_kind)
