"""Free resolutions of presented modules and minimalization of free complexes."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.matrix import Matrix
from ..complexes.complex import Complex, ComplexError
from ..groebner.core import minimal_generators, syzygy_vectors, vector_degree
from ..homology.modules import PresentedModule


class ResolutionError(ValueError):
    pass


@dataclass
class FreeResolution:
    """A free complex ``F`` (in degrees ``0..length``) resolving a module.

    ``complete`` means the next syzygy module is zero, so ``F`` is the
    whole resolution.  ``generators`` maps the generators of ``F_0`` onto
    the (pruned) generators of the resolved module.
    """

    complex: Complex
    length: int
    complete: bool
    minimal: bool
    target: PresentedModule
    shift: int = 0

    def betti(self) -> list[int]:
        return [self.complex.rank(i + self.shift) for i in range(self.length + 1)]

    def graded_betti(self) -> dict:
        out = {}
        for i in range(self.length + 1):
            degs = self.complex.degrees(i + self.shift) or ()
            for d in degs:
                out[(i, d)] = out.get((i, d), 0) + 1
        return out

    top: int | None = None

    def __post_init__(self):
        if self.top is None and not self.complete:
            self.top = self.shift + self.length

    @property
    def certified_through(self):
        """Highest homological degree where ``F`` agrees with the full resolution."""
        return None if self.complete else self.top


def _column_degrees(cols, degrees):
    if degrees is None:
        return None
    out = []
    for c in cols:
        d = vector_degree(c, degrees)
        if d is None:
            return None
        out.append(d)
    return out


def resolve_module(M: PresentedModule, length: int, minimal: bool | None = None) -> FreeResolution:
    """Resolve ``M`` by iterated syzygies up to homological degree ``length``."""
    ring = M.ring
    if minimal is None:
        minimal = M.graded
    if minimal and not M.graded:
        raise ResolutionError("minimal resolutions need a graded module")
    if length < 0:
        raise ResolutionError("resolution length must be non-negative")
    pr = ring.poly_ring
    if minimal:
        M = M.simplified().minimalize_relations().simplified()
    else:
        M = M.simplified()
    mods = {0: PresentedModule(ring, M.ngens, (), M.degrees, check=False)}
    diffs = {}
    cols = list(M.relations)
    degrees = M.degrees
    rank = M.ngens
    complete = False
    k = 0
    if rank == 0:
        complete = True
    while not complete and k < length:
        # ``cols`` generate the kernel of F_k -> F_{k-1} (the relations when k = 0).
        if minimal:
            cols = minimal_generators(ring, rank, cols, degrees)
        else:
            cols = [tuple(ring.reduce(p) for p in c) for c in cols]
            cols = [c for c in cols if any(c)]
        if not cols:
            complete = True
            break
        new_deg = _column_degrees(cols, degrees)
        if minimal and new_deg is None:
            raise ResolutionError("inhomogeneous syzygy in a graded resolution")
        k += 1
        mods[k] = PresentedModule(ring, len(cols), (), new_deg, check=False)
        diffs[k] = Matrix.from_columns(pr, rank, cols)
        syz = syzygy_vectors(ring, rank, cols)
        rank = len(cols)
        degrees = new_deg
        cols = syz
    if not complete and k == length:
        # Decide completeness of the last step without extending the complex.
        if minimal:
            rest = minimal_generators(ring, rank, cols, degrees) if cols else []
        else:
            rest = [c for c in (tuple(ring.reduce(p) for p in c) for c in cols) if any(c)]
        complete = not rest
    F = Complex(ring, mods, diffs, check=False)
    if not minimal:
        F = cancel_units(F, keep=(0,))
    return FreeResolution(F, k, complete, minimal, M)


def cancel_units(C: Complex, keep=()) -> Complex:
    """Split off contractible pieces ``R --u--> R`` with ``u`` a nonzero constant.

    The result is homotopy equivalent to ``C``.  Degrees in ``keep`` are
    not used as the target of a cancellation (so the generators of a
    resolved module stay put).
    """
    if not C.is_free:
        return C
    ring = C.ring
    pr = ring.poly_ring
    field = ring.field
    ranks = {i: C.rank(i) for i in C.modules}
    degs = {i: list(C.degrees(i)) if C.degrees(i) is not None else None for i in C.modules}
    mats = {i: [list(r) for r in C.diff(i).rows] for i in C.diffs}
    changed = True
    while changed:
        changed = False
        for i in sorted(mats):
            if i - 1 in keep:
                continue
            rows = mats[i]
            pick = None
            for r, row in enumerate(rows):
                for c, e in enumerate(row):
                    if e and e.is_constant():
                        pick = (r, c)
                        break
                if pick:
                    break
            if pick is None:
                continue
            r, c = pick
            u_inv = field.one / rows[r][c].constant_term()
            col_c = [rows[rr][c] for rr in range(len(rows))]
            row_r = rows[r]
            new = []
            for rr, row in enumerate(rows):
                if rr == r:
                    continue
                f = col_c[rr] * u_inv if col_c[rr] else None
                nr = []
                for cc, e in enumerate(row):
                    if cc == c:
                        continue
                    if f is not None and row_r[cc]:
                        e = ring.reduce(e - f * row_r[cc])
                    nr.append(e)
                new.append(nr)
            mats[i] = new
            if i + 1 in mats:
                mats[i + 1] = [row for rr, row in enumerate(mats[i + 1]) if rr != c]
            if i - 1 in mats:
                mats[i - 1] = [[e for cc, e in enumerate(row) if cc != r] for row in mats[i - 1]]
            ranks[i] -= 1
            ranks[i - 1] -= 1
            if degs.get(i) is not None:
                degs[i].pop(c)
            if degs.get(i - 1) is not None:
                degs[i - 1].pop(r)
            changed = True
            break
    mods = {i: PresentedModule(ring, n, (), degs.get(i), check=False) for i, n in ranks.items() if n}
    diffs = {}
    for i, rows in mats.items():
        if ranks.get(i, 0) and ranks.get(i - 1, 0):
            diffs[i] = Matrix(pr, ranks[i - 1], ranks[i], rows)
    return Complex(ring, mods, diffs, check=False)


def resolve(target, length: int = 24, minimal: bool | None = None) -> FreeResolution:
    """Resolve a presented module, or a complex of free modules (its own resolution),
    or a complex with a single module."""
    if isinstance(target, PresentedModule):
        return resolve_module(target, length, minimal)
    if isinstance(target, Complex):
        if target.is_free:
            F = cancel_units(target) if (minimal is None or minimal) else target
            mini = F.graded and all(
                not e.is_constant() for d in F.diffs.values() for r in d.rows for e in r if e
            )
            if minimal and not mini:
                raise ResolutionError("minimal resolutions need a graded complex")
            return FreeResolution(F, F.hi - F.lo if not F.is_empty else 0, True, mini,
                                  None, shift=F.lo if not F.is_empty else 0)
        from ..complexes.ops import shift
        if len(target.modules) == 1:
            (i, M), = target.modules.items()
            res = resolve_module(M, length, minimal)
            return FreeResolution(shift(res.complex, i), res.length, res.complete, res.minimal,
                                  res.target, shift=i)
        if all(d.is_zero() for d in target.diffs.values()):
            # A coproduct of shifted modules: sum the shifted resolutions.
            lo = target.lo
            parts = []
            for i, M in sorted(target.modules.items()):
                r = resolve_module(M, max(length - (i - lo), 1), minimal)
                parts.append((i, r))
            F = direct_sum_complexes([shift(r.complex, i) for i, r in parts])
            complete = all(r.complete for _, r in parts)
            tops = [i + r.length for i, r in parts if not r.complete]
            hi = max(i + r.length for i, r in parts)
            return FreeResolution(F, hi - lo, complete, all(r.minimal for _, r in parts), None,
                                  shift=lo, top=min(tops) if tops else None)
        raise ResolutionError("only free complexes, single modules and coproducts of modules are resolved")
    raise ComplexError(f"cannot resolve {type(target).__name__}")


def direct_sum_complexes(parts) -> Complex:
    """Degreewise direct sum of complexes of free modules."""
    ring = parts[0].ring
    pr = ring.poly_ring
    degs = sorted({i for P in parts for i in P.modules})
    mods, diffs = {}, {}
    for i in degs:
        ngens = sum(P.rank(i) for P in parts)
        dd = []
        graded = True
        for P in parts:
            w = P.degrees(i)
            if P.rank(i) and w is None:
                graded = False
            dd.extend(w or [0] * P.rank(i))
        mods[i] = PresentedModule(ring, ngens, (), dd if graded else None, check=False)
    for i in degs:
        if i - 1 not in mods:
            continue
        rows = [[pr.zero] * mods[i].ngens for _ in range(mods[i - 1].ngens)]
        r0 = c0 = 0
        for P in parts:
            d = P.diff(i)
            for a in range(d.nrows):
                for b in range(d.ncols):
                    rows[r0 + a][c0 + b] = d.rows[a][b]
            r0 += P.rank(i - 1)
            c0 += P.rank(i)
        diffs[i] = Matrix(pr, mods[i - 1].ngens, mods[i].ngens, rows)
    return Complex(ring, mods, diffs, check=False)
