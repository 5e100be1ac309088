"""Finitely presented modules and maps between them.

A ``PresentedModule`` is ``R^m / (columns of the relation matrix)``, with
optional generator weights when everything is graded.  Elements are
vectors of length ``m`` (representatives).
"""

from __future__ import annotations

from ..algebra.matrix import Matrix
from ..algebra.poly import Poly
from ..algebra.ring import Ring
from ..groebner.core import (
    augmented_basis,
    minimal_generators,
    submodule_basis,
    syzygy_vectors,
    vector_degree,
)


def _reduce_vec(ring, vec):
    return tuple(ring.reduce(p) for p in vec)


class PresentedModule:
    """Cokernel of ``relations`` (columns in ``R^ngens``)."""

    def __init__(self, ring: Ring, ngens: int, relations=(), degrees=None, check=True):
        self.ring = ring
        self.ngens = ngens
        rels = []
        seen = set()
        for r in relations:
            r = _reduce_vec(ring, r)
            if len(r) != ngens:
                raise ValueError(f"relation of length {len(r)} for {ngens} generators")
            if any(r) and r not in seen:
                seen.add(r)
                rels.append(r)
        self.relations = tuple(rels)
        self.degrees = None if degrees is None else tuple(int(d) for d in degrees)
        if self.degrees is not None and len(self.degrees) != ngens:
            raise ValueError("one weight per generator is required")
        if check and self.degrees is not None:
            if not ring.graded or any(vector_degree(r, self.degrees) is None for r in self.relations):
                raise ValueError("graded module needs a graded ring and homogeneous relations")
        self._gb = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def free(cls, ring, n: int, degrees=None) -> "PresentedModule":
        if degrees is None and ring.graded:
            degrees = (0,) * n
        return cls(ring, n, (), degrees)

    @classmethod
    def zero(cls, ring) -> "PresentedModule":
        return cls(ring, 0, (), () if ring.graded else None)

    @classmethod
    def cyclic(cls, ring, ideal, degree=0) -> "PresentedModule":
        """``R / ideal`` placed with its generator in internal degree ``degree``."""
        gens = [ring.parse(g) if isinstance(g, str) else ring.reduce(g) for g in ideal]
        graded = ring.graded and all(g.is_homogeneous() for g in gens)
        return cls(ring, 1, [(g,) for g in gens], (degree,) if graded else None)

    @classmethod
    def residue_field(cls, ring, degree=0) -> "PresentedModule":
        return cls.cyclic(ring, ring.gens(), degree)

    # -- basic data -------------------------------------------------------
    @property
    def graded(self) -> bool:
        return self.degrees is not None

    @property
    def relation_matrix(self) -> Matrix:
        return Matrix.from_columns(self.ring.poly_ring, self.ngens, self.relations)

    @property
    def gb(self):
        if self._gb is None:
            self._gb = submodule_basis(self.ring, self.ngens, self.relations, self.degrees)
        return self._gb

    def is_zero(self) -> bool:
        if self.ngens == 0:
            return True
        return self.gb.is_everything()

    def reduce(self, vec) -> tuple:
        if self.ngens == 0:
            return ()
        return self.gb.reduce(vec)

    def is_zero_element(self, vec) -> bool:
        return self.ngens == 0 or not any(self.reduce(vec))

    def hilbert_function(self, d: int) -> int:
        if not self.graded:
            raise ValueError("Hilbert function of an ungraded module")
        if self.ngens == 0:
            return 0
        return self.gb.hilbert_function(d)

    def hilbert_table(self, lo: int, hi: int) -> list[int]:
        return [self.hilbert_function(d) for d in range(lo, hi + 1)]

    def unit_vector(self, j: int) -> tuple:
        pr = self.ring.poly_ring
        return tuple(pr.one if i == j else pr.zero for i in range(self.ngens))

    def with_degrees(self, degrees) -> "PresentedModule":
        return PresentedModule(self.ring, self.ngens, self.relations, degrees)

    def twist(self, w: int) -> "PresentedModule":
        """Shift every generator weight by ``w`` (internal degree twist)."""
        if not self.graded:
            return self
        return PresentedModule(self.ring, self.ngens, self.relations, [d + w for d in self.degrees],
                               check=False)

    def ungraded(self) -> "PresentedModule":
        return PresentedModule(self.ring, self.ngens, self.relations, None, check=False)

    def __repr__(self):
        return f"PresentedModule({self.ngens} gens, {len(self.relations)} rels, degrees={self.degrees})"

    # -- structure --------------------------------------------------------
    def prune(self):
        """Eliminate generators using relations with a constant entry.

        Returns ``(module, kept, proj)``: new generator ``i`` is old generator
        ``kept[i]``, and ``proj`` (rows = new gens, cols = old gens) rewrites
        old coordinates into new ones.
        """
        ring = self.ring
        field = ring.field
        n = self.ngens
        rels = [list(r) for r in self.relations]
        proj = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
        alive = list(range(n))
        # rows are indexed by original generator index while ``alive``.
        while True:
            pick = None
            for ci, col in enumerate(rels):
                for j in alive:
                    e = col[j]
                    if e and e.is_constant():
                        pick = (ci, j)
                        break
                if pick:
                    break
            if pick is None:
                break
            ci, j = pick
            col = rels.pop(ci)
            u = col[j].constant_term()
            inv = field.one / u
            factors = {i: col[i] * inv for i in alive if i != j and col[i]}
            for other in rels:
                s = other[j]
                if s:
                    for i, f in factors.items():
                        other[i] = ring.reduce(other[i] - f * s)
                    other[j] = ring.zero
            pj = proj[j]
            for i, f in factors.items():
                proj[i] = [ring.reduce(a - f * b) for a, b in zip(proj[i], pj)]
            alive.remove(j)
        new_rels = [tuple(col[i] for i in alive) for col in rels]
        degs = None if self.degrees is None else [self.degrees[i] for i in alive]
        mod = PresentedModule(ring, len(alive), new_rels, degs, check=False)
        return mod, alive, [proj[i] for i in alive]

    def minimalize_relations(self) -> "PresentedModule":
        rels = minimal_generators(self.ring, self.ngens, self.relations, self.degrees)
        return PresentedModule(self.ring, self.ngens, rels, self.degrees, check=False)

    def simplified(self) -> "PresentedModule":
        return self.prune()[0]

    def direct_sum(self, *others) -> "PresentedModule":
        mods = (self,) + others
        total = sum(m.ngens for m in mods)
        pr = self.ring.poly_ring
        rels = []
        off = 0
        for m in mods:
            for r in m.relations:
                v = [pr.zero] * total
                v[off:off + m.ngens] = r
                rels.append(tuple(v))
            off += m.ngens
        graded = all(m.graded for m in mods)
        degs = [d for m in mods for d in m.degrees] if graded else None
        return PresentedModule(self.ring, total, rels, degs, check=False)

    def tensor(self, other: "PresentedModule") -> "PresentedModule":
        """``self (x) other`` presented on generators ``e_i (x) f_j`` (index ``i * n + j``)."""
        m, n = self.ngens, other.ngens
        pr = self.ring.poly_ring
        rels = []
        for r in self.relations:
            for j in range(n):
                v = [pr.zero] * (m * n)
                for i in range(m):
                    v[i * n + j] = r[i]
                rels.append(tuple(v))
        for r in other.relations:
            for i in range(m):
                v = [pr.zero] * (m * n)
                for j in range(n):
                    v[i * n + j] = r[j]
                rels.append(tuple(v))
        degs = None
        if self.graded and other.graded:
            degs = [a + b for a in self.degrees for b in other.degrees]
        return PresentedModule(self.ring, m * n, rels, degs, check=False)

    def annihilator(self) -> list[Poly]:
        """Generators of ``Ann M`` (an ideal of the ring)."""
        from ..groebner.ideals import ideal_intersection
        ring = self.ring
        if self.is_zero():
            return [ring.one]
        ideal = None
        for j in range(self.ngens):
            cols = [self.unit_vector(j)] + list(self.relations)
            syz = syzygy_vectors(ring, self.ngens, cols)
            I_j = [s[0] for s in syz if s[0]]
            ideal = I_j if ideal is None else ideal_intersection(ring, ideal, I_j)
        return [g for g in ideal if g]

    def colon(self, ideal) -> "SubModule":
        """The submodule ``(0 :_M ideal)`` of elements killed by every generator of ``ideal``."""
        ring = self.ring
        m = self.ngens
        ideal = [g for g in (ring.reduce(a) for a in ideal) if g]
        if m == 0:
            return SubModule(self, [])
        if not ideal:
            return SubModule(self, [self.unit_vector(j) for j in range(m)])
        s = len(ideal)
        pr = ring.poly_ring
        cols = []
        for j in range(m):
            v = [pr.zero] * (m * s)
            for t, a in enumerate(ideal):
                v[t * m + j] = a
            cols.append(tuple(v))
        for t in range(s):
            for r in self.relations:
                v = [pr.zero] * (m * s)
                v[t * m:(t + 1) * m] = r
                cols.append(tuple(v))
        syz = syzygy_vectors(ring, m * s, cols)
        gens = [tuple(z[:m]) for z in syz]
        return SubModule(self, [g for g in gens if not self.is_zero_element(g)])


class SubModule:
    """A submodule of a presented module spanned by representative vectors."""

    def __init__(self, ambient: PresentedModule, gens):
        self.ambient = ambient
        self.gens = [tuple(g) for g in gens]

    def is_zero(self) -> bool:
        return all(self.ambient.is_zero_element(g) for g in self.gens)

    def contains(self, vec) -> bool:
        amb = self.ambient
        cols = list(self.gens) + list(amb.relations)
        if not cols:
            return not any(vec)
        return augmented_basis(amb.ring, amb.ngens, cols).lift(vec) is not None

    def contains_submodule(self, other: "SubModule") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "SubModule") -> bool:
        return self.contains_submodule(other) and other.contains_submodule(self)

    def presentation(self) -> "Subquotient":
        return subquotient(self.ambient.ring, self.ambient.ngens, self.gens, self.ambient.relations,
                           self.ambient.degrees)


class Subquotient:
    """A module ``<gens> / (<gens> cap <boundary>)`` inside ``R^m``.

    ``module`` is a pruned presentation; new generator ``i`` is represented
    by ``reps[i]`` in ``R^m``.  ``coordinates`` expresses any element of
    ``<gens> + <boundary>`` in the new generators.
    """

    def __init__(self, ring, rank, gens, boundary, module, kept, proj, ambient_degrees):
        self.ring = ring
        self.rank = rank
        self.gens = gens
        self.boundary = boundary
        self.module = module
        self.kept = kept
        self.proj = proj
        self.reps = [gens[i] for i in kept]
        self.ambient_degrees = ambient_degrees

    def coordinates(self, vec):
        vec = tuple(vec)
        ng = len(self.gens)
        if ng == 0:
            return ()
        aug = augmented_basis(self.ring, self.rank, list(self.gens) + list(self.boundary))
        c = aug.lift(vec)
        if c is None:
            raise ValueError("vector does not lie in the subquotient's numerator")
        c = c[:ng]
        ring = self.ring
        out = []
        for row in self.proj:
            acc = ring.zero
            for a, b in zip(row, c):
                if a and b:
                    acc = acc + a * b
            out.append(ring.reduce(acc))
        return tuple(out)


def subquotient(ring: Ring, rank: int, gens, boundary, ambient_degrees=None) -> Subquotient:
    """Present ``(<gens> + <boundary>) / <boundary>`` with generators taken from ``gens``."""
    gens = [_reduce_vec(ring, g) for g in gens]
    boundary = [b for b in (_reduce_vec(ring, b) for b in boundary) if any(b)]
    # Drop generators that already lie in the boundary and exact repeats.
    bsb = submodule_basis(ring, rank, boundary) if boundary else None
    kept_gens = []
    seen = set()
    for g in gens:
        if not any(g) or g in seen:
            continue
        if bsb is not None and bsb.contains(g):
            continue
        seen.add(g)
        kept_gens.append(g)
    gens = kept_gens
    degs = None
    if ambient_degrees is not None and ring.graded:
        degs = [vector_degree(g, ambient_degrees) for g in gens]
        if any(d is None for d in degs):
            degs = None
    if ambient_degrees is not None and degs is not None:
        gens_sorted = sorted(range(len(gens)), key=lambda i: degs[i])
        gens = [gens[i] for i in gens_sorted]
        degs = [degs[i] for i in gens_sorted]
        # Drop generators not needed modulo the boundary (graded Nakayama).
        mg = minimal_generators(ring, rank, gens + boundary, ambient_degrees)
        keep = set(mg)
        sel = [i for i, g in enumerate(gens) if g in keep]
        gens = [gens[i] for i in sel]
        degs = [degs[i] for i in sel]
    ng = len(gens)
    if ng == 0:
        mod = PresentedModule(ring, 0, (), [] if degs is not None else None, check=False)
        return Subquotient(ring, rank, [], boundary, mod, [], [], ambient_degrees)
    syz = syzygy_vectors(ring, rank, gens + boundary)
    rels = [tuple(s[:ng]) for s in syz]
    rels = [r for r in rels if any(r)]
    if degs is not None:
        rels = minimal_generators(ring, ng, rels, degs)
    mod = PresentedModule(ring, ng, rels, degs, check=False)
    pruned, kept, proj = mod.prune()
    return Subquotient(ring, rank, gens, boundary, pruned, kept, proj, ambient_degrees)


class ModuleMap:
    """A map of presented modules given by a matrix on generators."""

    def __init__(self, source: PresentedModule, target: PresentedModule, matrix: Matrix):
        if (matrix.nrows, matrix.ncols) != (target.ngens, source.ngens):
            raise ValueError("map matrix shape does not match the modules")
        self.source = source
        self.target = target
        self.matrix = matrix

    def apply(self, vec) -> tuple:
        return tuple(self.source.ring.reduce(p) for p in self.matrix.apply(vec))

    def is_well_defined(self) -> bool:
        return all(self.target.is_zero_element(self.apply(r)) for r in self.source.relations)

    def is_zero(self) -> bool:
        return all(self.target.is_zero_element(self.apply(self.source.unit_vector(j)))
                   for j in range(self.source.ngens))

    def equals(self, other: "ModuleMap") -> bool:
        diff = self.matrix - other.matrix
        return ModuleMap(self.source, self.target, diff).is_zero()

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self o other``."""
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix)

    def kernel(self) -> SubModule:
        src, tgt = self.source, self.target
        if src.ngens == 0:
            return SubModule(src, [])
        cols = list(self.matrix.columns()) + list(tgt.relations)
        if tgt.ngens == 0:
            return SubModule(src, [src.unit_vector(j) for j in range(src.ngens)])
        syz = syzygy_vectors(src.ring, tgt.ngens, cols)
        return SubModule(src, [tuple(s[:src.ngens]) for s in syz])

    def image(self) -> SubModule:
        return SubModule(self.target, [self.apply(c) for c in
                                       (self.source.unit_vector(j) for j in range(self.source.ngens))])

    @classmethod
    def identity(cls, module: PresentedModule) -> "ModuleMap":
        return cls(module, module, Matrix.identity(module.ring.poly_ring, module.ngens))


def is_zero_module(M: PresentedModule) -> bool:
    return M.is_zero()


def socle_test(M: PresentedModule, m_gens) -> bool:
    """True iff ``(0 :_M m)`` is nonzero."""
    return not M.colon(m_gens).is_zero()
