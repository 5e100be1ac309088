"""Independent homology dimensions by dense linear algebra on graded pieces.

For a graded complex of presented modules ``C_i = F_i / N_i`` over
``R = k[x]/I`` the piece ``(C_i)_d`` is the span of the degree-``d``
monomial vectors of ``F_i`` modulo the span of all monomial multiples of
relations and of ``I``-generators.  Nothing here touches Groebner bases:
the dimensions come from exact ranks of explicit matrices.
"""

from __future__ import annotations

from math import lcm

import flint

from ..algebra.fields import RationalField
from ..groebner.core import monomials_of_degree, vector_degree


def _rank(rows, ncols, field) -> int:
    rows = [r for r in rows if r]
    if not rows or not ncols:
        return 0
    if isinstance(field, RationalField):
        mat = flint.fmpz_mat(len(rows), ncols)
        for i, r in enumerate(rows):
            den = lcm(*(int(c.denominator) for c in r.values()))
            for j, c in r.items():
                mat[i, j] = int(c.numerator) * (den // int(c.denominator))
        return mat.rank()
    p = field.p
    mat = flint.nmod_mat(len(rows), ncols, p)
    for i, r in enumerate(rows):
        for j, c in r.items():
            mat[i, j] = int(c)
    return mat.rank()


class _Piece:
    """Monomial basis of ``(F_i)_d``."""

    def __init__(self, nvars, weights, d):
        self.index = {}
        for c, w in enumerate(weights):
            if d - w < 0:
                continue
            for e in monomials_of_degree(nvars, d - w):
                self.index[(c, e)] = len(self.index)

    def __len__(self):
        return len(self.index)

    def vector(self, vec, shift):
        """Coordinates of ``x^shift * vec``."""
        out = {}
        for c, p in enumerate(vec):
            for e, coeff in p.items():
                key = (c, tuple(a + b for a, b in zip(e, shift)))
                j = self.index[key]
                out[j] = out.get(j, 0) + coeff
        return {j: v for j, v in out.items() if v}


def _relation_rows(ring, module, piece, d):
    nv = ring.nvars
    rows = []
    weights = module.degrees
    for r in module.relations:
        dr = vector_degree(r, weights)
        if dr is None or dr > d:
            continue
        for m in monomials_of_degree(nv, d - dr):
            rows.append(piece.vector(r, m))
    for g in ring.ideal:
        dg = g.degree()
        for c, w in enumerate(weights):
            if d - w - dg < 0:
                continue
            vec = [ring.zero] * module.ngens
            vec[c] = g
            for m in monomials_of_degree(nv, d - w - dg):
                rows.append(piece.vector(vec, m))
    return rows


def _image_rows(ring, diff, src_piece, tgt_piece):
    rows = []
    cols = diff.columns()
    for (c, e) in src_piece.index:
        rows.append(tgt_piece.vector(cols[c], e))
    return rows


class _OracleCache:
    """Shared pieces and ranks so neighbouring degrees reuse each other's work."""

    def __init__(self, C):
        self.C = C
        self.pieces = {}
        self.rel_rank = {}
        self.rel_rows = {}
        self.out_rank = {}

    def piece(self, i, d):
        if (i, d) not in self.pieces:
            M = self.C.module(i)
            self.pieces[(i, d)] = _Piece(self.C.ring.nvars, M.degrees, d)
        return self.pieces[(i, d)]

    def relations(self, i, d):
        if (i, d) not in self.rel_rows:
            P = self.piece(i, d)
            rows = _relation_rows(self.C.ring, self.C.module(i), P, d) if len(P) else []
            self.rel_rows[(i, d)] = rows
            self.rel_rank[(i, d)] = _rank(rows, len(P), self.C.ring.field)
        return self.rel_rows[(i, d)], self.rel_rank[(i, d)]

    def dim(self, i, d):
        P = self.piece(i, d)
        return len(P) - self.relations(i, d)[1] if len(P) else 0

    def boundary_rank(self, i, d):
        """Rank of ``(C_i)_d -> (C_{i-1})_d``."""
        if (i, d) not in self.out_rank:
            r = 0
            src, tgt = self.C.module(i), self.C.module(i - 1)
            if src.ngens and tgt.ngens:
                Pi, Pt = self.piece(i, d), self.piece(i - 1, d)
                if len(Pi) and len(Pt):
                    Jt, rank_Jt = self.relations(i - 1, d)
                    img = _image_rows(self.C.ring, self.C.diff(i), Pi, Pt)
                    r = _rank(img + Jt, len(Pt), self.C.ring.field) - rank_Jt
            self.out_rank[(i, d)] = r
        return self.out_rank[(i, d)]

    def homology(self, i, d):
        if not self.C.module(i).ngens or not len(self.piece(i, d)):
            return 0
        return self.dim(i, d) - self.boundary_rank(i, d) - self.boundary_rank(i + 1, d)


def oracle_dimension(C, i: int, d: int) -> int:
    """``dim_k H_i(C)_d`` by linear algebra."""
    return _OracleCache(C).homology(i, d)


def default_bound(C, slack: int = 8) -> int:
    top = 0
    for m in C.modules.values():
        if m.degrees:
            top = max(top, max(m.degrees))
    return top + slack


def oracle_homology(C, i: int, bound: int | None = None, cache=None) -> dict[int, int]:
    """Table ``d -> dim_k H_i(C)_d`` for ``d`` from the lowest weight of ``C_i`` up to ``bound``."""
    if not C.graded:
        raise ValueError("the linear-algebra oracle needs a graded complex")
    if bound is None:
        bound = default_bound(C)
    src = C.module(i)
    if src.ngens == 0:
        return {}
    lo = min(src.degrees)
    cache = cache or _OracleCache(C)
    return {d: cache.homology(i, d) for d in range(lo, bound + 1)}


def oracle_table(C, bound: int | None = None) -> dict[int, dict[int, int]]:
    """``oracle_homology`` for every homological degree of ``C`` with shared work."""
    cache = _OracleCache(C)
    return {i: oracle_homology(C, i, bound, cache) for i in range(C.lo, C.hi + 1)}
