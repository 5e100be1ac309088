"""Graded Matlis duality for finite-length modules (the graded k-dual)."""

from __future__ import annotations

from ..groebner.core import krull_dim, monomials_of_degree
from ..homology.modules import PresentedModule


class NotFiniteLength(ValueError):
    pass


def is_finite_length(M: PresentedModule) -> bool:
    if M.is_zero():
        return True
    ann = M.annihilator()
    return krull_dim(M.ring.quotient(ann)) <= 0


def standard_basis(M: PresentedModule):
    """k-basis of a finite-length graded ``M``: ``(component, exponent, degree)`` triples."""
    if not M.graded:
        raise NotFiniteLength("graded data required")
    if M.ngens == 0:
        return []
    gb = M.gb
    n = M.ring.nvars
    leads: dict = {}
    for c, e in gb.leads:
        leads.setdefault(c, []).append(e)
    out = []
    for c in range(M.ngens):
        ls = leads.get(c, [])
        dd = 0
        while True:
            found = [e for e in monomials_of_degree(n, dd)
                     if not any(all(a <= b for a, b in zip(l, e)) for l in ls)]
            if not found:
                break
            out.extend((c, e, M.degrees[c] + dd) for e in found)
            dd += 1
            if dd > 10_000:
                raise NotFiniteLength("module is not of finite length")
    out.sort(key=lambda t: (t[2], t[0], t[1]))
    return out


def _basis_vector(M, c, e):
    pr = M.ring.poly_ring
    mono = pr.monomial(e)
    return tuple(mono if i == c else pr.zero for i in range(M.ngens))


def multiplication_matrices(M: PresentedModule):
    """``basis`` and, per variable, ``{b: {b': coeff}}`` with ``x*b = sum coeff b'``."""
    basis = standard_basis(M)
    index = {(c, e): i for i, (c, e, _) in enumerate(basis)}
    pr = M.ring.poly_ring
    mats = []
    for x in pr.gens():
        act = {}
        for i, (c, e, _) in enumerate(basis):
            v = _basis_vector(M, c, e)
            w = M.reduce(tuple(x * p for p in v))
            row = {}
            for comp, p in enumerate(w):
                for exp, coeff in p.items():
                    row[index[(comp, exp)]] = coeff
            act[i] = row
        mats.append(act)
    return basis, mats


def matlis_dual(M: PresentedModule) -> PresentedModule:
    """``Hom_k(M, k)`` with ``M_d`` dual placed in degree ``-d`` and transposed action."""
    if not M.graded:
        raise NotFiniteLength("the graded dual needs a graded module")
    if not is_finite_length(M):
        raise NotFiniteLength("module is not of finite length")
    ring = M.ring
    pr = ring.poly_ring
    basis, mats = multiplication_matrices(M)
    N = len(basis)
    degrees = [-d for (_, _, d) in basis]
    rels = []
    for j, x in enumerate(pr.gens()):
        act = mats[j]
        # (x f_b)(m) = f_b(x m), so x f_b = sum_{b'} [b in x b'] f_{b'}.
        for b in range(N):
            col = [pr.zero] * N
            col[b] = x
            for bp in range(N):
                c = act[bp].get(b)
                if c:
                    col[bp] = col[bp] - pr.constant(c)
            rels.append(tuple(col))
    D = PresentedModule(ring, N, rels, degrees, check=False)
    return D.simplified()
