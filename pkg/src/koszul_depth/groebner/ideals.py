"""Ideal arithmetic in a (quotient) polynomial ring and torsion saturation."""

from __future__ import annotations

from ..algebra.poly import Poly
from .core import as_ring, ideal_groebner_basis, reduce_poly, syzygy_vectors

SATURATION_CAP = 64


def _gens(ring, gens):
    out = []
    for g in gens:
        p = ring.parse(g) if isinstance(g, str) else ring.reduce(g)
        if p:
            out.append(p)
    return out


def ideal_gb(ring, gens) -> list[Poly]:
    """Groebner basis of ``gens + I`` in the ambient polynomial ring."""
    ring = as_ring(ring)
    return ideal_groebner_basis(ring.poly_ring, list(ring.ideal) + _gens(ring, gens))


def ideal_contains(ring, gens, p) -> bool:
    ring = as_ring(ring)
    p = ring.parse(p) if isinstance(p, str) else p
    return not reduce_poly(p, ideal_gb(ring, gens))


def ideal_equal(ring, a, b) -> bool:
    return all(ideal_contains(ring, a, g) for g in b) and all(ideal_contains(ring, b, g) for g in a)


def is_unit_ideal(ring, gens) -> bool:
    gb = ideal_gb(ring, gens)
    return any(g.is_constant() and g for g in gb)


def ideal_sum(ring, a, b) -> list[Poly]:
    ring = as_ring(ring)
    return _gens(ring, list(a) + list(b))


def ideal_product(ring, a, b) -> list[Poly]:
    ring = as_ring(ring)
    a, b = _gens(ring, a), _gens(ring, b)
    out = []
    seen = set()
    for f in a:
        for g in b:
            h = ring.reduce(f * g)
            if h and h not in seen:
                seen.add(h)
                out.append(h)
    return out


def ideal_power(ring, a, m: int) -> list[Poly]:
    ring = as_ring(ring)
    if m < 0:
        raise ValueError("negative ideal power")
    if m == 0:
        return [ring.one]
    out = _gens(ring, a)
    for _ in range(m - 1):
        out = ideal_product(ring, out, a)
    return out


def ideal_intersection(ring, a, b) -> list[Poly]:
    """Generators of ``a cap b`` from the syzygies of ``[a | -b]``."""
    ring = as_ring(ring)
    a, b = _gens(ring, a), _gens(ring, b)
    if not a or not b:
        return []
    cols = [(f,) for f in a] + [(-g,) for g in b]
    out = []
    for s in syzygy_vectors(ring, 1, cols):
        h = ring.zero
        for c, f in zip(s[:len(a)], a):
            if c:
                h = h + c * f
        h = ring.reduce(h)
        if h and h not in out:
            out.append(h)
    return out


def ideal_quotient(ring, a, b) -> list[Poly]:
    """The colon ideal ``(a : b)``."""
    ring = as_ring(ring)
    b = _gens(ring, b)
    a = _gens(ring, a)
    result = None
    for g in b:
        cols = [(g,)] + [(f,) for f in a]
        part = []
        for s in syzygy_vectors(ring, 1, cols):
            c = ring.reduce(s[0])
            if c and c not in part:
                part.append(c)
        if not part:
            part = []
        result = part if result is None else ideal_intersection(ring, result, part)
    if result is None:
        return [ring.one]
    return result


def ideal_arith(ring, a, b, kind: str) -> list[Poly]:
    ops = {"sum": ideal_sum, "product": ideal_product, "intersection": ideal_intersection,
           "quotient": ideal_quotient}
    if kind not in ops:
        raise ValueError(f"unknown ideal operation {kind!r}")
    return ops[kind](ring, a, b)


def colon_saturate(M, a, cap: int = SATURATION_CAP):
    """``Gamma_a(M) = union_k (0 :_M a^k)`` as a ``SubModule`` of ``M``.

    Stops at the first ``k`` with ``(0 :_M a^k) = (0 :_M a^(k+1))``, which
    then persists for all larger ``k``.  Returns ``(submodule, k)``.
    """
    ring = M.ring
    a = _gens(ring, a)
    prev = M.colon(ideal_power(ring, a, 1))
    for k in range(1, cap + 1):
        nxt = M.colon(ideal_power(ring, a, k + 1))
        if nxt.contains_submodule(prev) and prev.contains_submodule(nxt):
            return prev, k
        prev = nxt
    raise ArithmeticError(f"saturation did not stabilize within {cap} steps")


def torsion_submodule(M, a, cap: int = SATURATION_CAP):
    """``Gamma_a(M)`` as a pruned presented module."""
    sub, _ = colon_saturate(M, a, cap)
    return sub.presentation().module
