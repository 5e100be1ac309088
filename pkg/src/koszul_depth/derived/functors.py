"""Derived tensor and Hom in windows, Tor, Ext, flat and projective dimension.

Every windowed answer records the resolution used and refuses degrees the
resolution does not certify (``InsufficientCap``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..complexes.complex import Complex, ComplexError
from ..complexes.ops import hom_complex, tensor
from ..homology.extended import NEG_INF, POS_INF, ExtendedInt, ext, ext_max
from ..homology.homology import homology_at, homology_vanishes
from ..homology.modules import PresentedModule
from .resolution import FreeResolution, resolve


class InsufficientCap(ValueError):
    """A requested degree lies outside what the resolution certifies."""


def as_complex(X) -> Complex:
    if isinstance(X, PresentedModule):
        return Complex.from_module(X)
    return X


@dataclass
class DerivedValue:
    """Homology of a derived functor on a window, with its certificate."""

    complex: Complex
    window: tuple
    certified: tuple  # (lo, hi) of certified homological degrees, ExtendedInt ends
    resolution_length: int | None
    complete: bool
    _mods: dict = field(default_factory=dict)

    def module(self, i: int) -> PresentedModule:
        if not self.is_certified(i):
            raise InsufficientCap(f"degree {i} is outside the certified range {self.certified}")
        if i not in self._mods:
            self._mods[i] = homology_at(self.complex, i).module
        return self._mods[i]

    def vanishes(self, i: int) -> bool:
        if not self.is_certified(i):
            raise InsufficientCap(f"degree {i} is outside the certified range {self.certified}")
        return homology_vanishes(self.complex, i)

    def is_certified(self, i: int) -> bool:
        lo, hi = self.certified
        return lo <= i <= hi

    def nonzero_degrees(self):
        lo = max(self.window[0], self.complex.lo)
        hi = min(self.window[1], self.complex.hi)
        return [i for i in range(lo, hi + 1) if self.is_certified(i) and not self.vanishes(i)]


def _is_flat_side(X) -> bool:
    return isinstance(X, Complex) and X.is_free


def ltensor(A, B, window=None, cap: int = 24) -> DerivedValue:
    """``A (x)^L B`` on a window of homological degrees.

    A bounded complex of free modules on either side is used as is;
    otherwise ``A`` is resolved to the length the window requires.
    """
    A, B = as_complex(A), as_complex(B)
    if A.is_rule() or B.is_rule():
        raise ComplexError("rule complexes are handled degreewise by the invariant routines")
    if _is_flat_side(B) or _is_flat_side(A):
        T = tensor(A, B)
        w = window or (T.lo, T.hi)
        return DerivedValue(T, tuple(w), (NEG_INF, POS_INF), None, True)
    if A.is_empty or B.is_empty:
        return DerivedValue(Complex.zero(A.ring), tuple(window or (0, -1)), (NEG_INF, POS_INF), None, True)
    lo_need = A.lo + B.lo
    hi_need = A.hi + B.hi if window is None else window[1]
    # F (x) B in degree n involves F_j with j in [n - B.hi, n - B.lo]; one more for boundaries.
    need = hi_need - B.lo + 1 - A.lo
    length = min(max(need, 0), cap)
    res = resolve(A, length)
    T = tensor(res.complex, B)
    if res.complete:
        cert = (NEG_INF, POS_INF)
    else:
        cert = (NEG_INF, ext(res.top - 1 + B.lo))
    w = tuple(window) if window is not None else (lo_need, hi_need)
    return DerivedValue(T, w, cert, res.length, res.complete)


def rhom(A, B, window=None, cap: int = 24) -> DerivedValue:
    """``RHom(A, B)`` on a window of homological degrees (``Ext^i`` sits in degree ``-i``)."""
    A, B = as_complex(A), as_complex(B)
    if A.is_rule() or B.is_rule():
        raise ComplexError("rule complexes are handled degreewise by the invariant routines")
    if A.is_empty or B.is_empty:
        return DerivedValue(Complex.zero(A.ring), tuple(window or (0, -1)), (NEG_INF, POS_INF), None, True)
    if A.is_free:
        H = hom_complex(A, B)
        w = window or (H.lo, H.hi)
        return DerivedValue(H, tuple(w), (NEG_INF, POS_INF), None, True)
    low = B.lo - A.hi if window is None else window[0]
    # Hom(F, B) in degree n uses F_j with j in [B.lo - n, B.hi - n]; one more for boundaries.
    need = B.hi - low + 1 - A.lo
    length = min(max(need, 0), cap)
    res = resolve(A, length)
    H = hom_complex(res.complex, B)
    if res.complete:
        cert = (NEG_INF, POS_INF)
    else:
        cert = (ext(B.hi - res.top + 1), POS_INF)
    w = tuple(window) if window is not None else (low, B.hi - A.lo)
    return DerivedValue(H, w, cert, res.length, res.complete)


def tor(A, B, i: int, cap: int = 24) -> PresentedModule:
    return ltensor(A, B, (i, i), cap).module(i)


def ext_module(A, B, i: int, cap: int = 24) -> PresentedModule:
    return rhom(A, B, (-i, -i), cap).module(-i)


@dataclass
class LowerBoundOnly:
    """The invariant exceeds ``bound - 1``: computation hit the cap at ``bound - 1``."""

    bound: int

    def to_json(self):
        return {"lower_bound": self.bound}

    def __str__(self):
        return f">={self.bound}"


@dataclass
class FdResult:
    value: object  # ExtendedInt or LowerBoundOnly
    method: str
    tor_nonzero: list = field(default_factory=list)
    cap: int = 0

    @property
    def exact(self) -> bool:
        return isinstance(self.value, ExtendedInt)

    def to_json(self):
        v = self.value.to_json()
        return {"value": v, "exact": self.exact, "method": self.method, "tor_nonzero": self.tor_nonzero,
                "cap": self.cap}


def residue_field(ring) -> PresentedModule:
    return PresentedModule.residue_field(ring)


def fd(M, cap: int = 24) -> FdResult:
    """Flat dimension over a graded-local ring as ``sup (k (x)^L M)``.

    Graded modules use their minimal resolution; bounded free complexes use
    ``k (x) M`` directly; other modules (ungraded, e.g. Frobenius
    pushforwards) use the minimal resolution of ``k``.
    """
    X = M
    ring = X.ring
    if not ring.graded:
        raise ValueError("flat dimension is computed over graded rings only")
    k = residue_field(ring)
    if isinstance(X, Complex) and X.is_free:
        T = tensor(Complex.from_module(k), X)
        nz = [i for i in range(T.lo, T.hi + 1) if not homology_vanishes(T, i)]
        return FdResult(ext(max(nz)) if nz else NEG_INF, "k(x)M", nz, cap)
    if isinstance(X, Complex):
        if len(X.modules) != 1 and not all(d.is_zero() for d in X.diffs.values()):
            raise ComplexError("fd of a complex of presented modules is not supported")
        # Zero differential: the complex is the sum of its shifted modules.
        vals, lower, method, nz = [], [], "zero", []
        for i0, mod in sorted(X.modules.items()):
            r = fd(mod, cap)
            method = r.method
            nz.extend(t + i0 for t in r.tor_nonzero)
            if r.exact:
                vals.append(r.value + i0)
            else:
                lower.append(r.value.bound + i0)
        if lower:
            return FdResult(LowerBoundOnly(max(lower + [int(v) + 1 for v in vals if v.is_finite])), method,
                            sorted(set(nz)), cap)
        return FdResult(ext_max(vals), method, sorted(set(nz)), cap)
    if X.is_zero():
        return FdResult(NEG_INF, "zero", [], cap)
    if X.graded:
        res = resolve(X, cap, minimal=True)
        nz = list(range(0, res.length + 1))
        if res.complete:
            return FdResult(ext(res.length), "minimal resolution", nz, cap)
        return FdResult(LowerBoundOnly(cap + 1), "minimal resolution", nz, cap)
    # Ungraded module: Tor(k, M) from the minimal resolution of k.
    res = resolve(k, cap + 1, minimal=True)
    T = tensor(res.complex, Complex.from_module(X))
    top = res.length if res.complete else min(res.length - 1, cap)
    nz = [i for i in range(0, top + 1) if not homology_vanishes(T, i)]
    if res.complete:
        return FdResult(ext(max(nz)) if nz else NEG_INF, "Tor(k,-)", nz, cap)
    if top in nz:
        return FdResult(LowerBoundOnly(top + 1), "Tor(k,-)", nz, cap)
    # Tor vanishes at the top certified degrees but the resolution of k goes on:
    # only a lower bound is known unless vanishing is found at two consecutive
    # degrees above every nonvanishing one (rigidity is not assumed).
    return FdResult(LowerBoundOnly((max(nz) + 1) if nz else 0), "Tor(k,-)", nz, cap)


def pd(M, cap: int = 24) -> FdResult:
    """Projective dimension; equal to ``fd`` for finitely generated graded data."""
    r = fd(M, cap)
    r.method = "pd via " + r.method
    return r


def betti_numbers(M: PresentedModule, cap: int = 24) -> list[int]:
    return resolve(M, cap, minimal=True).betti()
