"""Chain complexes: finite-window complexes and zero-differential rule complexes.

Complexes are homological: ``diff(i)`` maps degree ``i`` to degree
``i - 1``.  A finite-window ``Complex`` may carry presented (non-free)
modules; ``is_free`` tells whether every module is free.
"""

from __future__ import annotations

from ..algebra.matrix import Matrix
from ..algebra.ring import Ring
from ..groebner.core import vector_degree
from ..homology.modules import PresentedModule


class ComplexError(ValueError):
    pass


class Complex:
    """A bounded complex ``C_hi -> ... -> C_lo`` of presented modules."""

    def __init__(self, ring: Ring, modules: dict, diffs: dict | None = None, check: bool = True):
        self.ring = ring
        mods = {}
        for i, m in modules.items():
            if m.ngens:
                mods[int(i)] = m
        self.modules = mods
        pr = ring.poly_ring
        self.diffs = {}
        for i, d in (diffs or {}).items():
            i = int(i)
            src, tgt = self.module(i), self.module(i - 1)
            if (d.nrows, d.ncols) != (tgt.ngens, src.ngens):
                raise ComplexError(
                    f"differential in degree {i} has shape {d.nrows}x{d.ncols}, "
                    f"expected {tgt.ngens}x{src.ngens}"
                )
            if d.nrows and d.ncols:
                d = d.map_entries(ring.reduce)
                if not d.is_zero():
                    self.diffs[i] = d
        if mods:
            self.lo, self.hi = min(mods), max(mods)
        else:
            self.lo, self.hi = 0, -1
        self._homology = {}
        self._graded = None
        if check:
            self.check()

    # -- constructors -----------------------------------------------------
    @classmethod
    def free(cls, ring, ranks: dict, diffs: dict, degrees: dict | None = None, check=True):
        mods = {}
        for i, r in ranks.items():
            degs = None
            if degrees is not None:
                degs = degrees.get(i, degrees.get(str(i)))
                if degs is None and r:
                    raise ComplexError(f"missing generator weights in degree {i}")
            mods[int(i)] = PresentedModule(ring, int(r), (), degs)
        return cls(ring, mods, diffs, check=check)

    @classmethod
    def from_module(cls, module: PresentedModule, degree: int = 0) -> "Complex":
        return cls(module.ring, {degree: module})

    @classmethod
    def zero(cls, ring) -> "Complex":
        return cls(ring, {})

    # -- access -----------------------------------------------------------
    @property
    def window(self):
        return (self.lo, self.hi)

    @property
    def is_empty(self) -> bool:
        return not self.modules

    def module(self, i: int) -> PresentedModule:
        m = self.modules.get(i)
        if m is None:
            return PresentedModule(self.ring, 0, (), () if self.ring.graded else None, check=False)
        return m

    def rank(self, i: int) -> int:
        return self.module(i).ngens

    def degrees(self, i: int):
        return self.module(i).degrees

    def diff(self, i: int) -> Matrix:
        d = self.diffs.get(i)
        if d is None:
            return Matrix.zeros(self.ring.poly_ring, self.rank(i - 1), self.rank(i))
        return d

    @property
    def is_free(self) -> bool:
        return all(not m.relations for m in self.modules.values())

    @property
    def graded(self) -> bool:
        if self._graded is None:
            self._graded = self.ring.graded and all(m.graded for m in self.modules.values())
        return self._graded

    def is_rule(self) -> bool:
        return False

    def degrees_range(self):
        return range(self.lo, self.hi + 1)

    # -- checks -----------------------------------------------------------
    def check(self):
        ring = self.ring
        for i, d in self.diffs.items():
            src, tgt = self.module(i), self.module(i - 1)
            for r in src.relations:
                if not tgt.is_zero_element(d.apply(r)):
                    raise ComplexError(f"differential in degree {i} does not respect relations")
            if self.graded:
                for c in range(d.ncols):
                    for r in range(d.nrows):
                        e = d.rows[r][c]
                        if e and not _homogeneous_of(e, src.degrees[c] - tgt.degrees[r]):
                            raise ComplexError(f"differential entry {e} in degree {i} is not homogeneous "
                                               f"of weight {src.degrees[c] - tgt.degrees[r]}")
        for i in self.diffs:
            if i - 1 in self.diffs:
                comp = self.diffs[i - 1] @ self.diffs[i]
                tgt = self.module(i - 2)
                for col in comp.columns():
                    if not tgt.is_zero_element(col):
                        raise ComplexError(f"the differentials in degrees {i} and {i - 1} do not compose to zero")
        return True

    def equals(self, other: "Complex") -> bool:
        if self.modules.keys() != other.modules.keys():
            return False
        for i in self.modules:
            a, b = self.module(i), other.module(i)
            if (a.ngens, a.relations, a.degrees) != (b.ngens, b.relations, b.degrees):
                return False
        keys = set(self.diffs) | set(other.diffs)
        return all(self.diff(i) == other.diff(i) for i in keys)

    def __repr__(self):
        parts = []
        for i in range(self.hi, self.lo - 1, -1):
            m = self.module(i)
            parts.append(f"{i}:{m.ngens}" + ("" if not m.relations else f"/{len(m.relations)}"))
        return f"Complex({', '.join(parts)})"

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        ranks = {str(i): m.ngens for i, m in sorted(self.modules.items())}
        diffs = {str(i): d.to_strings() for i, d in sorted(self.diffs.items())}
        out = {"window": [self.lo, self.hi], "ranks": ranks, "diffs": diffs}
        if self.graded:
            out["grading"] = {str(i): list(m.degrees) for i, m in sorted(self.modules.items())}
        if not self.is_free:
            out["modules"] = {str(i): module_to_json(m) for i, m in sorted(self.modules.items())
                              if m.relations}
        return out


def _homogeneous_of(p, d) -> bool:
    return all(sum(e) == d for e in p._d)


class ChainMap:
    """Per-degree matrices ``f_i : S_i -> T_i`` commuting with the differentials."""

    def __init__(self, source: Complex, target: Complex, maps: dict, check=True):
        self.source = source
        self.target = target
        pr = source.ring.poly_ring
        self.maps = {}
        for i, m in maps.items():
            i = int(i)
            if (m.nrows, m.ncols) != (target.rank(i), source.rank(i)):
                raise ComplexError(f"chain map component {i} has the wrong shape")
            self.maps[i] = m
        if check:
            self.check()

    def at(self, i: int) -> Matrix:
        m = self.maps.get(i)
        if m is None:
            return Matrix.zeros(self.source.ring.poly_ring, self.target.rank(i), self.source.rank(i))
        return m

    def check(self):
        S, T = self.source, self.target
        lo = min(S.lo, T.lo)
        hi = max(S.hi, T.hi)
        for i in range(lo, hi + 2):
            lhs = T.diff(i) @ self.at(i)
            rhs = self.at(i - 1) @ S.diff(i)
            tgt = T.module(i - 1)
            for col in (lhs - rhs).columns():
                if not tgt.is_zero_element(col):
                    raise ComplexError(f"chain map does not commute with the differentials in degree {i}")
            for r in S.module(i).relations:
                if not T.module(i).is_zero_element(self.at(i).apply(r)):
                    raise ComplexError(f"chain map component {i} does not respect relations")
        return True

    def compose(self, other: "ChainMap") -> "ChainMap":
        """``self o other``."""
        keys = set(self.maps) | set(other.maps)
        return ChainMap(other.source, self.target, {i: self.at(i) @ other.at(i) for i in keys}, check=False)

    @classmethod
    def identity(cls, C: Complex) -> "ChainMap":
        pr = C.ring.poly_ring
        return cls(C, C, {i: Matrix.identity(pr, C.rank(i)) for i in C.modules}, check=False)

    @classmethod
    def scalar(cls, C: Complex, r) -> "ChainMap":
        pr = C.ring.poly_ring
        return cls(C, C, {i: Matrix.identity(pr, C.rank(i)).scale(r) for i in C.modules}, check=False)


# -- rule complexes ---------------------------------------------------------

class TailRule:
    """How a rule complex continues beyond its explicit window.

    ``kind`` is ``"zero"``, ``"periodic"`` (lists ``up`` and ``down`` of
    modules repeated cyclically above ``hi`` and below ``lo``) or
    ``"parametric"`` (a module template in the integer parameter ``n``,
    valid in direction ``"up"``, ``"down"`` or ``"both"``).
    """

    def __init__(self, kind="zero", up=(), down=(), template=None, direction="up", param="n",
                 asserted=True):
        if kind not in ("zero", "periodic", "parametric"):
            raise ComplexError(f"unknown tail kind {kind!r}")
        if kind == "periodic" and not (up or down):
            raise ComplexError("a periodic tail needs a non-empty repeating list")
        if kind == "parametric" and template is None:
            raise ComplexError("a parametric tail needs a template")
        if direction not in ("up", "down", "both"):
            raise ComplexError(f"unknown tail direction {direction!r}")
        self.kind = kind
        self.up = tuple(up)
        self.down = tuple(down)
        self.template = template
        self.direction = direction
        self.param = param
        self.asserted = asserted

    @property
    def goes_up(self) -> bool:
        if self.kind == "periodic":
            return bool(self.up)
        return self.kind == "parametric" and self.direction in ("up", "both")

    @property
    def goes_down(self) -> bool:
        if self.kind == "periodic":
            return bool(self.down)
        return self.kind == "parametric" and self.direction in ("down", "both")


class ModuleTemplate:
    """A presentation whose relation entries may mention an integer parameter."""

    def __init__(self, ring, ngens, relations, degrees=None, param="n"):
        self.ring = ring
        self.ngens = ngens
        self.relations = [list(c) for c in relations]
        self.degrees = degrees
        self.param = param

    def instantiate(self, n: int) -> PresentedModule:
        params = {self.param: n}
        rels = []
        for col in self.relations:
            rels.append(tuple(self.ring.parse(s, params) if isinstance(s, str) else s for s in col))
        degs = None
        if self.degrees is not None:
            degs = [self.ring.parse(d, params).constant_term() if isinstance(d, str) else d
                    for d in self.degrees]
            degs = [int(d) for d in degs]
        if degs is not None and not all(vector_degree(r, degs) is not None for r in rels if any(r)):
            degs = None
        return PresentedModule(self.ring, self.ngens, rels, degs, check=False)

    def to_json(self):
        out = {"gens": self.ngens, "relations": [[str(s) for s in c] for c in self.relations]}
        if self.degrees is not None:
            out["degrees"] = list(self.degrees)
        return out


class RuleComplex:
    """A zero-differential complex: explicit modules on a window plus a tail rule."""

    def __init__(self, ring: Ring, window, modules: dict, tail: TailRule | None = None):
        self.ring = ring
        self.lo, self.hi = int(window[0]), int(window[1])
        self.tail = tail or TailRule()
        self.window_modules = {}
        for i in range(self.lo, self.hi + 1):
            m = modules.get(i)
            if m is None and self.tail.kind == "parametric":
                m = self.tail.template.instantiate(i)
            if m is None:
                m = PresentedModule.zero(ring)
            self.window_modules[i] = m

    @property
    def window(self):
        return (self.lo, self.hi)

    def is_rule(self) -> bool:
        return True

    @property
    def conditional(self) -> bool:
        return self.tail.kind == "parametric"

    def module(self, i: int) -> PresentedModule:
        if self.lo <= i <= self.hi:
            return self.window_modules[i]
        t = self.tail
        if t.kind == "zero":
            return PresentedModule.zero(self.ring)
        if t.kind == "periodic":
            if i > self.hi and t.up:
                return t.up[(i - self.hi - 1) % len(t.up)]
            if i < self.lo and t.down:
                return t.down[(self.lo - 1 - i) % len(t.down)]
            return PresentedModule.zero(self.ring)
        if (i > self.hi and t.goes_up) or (i < self.lo and t.goes_down):
            return t.template.instantiate(i)
        return PresentedModule.zero(self.ring)

    def diff(self, i: int) -> Matrix:
        return Matrix.zeros(self.ring.poly_ring, self.module(i - 1).ngens, self.module(i).ngens)

    @property
    def graded(self) -> bool:
        mods = list(self.window_modules.values()) + list(self.tail.up) + list(self.tail.down)
        return self.ring.graded and all(m.graded for m in mods) and self.tail.kind != "parametric"

    def tail_samples(self, direction: str, count: int = 3):
        """Degrees and modules representing the tail in one direction.

        For a periodic tail these are all modules of one period (exact);
        for a parametric tail, ``count`` instantiations just past the window.
        """
        t = self.tail
        if direction == "up":
            if t.kind == "periodic":
                return [(self.hi + 1 + k, m) for k, m in enumerate(t.up)]
            if t.kind == "parametric" and t.goes_up:
                return [(self.hi + 1 + k, t.template.instantiate(self.hi + 1 + k)) for k in range(count)]
            return []
        if t.kind == "periodic":
            return [(self.lo - 1 - k, m) for k, m in enumerate(t.down)]
        if t.kind == "parametric" and t.goes_down:
            return [(self.lo - 1 - k, t.template.instantiate(self.lo - 1 - k)) for k in range(count)]
        return []

    def summands(self):
        """Window pieces ``(j, X)`` with ``C = coproduct of S^j X`` (``X`` a module in degree 0)."""
        return [(j, Complex.from_module(m)) for j, m in self.window_modules.items() if not m.is_zero()]

    def tail_summands(self, direction: str, count: int = 3):
        return [(j, Complex.from_module(m)) for j, m in self.tail_samples(direction, count)]

    def shift(self, n: int) -> "RuleComplex":
        t = self.tail
        if t.kind == "parametric":
            tmpl = _ShiftedTemplate(t.template, n)
            nt = TailRule("parametric", template=tmpl, direction=t.direction, param=t.param,
                          asserted=t.asserted)
        else:
            nt = t
        mods = {i + n: m for i, m in self.window_modules.items()}
        return RuleComplex(self.ring, (self.lo + n, self.hi + n), mods, nt)

    def __repr__(self):
        return f"RuleComplex(window={self.window}, tail={self.tail.kind})"

    def to_json(self) -> dict:
        out = {
            "window": [self.lo, self.hi],
            "modules": {str(i): module_to_json(m) for i, m in self.window_modules.items()},
        }
        t = self.tail
        if t.kind == "zero":
            out["tail"] = {"kind": "zero"}
        elif t.kind == "periodic":
            out["tail"] = {"kind": "periodic", "up": [module_to_json(m) for m in t.up],
                           "down": [module_to_json(m) for m in t.down]}
        else:
            tmpl = t.template
            out["tail"] = {"kind": "parametric", "direction": t.direction, "param": t.param,
                           "template": tmpl.to_json() if hasattr(tmpl, "to_json") else None,
                           "asserted": t.asserted}
        return out


class _ShiftedTemplate:
    def __init__(self, base, n):
        self.base = base
        self.n = n

    def instantiate(self, i):
        return self.base.instantiate(i - self.n)

    def to_json(self):
        out = self.base.to_json()
        out["shift"] = out.get("shift", 0) + self.n
        return out


# -- JSON helpers -----------------------------------------------------------

def module_to_json(m: PresentedModule) -> dict:
    out = {"gens": m.ngens, "relations": [[str(p) for p in r] for r in m.relations]}
    if m.graded:
        out["degrees"] = list(m.degrees)
    return out


def module_from_json(ring: Ring, data) -> PresentedModule:
    """``{"gens": n, "relations": [[col entries]...], "degrees": [...]}``; also ``{"cyclic": [ideal]}``."""
    if "cyclic" in data:
        return PresentedModule.cyclic(ring, data["cyclic"], data.get("degree", 0))
    n = int(data["gens"])
    rels = [tuple(ring.parse(s) for s in col) for col in data.get("relations", [])]
    degs = data.get("degrees")
    if degs is None and ring.graded and all(vector_degree(r, [0] * n) is not None or not any(r)
                                            for r in rels) and data.get("graded", True):
        degs = [0] * n
        if any(vector_degree(r, degs) is None for r in rels if any(r)):
            degs = None
    if degs is not None and any(vector_degree(r, degs) is None for r in rels if any(r)):
        degs = None
    return PresentedModule(ring, n, rels, degs, check=False)


def template_from_json(ring: Ring, data, param="n") -> ModuleTemplate:
    if "cyclic" in data:
        return ModuleTemplate(ring, 1, [[g] for g in data["cyclic"]], None, param)
    return ModuleTemplate(ring, int(data["gens"]), data.get("relations", []), data.get("degrees"), param)


def _matrix_from_rows(ring, rows, nrows, ncols):
    if not rows:
        return Matrix.zeros(ring.poly_ring, nrows, ncols)
    m = Matrix.from_strings(ring.poly_ring, rows)
    if (m.nrows, m.ncols) != (nrows, ncols):
        raise ComplexError(f"matrix has shape {m.nrows}x{m.ncols}, expected {nrows}x{ncols}")
    return m


def complex_from_json(ring: Ring, data):
    """Build a ``Complex`` or ``RuleComplex`` from the instance-file format."""
    window = data.get("window")
    if "tail" in data:
        tail_data = data["tail"]
        kind = tail_data.get("kind", "zero")
        mods = {int(i): module_from_json(ring, m) for i, m in data.get("modules", {}).items()}
        if kind == "periodic":
            tail = TailRule("periodic",
                            up=[module_from_json(ring, m) for m in tail_data.get("up", [])],
                            down=[module_from_json(ring, m) for m in tail_data.get("down", [])])
        elif kind == "parametric":
            param = tail_data.get("param", "n")
            tmpl = template_from_json(ring, tail_data["template"], param)
            tail = TailRule("parametric", template=tmpl, direction=tail_data.get("direction", "up"),
                            param=param, asserted=bool(tail_data.get("asserted", True)))
        else:
            tail = TailRule("zero")
        if window is None:
            window = (min(mods, default=0), max(mods, default=-1))
        return RuleComplex(ring, window, mods, tail)
    ranks = {int(i): int(r) for i, r in data.get("ranks", {}).items()}
    if "modules" in data:
        mods = {}
        for i, r in ranks.items():
            mods[i] = PresentedModule(ring, r, (), None, check=False)
        for i, m in data["modules"].items():
            mods[int(i)] = module_from_json(ring, m)
        ranks = {i: m.ngens for i, m in mods.items()}
    else:
        mods = None
    grading = data.get("grading")
    degrees = None
    if grading is not None:
        degrees = {int(i): list(w) for i, w in grading.items()}
    elif ring.graded and mods is None:
        degrees = None
    diffs = {}
    for i, rows in data.get("diffs", {}).items():
        i = int(i)
        diffs[i] = _matrix_from_rows(ring, rows, ranks.get(i - 1, 0), ranks.get(i, 0))
    if mods is None:
        if degrees is None and ring.graded:
            degrees = infer_grading(ring, ranks, diffs)
        return Complex.free(ring, ranks, diffs, degrees)
    if degrees is not None:
        mods = {i: PresentedModule(ring, m.ngens, m.relations, degrees.get(i), check=False)
                for i, m in mods.items()}
    return Complex(ring, mods, diffs)


def infer_grading(ring, ranks: dict, diffs: dict):
    """Try to find generator weights making every differential homogeneous.

    Weights start at 0 in the lowest degree and are propagated upward
    through nonzero entries; returns ``None`` when no consistent choice exists.
    """
    if not ranks:
        return {}
    degs = {}
    for i in sorted(ranks):
        r = ranks[i]
        w = [None] * r
        d = diffs.get(i)
        below = degs.get(i - 1)
        if d is not None and below is not None:
            for c in range(r):
                for row in range(d.nrows):
                    e = d.rows[row][c]
                    if not e:
                        continue
                    if not e.is_homogeneous():
                        return None
                    cand = below[row] + e.degree()
                    if w[c] is None:
                        w[c] = cand
                    elif w[c] != cand:
                        return None
        degs[i] = [0 if x is None else x for x in w]
    for i, d in diffs.items():
        src, tgt = degs.get(i, []), degs.get(i - 1, [])
        for c in range(d.ncols):
            for row in range(d.nrows):
                e = d.rows[row][c]
                if e and not _homogeneous_of(e, src[c] - tgt[row]):
                    return None
    return degs


class SplitComplex:
    """A coproduct ``coprod_j S^j X_j`` of finite complexes, with a tail of pieces.

    ``tail_kind`` is ``"zero"``, ``"periodic"`` (the listed tail pieces
    repeat exactly) or ``"parametric"`` (the tail pieces are samples and
    answers derived from them are conditional).
    """

    def __init__(self, ring, pieces, up=(), down=(), tail_kind="zero"):
        self.ring = ring
        self.pieces = [(int(j), X) for j, X in pieces]
        self.up = list(up)
        self.down = list(down)
        self.tail_kind = tail_kind
        self.tail = _TailKind(tail_kind)

    def is_rule(self) -> bool:
        return True

    @property
    def conditional(self) -> bool:
        return self.tail_kind == "parametric"

    @property
    def graded(self) -> bool:
        return all(X.graded for _, X in self.pieces + self.up + self.down)

    def summands(self):
        return list(self.pieces)

    def tail_summands(self, direction: str, count: int = 3):
        return list(self.up if direction == "up" else self.down)

    def __repr__(self):
        return f"SplitComplex({len(self.pieces)} pieces, tail={self.tail_kind})"


class _TailKind:
    def __init__(self, kind):
        self.kind = kind


def split_of(C) -> SplitComplex:
    """View a rule complex (or a finite complex) as a ``SplitComplex``."""
    if isinstance(C, SplitComplex):
        return C
    if isinstance(C, RuleComplex):
        return SplitComplex(C.ring, C.summands(), C.tail_summands("up"), C.tail_summands("down"),
                            C.tail.kind)
    return SplitComplex(C.ring, [(0, C)])
