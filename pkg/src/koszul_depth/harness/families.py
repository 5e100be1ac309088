"""Built-in instance families.  Every family is deterministic for a given seed."""

from __future__ import annotations

import random

from ..algebra.fields import GF, QQ
from ..algebra.ring import Ring
from ..complexes.complex import Complex, ModuleTemplate, RuleComplex, TailRule
from ..complexes.ops import koszul, shift, tensor
from ..homology.modules import PresentedModule
from .instance import Instance


class UnknownFamily(KeyError):
    pass


def _cx(C) -> dict:
    return C.to_json()


def _module_cx(M: PresentedModule, degree: int = 0) -> dict:
    return Complex.from_module(M, degree).to_json()


def _vars(n):
    return list("xyzw"[:n]) if n <= 4 else [f"x{i}" for i in range(n)]


# -- regular sequences ------------------------------------------------------

def regular_sequence(v: int = 3, seed: int = 0) -> list[Instance]:
    """``Q[x_1..x_v]`` with the maximal ideal, quotients by parts of the
    regular sequence of variables, and the Koszul complex on it."""
    var = _vars(v)
    R = Ring(QQ, var)
    comps = {
        "R": _module_cx(PresentedModule.free(R, 1)),
        "K": _cx(koszul(var[:2], R)),
    }
    for k in range(1, v):
        comps[f"Q{k}"] = _module_cx(PresentedModule.cyclic(R, var[:k]))
    ideals = {"m": var, "a": var[:1], "b": var[1:2]}
    expect = {f"depth[m,R]": {"value": v, "tag": "derived"}}
    for k in range(1, v):
        expect[f"depth[m,Q{k}]"] = {"value": v - k, "tag": "derived"}
    primes = {"m": var, "a": var[:1], "b": var[1:2]}
    inst = Instance(
        name=f"regular-sequence-v{v}",
        ring_data=R.descriptor(),
        ideals=ideals, complexes_data=comps, primes=primes,
        suites=["theorem-I", "width", "oracle", "koszul-bounds", "annihilation", "les",
                "generator-independence", "depth-comparisons", "lower-bound", "locality",
                "infinity"],
        expect=expect,
        params={
            "compare": [["a", "b", "R"], ["a", "b", "Q1"], ["m", "a", "R"]],
            "locality": [["a", "Q1", ["a", "m"]], ["m", "R", ["m"]], ["a", "R", ["a", "m"]]],
            "elements": var[:2] + ["0"],
        },
        family="regular-sequence",
    )
    return [inst]


# -- the comaximal family ---------------------------------------------------

def example_26(window: int = 5, seed: int = 0) -> list[Instance]:
    """``Q[t]``, ``a_n = (t - n)``, ``M = coprod_{n>=0} S^n R/a_n`` as a parametric rule complex."""
    R = Ring(QQ, ["t"])
    tmpl = ModuleTemplate(R, 1, [["t-n"]])
    M = RuleComplex(R, (0, window), {}, TailRule("parametric", template=tmpl, direction="up"))
    ideals = {f"a{d}": [f"t-{d}"] for d in range(window + 1)}
    ideals["zero"] = ["0"]
    expect = {f"depth[a{d},M]": {"value": -d, "tag": "paper"} for d in range(window + 1)}
    expect["depth[zero,M]"] = {"value": "-inf", "tag": "paper"}
    primes = {f"p{d}": [f"t-{d}"] for d in range(window + 1)}
    return [Instance(
        name=f"example-2.6-w{window}", ring_data=R.descriptor(), ideals=ideals,
        complexes_data={"M": M.to_json()}, primes=primes, suites=["example-2.6", "width"],
        expect=expect, params={"window": window},
        family="example-2.6",
    )]


# -- periodic rule complexes --------------------------------------------------

def periodic(v: int = 2, seed: int = 0) -> list[Instance]:
    """``coprod_{n>=0} S^n k`` over ``Q[x_1..x_v]``, with finite free test complexes."""
    var = _vars(v)
    R = Ring(QQ, var)
    k = PresentedModule.residue_field(R)
    P = RuleComplex(R, (0, 0), {0: k}, TailRule("periodic", up=[k]))
    Q2 = RuleComplex(R, (0, 1), {0: PresentedModule.free(R, 1), 1: k}, TailRule("periodic", up=[k, PresentedModule.cyclic(R, var[:1])]))
    comps = {
        "Pk": P.to_json(),
        "Pmix": Q2.to_json(),
        "K1": _cx(koszul(var[:1], R)),
        "K2": _cx(koszul(var, R)),
        "F": _cx(Complex.free(R, {0: 1, 1: 1}, {1: _mat(R, [[var[0] + "^2"]])}, {0: [0], 1: [2]})),
    }
    expect = {"depth[m,Pk]": {"value": "-inf", "tag": "derived"},
              "sup[Pk]": {"value": "+inf", "tag": "derived"}}
    return [Instance(
        name=f"periodic-v{v}", ring_data=R.descriptor(), ideals={"m": var},
        complexes_data=comps, suites=["infinity", "auslander-buchsbaum", "amplitude", "width"],
        expect=expect,
        params={"pairs": [["m", "Pk"], ["m", "Pmix"]],
                "ab": [["Pk", "K1"], ["Pk", "K2"], ["Pmix", "K1"], ["Pmix", "F"]],
                "amplitude": [["Pk", "K1"], ["Pmix", "F"]]},
        family="periodic",
    )]


def _mat(R, rows):
    from ..algebra.matrix import Matrix
    return Matrix.from_strings(R.poly_ring, rows)


# -- Frobenius ----------------------------------------------------------------

def frobenius_regular(seed: int = 0) -> list[Instance]:
    out = []
    for p, var in ((2, ["x"]), (3, ["x", "y"])):
        R = Ring(GF(p), var)
        out.append(Instance(
            name=f"frobenius-regular-F{p}-{''.join(var)}", ring_data=R.descriptor(),
            ideals={"m": var}, suites=["theorem-V"],
            expect={"fd[frobenius]": {"value": 0, "tag": "derived"}},
            params={"frobenius": {"e": 1, "regular": True, "tor_range": [1, 12]}},
            family="frobenius-regular",
        ))
    return out


def frobenius_singular(p: int = 2, seed: int = 0) -> list[Instance]:
    R = Ring(GF(p), ["x"], ideal=["x^2"])
    return [Instance(
        name=f"frobenius-singular-F{p}", ring_data=R.descriptor(), ideals={"m": ["x"]},
        suites=["theorem-V"],
        expect={"fd[frobenius]": {"value": "not-finite-at-cap", "tag": "derived"}},
        params={"frobenius": {"e": 1, "regular": False, "tor_range": [0, 12]}},
        family="frobenius-singular",
    )]


# -- random graded instances for the depth routes ---------------------------

def _random_form(rng, R, var, deg, terms=None):
    pr = R.poly_ring
    n = len(var)
    terms = terms or rng.randint(1, 3)
    p = pr.zero
    for _ in range(terms):
        e = [0] * n
        for _ in range(deg):
            e[rng.randrange(n)] += 1
        c = rng.choice([1, 1, 1, -1, 2, 3])
        p = p + pr.monomial(tuple(e), c)
    if not p:
        e = [0] * n
        e[rng.randrange(n)] = deg
        p = pr.monomial(tuple(e))
    return p


def theorem_i(count: int = 32, seed: int = 0) -> list[Instance]:
    """Random graded instances: at most 4 variables, at most 3 defining forms of
    degree at most 3, complexes of window width at most 4, ideals with at most 4 generators."""
    out = []
    for idx in range(count):
        rng = random.Random(f"theorem-i:{seed}:{idx}")
        n = rng.choice([2, 3, 3, 4])
        var = _vars(n)
        field = QQ if rng.random() < 0.8 else GF(rng.choice([5, 7]))
        base = Ring(field, var)
        forms = []
        if rng.random() < 0.6:
            for _ in range(rng.randint(1, min(2, n - 1))):
                forms.append(_random_form(rng, base, var, rng.choice([2, 2, 3]), terms=rng.randint(1, 2)))
        R = Ring(field, var, ideal=forms)
        if R.is_zero_ring():
            R = base
        kind = rng.choice(["module", "koszul", "koszul-module", "split", "free"])
        if kind == "module":
            J = [_random_form(rng, R, var, rng.choice([1, 2])) for _ in range(rng.randint(1, 2))]
            C = Complex.from_module(PresentedModule.cyclic(R, J), rng.choice([0, 0, 1, -1]))
        elif kind == "koszul":
            fs = [_random_form(rng, R, var, rng.choice([1, 1, 2])) for _ in range(rng.randint(1, 2))]
            C = shift(koszul(fs, R), rng.choice([0, 1, -1]))
        elif kind == "koszul-module":
            f = _random_form(rng, R, var, 1)
            J = [_random_form(rng, R, var, rng.choice([1, 2]))]
            C = tensor(koszul([f], R), Complex.from_module(PresentedModule.cyclic(R, J)))
        elif kind == "split":
            J1 = [_random_form(rng, R, var, 1)]
            J2 = [_random_form(rng, R, var, rng.choice([1, 2]))]
            s = rng.choice([1, 2])
            C = Complex(R, {0: PresentedModule.cyclic(R, J1), s: PresentedModule.cyclic(R, J2)})
        else:
            C = Complex.from_module(PresentedModule.free(R, 1), rng.choice([0, 1]))
        if rng.random() < 0.35:
            a = var
        elif rng.random() < 0.5:
            a = rng.sample(var, rng.randint(1, n))
        else:
            a = [str(_random_form(rng, base, var, 1, terms=2)) for _ in range(rng.randint(1, min(3, n)))]
        a = [str(g) for g in a][:4]
        out.append(Instance(
            name=f"theorem-i-{seed}-{idx:02d}", ring_data=R.descriptor(),
            ideals={"a": a, "m": var}, complexes_data={"C": C.to_json()},
            suites=["theorem-I", "width", "oracle", "koszul-bounds", "annihilation"],
            params={"pairs": [["a", "C"], ["m", "C"]], "kind": kind},
            family="theorem-i",
        ))
    return out


# -- flat dimension chains -------------------------------------------------------

def fd_chain(count: int = 8, seed: int = 0) -> list[Instance]:
    """Graded chains ``Q -> R = Q/J -> S = R/J'`` with ``F = S`` as an ``R``-module."""
    specs = [(["x", "y"], ["x"], ["y"])]
    rng = random.Random(f"fd-chain:{seed}")
    pool = [
        (["x", "y", "z"], ["x"], ["y", "z"]),
        (["x", "y", "z"], ["x*y"], ["z"]),
        (["x", "y", "z"], ["x^2"], ["y"]),
        (["x", "y", "z"], ["x", "y"], ["z"]),
        (["x", "y", "z", "w"], ["x*y-z*w"], ["x", "z"]),
        (["x", "y", "z"], ["x^2", "y^2"], ["z"]),
        (["x", "y"], ["x*y"], ["x+y"]),
        (["x", "y", "z"], ["x*z"], ["y^2"]),
    ]
    rng.shuffle(pool)
    specs += pool[:max(0, count - 1)]
    out = []
    for idx, (var, J, J2) in enumerate(specs):
        Q = Ring(QQ, var)
        out.append(Instance(
            name=f"fd-chain-{idx}", ring_data=Q.descriptor(), ideals={"m": var},
            suites=["fd-chain"],
            params={"chain": {"J": J, "J2": J2}},
            expect={} if idx else {
                "fd_Q[R]": {"value": 1, "tag": "derived"}, "fd_R[F]": {"value": 1, "tag": "derived"},
                "fd_Q[F]": {"value": 2, "tag": "derived"}, "inf[F]": {"value": 0, "tag": "derived"}},
            family="fd-chain",
        ))
    return out


# -- finite-length modules, width, tensor identities ------------------------------

def homological(seed: int = 0) -> list[Instance]:
    """Finite-length and bounded instances for the duality, additivity,
    accounting, weak-sensitivity, amplitude and Auslander-Buchsbaum suites."""
    out = []
    R = Ring(QQ, ["x", "y"])
    k = PresentedModule.residue_field(R)
    comps = {
        "k": _module_cx(k),
        "A1": _module_cx(PresentedModule.cyclic(R, ["x^2", "y"])),
        "A2": _module_cx(PresentedModule.cyclic(R, ["x^2", "x*y", "y^3"])),
        "A3": _module_cx(PresentedModule.cyclic(R, ["x", "y"], 1).direct_sum(PresentedModule.cyclic(R, ["x^2", "y^2"]))),
        "A4": _module_cx(PresentedModule.cyclic(R, ["x^3", "y^2"])),
        "A5": _module_cx(PresentedModule.cyclic(R, ["x^2", "y^2"]), 1),
        "R": _module_cx(PresentedModule.free(R, 1)),
        "Rx": _module_cx(PresentedModule.cyclic(R, ["x"])),
        "Ry": _module_cx(PresentedModule.cyclic(R, ["y"]), -1),
        "K": _cx(koszul(["x", "y"], R)),
        "Kx": _cx(koszul(["x"], R)),
        "S2": _cx(Complex.free(R, {0: 1, 2: 1}, {}, {0: [0], 2: [0]})),
        "Fxy": _cx(Complex.free(R, {0: 1, 1: 1}, {1: _mat(R, [["x*y"]])}, {0: [0], 1: [2]})),
        "Mxy": _cx(Complex(R, {0: PresentedModule.cyclic(R, ["x"]), 1: PresentedModule.free(R, 1)})),
    }
    finite = ["k", "A1", "A2", "A3", "A4", "A5"]
    out.append(Instance(
        name="homological-Qxy", ring_data=R.descriptor(),
        ideals={"m": ["x", "y"], "a": ["x"], "b": ["y"], "c": ["x", "y^2"]},
        complexes_data=comps,
        primes={"m": ["x", "y"], "px": ["x"], "py": ["y"]},
        suites=["duality", "width-additivity", "accounting", "weak-sensitivity", "amplitude",
                "auslander-buchsbaum", "width", "theorem-I", "depth-comparisons", "locality",
                "lower-bound", "upper-bound", "infinity"],
        params={
            "pairs": [[a, c] for a in ("m", "a", "c") for c in ("k", "A1", "A3", "R", "Rx", "Ry", "K", "Mxy")],
            "duality": finite,
            "additivity": [["k", "k"], ["A1", "A4"], ["Rx", "Ry"], ["K", "A2"], ["R", "A3"], ["Kx", "Rx"]],
            "rhom_additivity": [["R", "Rx"], ["Kx", "Ry"], ["K", "R"], ["Rx", "R"], ["k", "R"]],
            "accounting": [["Rx", "Ry"], ["k", "A1"], ["R", "A2"], ["A1", "R"], ["K", "Rx"], ["Mxy", "R"]],
            "weak": [["a", "A1", "Rx"], ["m", "A2", "R"], ["m", "A3", "Mxy"], ["c", "A4", "Rx"], ["m", "k", "R"]],
            "ab": [["R", "K"], ["Rx", "Kx"], ["A1", "Fxy"], ["Mxy", "Kx"], ["Ry", "S2"], ["k", "K"],
                   ["R", "Fxy"], ["Rx", "S2"]],
            "amplitude": [["R", "Kx"], ["Mxy", "Kx"], ["Mxy", "S2"], ["R", "S2"], ["Rx", "Fxy"],
                          ["A1", "K"], ["Ry", "Rx"], ["k", "A1"], ["Mxy", "Rx"]],
            "compare": [["a", "b", "R"], ["a", "b", "Rx"], ["a", "c", "Mxy"], ["m", "a", "Ry"], ["c", "b", "A3"]],
            "locality": [["a", "Rx", ["px", "m"]], ["m", "R", ["m"]], ["a", "R", ["px", "m"]],
                         ["b", "Rx", ["py", "m"]]],
        },
        family="homological",
    ))
    # A quotient ring: the graded hypersurface x*y = 0.
    S = Ring(QQ, ["x", "y"], ideal=["x*y"])
    kS = PresentedModule.residue_field(S)
    compsS = {
        "S": _module_cx(PresentedModule.free(S, 1)),
        "Sx": _module_cx(PresentedModule.cyclic(S, ["x"])),
        "kS": _module_cx(kS),
        "Kx": _cx(koszul(["x+y"], S)),
        "Cx": _cx(Complex(S, {0: PresentedModule.cyclic(S, ["x"]), 1: PresentedModule.cyclic(S, ["y"])})),
        "T": _module_cx(PresentedModule.cyclic(S, ["x^2", "y"])),
    }
    out.append(Instance(
        name="homological-hypersurface", ring_data=S.descriptor(),
        ideals={"m": ["x", "y"], "a": ["x"], "l": ["x+y"]},
        complexes_data=compsS,
        primes={"m": ["x", "y"], "px": ["x"], "py": ["y"]},
        suites=["theorem-I", "width", "oracle", "duality", "amplitude", "auslander-buchsbaum",
                "koszul-bounds", "annihilation", "les", "weak-sensitivity", "lower-bound",
                "depth-comparisons", "locality", "infinity"],
        params={
            "pairs": [[a, c] for a in ("m", "a", "l") for c in ("S", "Sx", "kS", "Kx", "Cx")],
            "duality": ["kS", "T"],
            "ab": [["S", "Kx"], ["Sx", "Kx"], ["Cx", "Kx"], ["kS", "Kx"]],
            "amplitude": [["S", "Kx"], ["Cx", "Kx"], ["T", "Kx"]],
            "weak": [["m", "kS", "S"], ["a", "T", "Sx"], ["l", "T", "S"]],
            "compare": [["a", "l", "S"], ["m", "a", "Sx"], ["l", "m", "Cx"]],
            "locality": [["a", "Sx", ["px", "m"]], ["m", "S", ["m"]], ["a", "S", ["px", "py", "m"]]],
            "elements": ["x", "x+y", "0"],
        },
        family="homological",
    ))
    return out


# -- torsion bands (upper bound lemma) --------------------------------------------

def torsion_band(seed: int = 0) -> list[Instance]:
    """Complexes with a socle in degree ``s`` and torsion homology just above it."""
    R = Ring(QQ, ["x", "y"])
    k = PresentedModule.residue_field(R)
    A = PresentedModule.cyclic(R, ["x^2", "y"])
    comps = {
        "B1": _cx(Complex(R, {0: PresentedModule.free(R, 1), 1: k})),
        "B2": _cx(Complex(R, {-1: PresentedModule.cyclic(R, ["x"]), 0: A})),
        "B3": _cx(Complex(R, {0: k, 1: A, 2: PresentedModule.free(R, 1)})),
    }
    return [Instance(
        name="torsion-band", ring_data=R.descriptor(), ideals={"m": ["x", "y"]},
        complexes_data=comps, suites=["upper-bound", "lower-bound", "theorem-I"],
        params={"pairs": [["m", c] for c in comps]}, family="torsion-band",
    )]


FAMILIES = {
    "regular-sequence": regular_sequence,
    "example-2.6": example_26,
    "periodic": periodic,
    "frobenius-regular": frobenius_regular,
    "frobenius-singular": frobenius_singular,
    "theorem-i": theorem_i,
    "fd-chain": fd_chain,
    "homological": homological,
    "torsion-band": torsion_band,
}


def generate_instances(family: str, seed: int = 0, **params) -> list[Instance]:
    """Instances of a named family; ``builtin`` is the union of all families."""
    if family == "builtin":
        out = []
        out += regular_sequence(2, seed) + regular_sequence(3, seed)
        out += example_26(5, seed)
        out += periodic(2, seed)
        out += frobenius_regular(seed) + frobenius_singular(2, seed)
        out += theorem_i(32, seed)
        out += fd_chain(8, seed)
        out += homological(seed)
        out += torsion_band(seed)
        return out
    if family not in FAMILIES:
        raise UnknownFamily(f"unknown family {family!r}; known: builtin, {', '.join(sorted(FAMILIES))}")
    return FAMILIES[family](seed=seed, **params)
