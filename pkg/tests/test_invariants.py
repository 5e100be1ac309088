import pytest
from hypothesis import given
from hypothesis import strategies as st

from koszul_depth.algebra.fields import GF, QQ
from koszul_depth.algebra.ring import Ring
from koszul_depth.complexes.complex import Complex, ModuleTemplate, RuleComplex, TailRule
from koszul_depth.complexes.ops import koszul, shift, tensor
from koszul_depth.derived.functors import fd
from koszul_depth.groebner.ideals import ideal_equal
from koszul_depth.homology.extended import NEG_INF, POS_INF, ext
from koszul_depth.homology.homology import sup_inf_amp
from koszul_depth.homology.modules import PresentedModule
from koszul_depth.invariants.depth import (
    CONDITIONAL, EXACT, UnitIdealError, depth_at_prime, depth_ext, depth_koszul, depth_koszul_coh,
    depth_lc, width_koszul, width_tor,
)
from koszul_depth.invariants.duality import NotFiniteLength, is_finite_length, matlis_dual
from koszul_depth.invariants.frobenius import frobenius_pushforward

from strategies import RINGS, homogeneous_polys

R1 = Ring(QQ, "x")
R2 = Ring(QQ, "xy")
R3 = Ring(QQ, "xyz")
DEPTH_ROUTES = (depth_koszul, depth_koszul_coh, depth_ext, depth_lc)


def free(R, d=0):
    return Complex.from_module(PresentedModule.free(R, 1), d)


@pytest.mark.parametrize("route", DEPTH_ROUTES, ids=lambda f: f.__name__)
def test_depth_regular_sequence(route):
    r = route(["x", "y", "z"], PresentedModule.free(R3, 1))
    assert r.value == ext(3) and r.certainty == EXACT


@pytest.mark.parametrize("route", DEPTH_ROUTES, ids=lambda f: f.__name__)
def test_depth_of_cyclic(route):
    M = PresentedModule.cyclic(R2, ["x"])
    assert route(["x", "y"], M).value == ext(1)
    assert route(["x"], PresentedModule.cyclic(R1, ["x"])).value == ext(0)


@pytest.mark.parametrize("route", DEPTH_ROUTES, ids=lambda f: f.__name__)
def test_depth_of_zero_complex(route):
    assert route(["x"], Complex.zero(R1)).value == POS_INF


@pytest.mark.parametrize("route", DEPTH_ROUTES, ids=lambda f: f.__name__)
def test_depth_shift(route):
    assert route(["x"], free(R1, 1)).value == ext(0)


def test_ext_route_evidence():
    r = depth_ext(["x", "y", "z"], PresentedModule.free(R3, 1))
    assert r.route == "ext"
    assert r.value == ext(3)


def test_lc_route_stabilizes():
    r = depth_lc(["x"], PresentedModule.free(R1, 1))
    assert r.value == ext(1)
    nonzero = [c for c in r.evidence["checked"] if c.get("status") == "nonzero"]
    assert nonzero and nonzero[0]["stable_from"] == 2


def test_unit_ideal_is_rejected():
    with pytest.raises(UnitIdealError):
        depth_koszul(["1"], PresentedModule.free(R1, 1))


@pytest.mark.parametrize("route", (width_koszul, width_tor), ids=lambda f: f.__name__)
def test_width_examples(route):
    k = PresentedModule.residue_field(R1)
    assert route(["x"], k).value == ext(0)
    assert route(["x", "y"], free(R2, 2)).value == ext(2)
    assert route(["x"], Complex.zero(R1)).value == POS_INF
    assert route(["x", "y"], PresentedModule.free(R2, 1)).value == ext(0)
    assert route(["x", "y"], Complex.from_module(PresentedModule.residue_field(R2), -3)).value == ext(-3)


def test_depth_at_primes():
    M = PresentedModule.cyclic(R2, ["x"])
    assert depth_at_prime(["x"], M).value == ext(0)
    assert depth_at_prime(["x", "y"], PresentedModule.free(R2, 1)).value == ext(2)


def test_depth_at_prime_not_in_support():
    # x is a unit at (y), so R/(x) vanishes there and the local depth is +inf
    M = PresentedModule.cyclic(R2, ["x"])
    assert depth_at_prime(["y"], M).value == POS_INF


def test_matlis_dual_of_residue_field():
    k = PresentedModule.residue_field(R2)
    D = matlis_dual(k)
    assert D.hilbert_table(-2, 2) == [0, 0, 1, 0, 0]


def test_matlis_dual_truncated_line():
    M = PresentedModule.cyclic(R1, ["x^3"])
    D = matlis_dual(M)
    assert D.hilbert_table(-3, 1) == [0, 1, 1, 1, 0]
    assert matlis_dual(D).hilbert_table(-1, 3) == [0, 1, 1, 1, 0]
    assert ideal_equal(R1, D.annihilator(), ["x^3"])


def test_matlis_dual_mirrors_degrees():
    k = PresentedModule.residue_field(R1)
    N = k.direct_sum(k.twist(1))
    assert N.hilbert_table(-2, 2) == [0, 0, 1, 1, 0]
    assert matlis_dual(N).hilbert_table(-2, 2) == [0, 1, 1, 0, 0]


def test_matlis_dual_needs_finite_length():
    assert not is_finite_length(PresentedModule.free(R1, 1))
    with pytest.raises(NotFiniteLength):
        matlis_dual(PresentedModule.free(R1, 1))


def test_frobenius_pushforward_regular():
    F = frobenius_pushforward(Ring(GF(2), "x"))
    assert F.ngens == 2 and not F.relations
    assert fd(F, cap=12).value == ext(0)
    F3 = frobenius_pushforward(Ring(GF(3), "x"))
    assert F3.ngens == 3 and not F3.relations
    F9 = frobenius_pushforward(Ring(GF(3), "xy"))
    assert F9.ngens == 9 and fd(F9, cap=12).value == ext(0)


def test_frobenius_pushforward_dual_numbers():
    S = Ring(GF(2), "x", ideal=["x^2"])
    F = frobenius_pushforward(S)
    x = S.parse("x")
    assert F.ngens == 2
    assert set(F.relations) == {(x, S.zero), (S.zero, x)}  # k^2
    r = fd(F, cap=12)
    assert not r.exact and r.tor_nonzero == list(range(13))


def test_example_family_depths():
    T = Ring(QQ, "t")
    M = RuleComplex(T, (0, 6), {}, TailRule("parametric", template=ModuleTemplate(T, 1, [["t-n"]]),
                                                 direction="up"))
    for d in range(6):
        for route in DEPTH_ROUTES:
            r = route([f"t-{d}"], M)
            assert r.value == ext(-d) and r.certainty == CONDITIONAL
    assert all(route(["0"], M).value == NEG_INF for route in DEPTH_ROUTES)


def test_periodic_coproduct_of_residue_fields():
    k = PresentedModule.residue_field(R2)
    P = RuleComplex(R2, (0, 0), {0: k}, TailRule("periodic", up=[k]))
    assert sup_inf_amp(P).sup == POS_INF
    for route in DEPTH_ROUTES:
        r = route(["x", "y"], P)
        assert r.value == NEG_INF and r.certainty == EXACT
    assert width_koszul(["x", "y"], P).value == ext(0)
    assert width_tor(["x", "y"], P).value == ext(0)


@given(st.lists(homogeneous_polys(), min_size=1, max_size=2), homogeneous_polys(), st.integers(-2, 2))
def test_routes_agree_on_random_modules(a, f, j):
    R = RINGS["QQ"]
    a = [g for g in a if g] or [R.parse("x")]
    M = PresentedModule.cyclic(R, [f]) if f else PresentedModule.free(R, 1)
    C = Complex.from_module(M, j)
    vals = {route(a, C).value for route in DEPTH_ROUTES}
    assert len(vals) == 1
    assert width_koszul(a, C).value == width_tor(a, C).value


@given(st.integers(-3, 3))
def test_shift_arithmetic(j):
    C = tensor(koszul(["x"], R2), Complex.from_module(PresentedModule.cyclic(R2, ["y^2"])))
    m = ["x", "y"]
    assert depth_koszul(m, shift(C, j)).value == depth_koszul(m, C).value - j
    assert width_koszul(m, shift(C, j)).value == width_koszul(m, C).value + j
