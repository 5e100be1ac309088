from hypothesis import given
from hypothesis import strategies as st

from koszul_depth.algebra.fields import QQ
from koszul_depth.algebra.ring import Ring
from koszul_depth.complexes.complex import Complex
from koszul_depth.complexes.ops import koszul, shift
from koszul_depth.derived.functors import LowerBoundOnly, betti_numbers, ext_module, fd, ltensor, pd, rhom, tor
from koszul_depth.derived.resolution import direct_sum_complexes, resolve
from koszul_depth.homology.extended import NEG_INF, ext
from koszul_depth.homology.homology import homology_at
from koszul_depth.homology.modules import PresentedModule

from strategies import RINGS, homogeneous_polys

R1 = Ring(QQ, "x")
R2 = Ring(QQ, "xy")
R3 = Ring(QQ, "xyz")
S = Ring(QQ, "x", ideal=["x^2"])


def test_resolution_of_residue_field_is_koszul():
    r = resolve(PresentedModule.residue_field(R2), 24)
    assert r.complete and r.length == 2
    assert r.betti() == [1, 2, 1]
    K = koszul(["x", "y"], R2)
    assert [r.complex.rank(i) for i in range(3)] == [K.rank(i) for i in range(3)]


def test_resolution_over_dual_numbers_never_completes():
    r = resolve(PresentedModule.residue_field(S), 6)
    assert not r.complete
    assert r.betti() == [1] * 7
    assert r.certified_through == 6 and r.length == 6


def test_resolution_of_free_module():
    r = resolve(PresentedModule.free(R2, 3), 24)
    assert r.complete and r.length == 0


def test_resolution_of_coproduct():
    k = PresentedModule.residue_field(R2)
    C = Complex(R2, {0: PresentedModule.cyclic(R2, ["x"]), 2: k})
    r = resolve(C, 24)
    assert r.complete
    assert [r.complex.rank(i) for i in range(5)] == [1, 1, 1, 2, 1]
    assert fd(C).value == ext(4)
    D = direct_sum_complexes([koszul(["x"], R2), shift(koszul(["y"], R2), 1)])
    assert [D.rank(i) for i in range(3)] == [1, 2, 1]


def test_tor_residue_field_over_line():
    k = PresentedModule.residue_field(R1)
    assert tor(k, k, 0).hilbert_table(0, 3) == [1, 0, 0, 0]
    assert tor(k, k, 1).hilbert_table(0, 3) == [0, 1, 0, 0]
    assert tor(k, k, 2).is_zero()


def test_tor_with_unit():
    M = PresentedModule.cyclic(R2, ["x*y"])
    R = PresentedModule.free(R2, 1)
    assert tor(R, M, 0).hilbert_table(0, 4) == M.hilbert_table(0, 4)
    assert tor(R, M, 1).is_zero()


def test_ext_residue_field_into_ring():
    k = PresentedModule.residue_field(R2)
    R = PresentedModule.free(R2, 1)
    assert [ext_module(k, R, i).is_zero() for i in range(4)] == [True, True, False, True]
    assert ext_module(k, R, 2).hilbert_table(-3, 1) == [0, 1, 0, 0, 0]


def test_ext_with_unit_and_hom_of_cyclic():
    M = PresentedModule.cyclic(R1, ["x"])
    R = PresentedModule.free(R1, 1)
    assert ext_module(R, M, 0).hilbert_table(0, 3) == M.hilbert_table(0, 3)
    assert ext_module(R, M, 1).is_zero()
    assert ext_module(M, M, 0).hilbert_table(0, 3) == [1, 0, 0, 0]


def test_flat_dimension_examples():
    assert fd(PresentedModule.residue_field(R3)).value == ext(3)
    assert fd(PresentedModule.free(R3, 2)).value == ext(0)
    r = fd(PresentedModule.residue_field(S), cap=8)
    assert isinstance(r.value, LowerBoundOnly) and not r.exact
    assert r.value.bound == 9
    assert pd(PresentedModule.cyclic(R2, ["x", "y^2"])).value == ext(2)
    assert fd(Complex.zero(R2)).value == NEG_INF


def test_derived_certificates():
    k = PresentedModule.residue_field(S)
    D = ltensor(k, k, (0, 5), cap=8)
    assert D.is_certified(5)
    assert all(not D.vanishes(i) for i in range(6))
    E = rhom(k, k, (-5, 0), cap=8)
    assert all(not E.vanishes(i) for i in range(-5, 1))


def test_betti_numbers():
    assert betti_numbers(PresentedModule.residue_field(R3)) == [1, 3, 3, 1]


@given(st.lists(homogeneous_polys(), min_size=1, max_size=3))
def test_resolution_is_exact_and_augments(gens):
    R = RINGS["QQ"]
    gens = [g for g in gens if g]
    if not gens:
        return
    M = PresentedModule.cyclic(R, gens)
    r = resolve(M, 8)
    assert r.complete
    F = r.complex
    assert homology_at(F, 0).module.hilbert_table(0, 6) == M.hilbert_table(0, 6)
    for i in range(1, F.hi + 1):
        assert homology_at(F, i).is_zero()
    assert r.length <= 2  # Hilbert syzygy theorem
