from hypothesis import given
from hypothesis import strategies as st

from koszul_depth.algebra.fields import GF, QQ
from koszul_depth.algebra.matrix import Matrix
from koszul_depth.algebra.ring import Ring
from koszul_depth.complexes.complex import ChainMap, Complex, RuleComplex, TailRule
from koszul_depth.complexes.ops import koszul, tensor, truncation_inclusion
from koszul_depth.homology.extended import NEG_INF, POS_INF, ext
from koszul_depth.homology.homology import homology_at, induced_map, sup_inf_amp
from koszul_depth.homology.modules import ModuleMap, PresentedModule, is_zero_module, socle_test
from koszul_depth.homology.oracle import oracle_homology, oracle_table

from strategies import RINGS, homogeneous_polys

R1 = Ring(QQ, "x")
R2 = Ring(QQ, "xy")


def test_koszul_homology_regular_sequence():
    K = koszul(["x", "y"], R2)
    assert homology_at(K, 0).module.hilbert_table(0, 4) == [1, 0, 0, 0, 0]
    assert homology_at(K, 1).is_zero()
    assert homology_at(K, 2).is_zero()


def test_koszul_on_killed_element():
    C = tensor(koszul(["x"], R1), Complex.from_module(PresentedModule.cyclic(R1, ["x"])))
    H1 = homology_at(C, 1).module
    assert H1.hilbert_table(0, 3) == [0, 1, 0, 0]  # R/(x) twisted by deg x


def test_zero_complex_homology():
    Z = Complex.zero(R1)
    assert all(homology_at(Z, i).is_zero() for i in range(-2, 3))


def test_identity_induces_identity():
    K = koszul(["x", "y"], R2)
    f = induced_map(ChainMap.identity(K), 0)
    assert f.equals(ModuleMap.identity(f.source))


def test_truncation_inclusion_is_iso_above():
    C = tensor(koszul(["x", "y"], R2), Complex.from_module(PresentedModule.cyclic(R2, ["x"])))
    inc = truncation_inclusion(C, 1)
    for j in (1, 2):
        f = induced_map(inc, j)
        assert f.kernel().is_zero()
        assert f.image().equals(ModuleMap.identity(f.target).image())


def test_multiplication_by_x_is_zero_on_h0():
    C = Complex.from_module(PresentedModule.cyclic(R1, ["x"]))
    f = induced_map(ChainMap.scalar(C, R1.parse("x")), 0)
    assert f.is_zero()


def test_is_zero_module():
    pr = R1.poly_ring
    assert is_zero_module(PresentedModule(R1, 2, Matrix.identity(pr, 2).columns()))
    assert not is_zero_module(PresentedModule.cyclic(R1, ["x"]))
    assert is_zero_module(PresentedModule(R1, 1, [(R1.parse("x"),), (R1.parse("1 - x"),)]))


def test_sup_inf_amp_examples():
    s = sup_inf_amp(koszul(["x", "y"], R2))
    assert s.as_tuple() == (0, 0, 0)
    z = sup_inf_amp(Complex.zero(R1))
    assert (z.sup, z.inf, z.amp, z.empty) == (NEG_INF, POS_INF, NEG_INF, True)
    k = PresentedModule.residue_field(R1)
    P = RuleComplex(R1, (0, 0), {0: k}, TailRule("periodic", up=[k]))
    p = sup_inf_amp(P)
    assert (p.sup, p.inf) == (POS_INF, ext(0))


def test_oracle_koszul():
    K = koszul(["x", "y"], R2)
    dims = oracle_homology(K, 0, 8)
    assert dims[0] == 1 and all(dims[d] == 0 for d in range(1, 9))


def test_oracle_exact_complex():
    # 0 -> R(-1) --x--> R -> R/(x) -> 0 is exact
    C = Complex(R1, {0: PresentedModule.cyclic(R1, ["x"]), 1: PresentedModule.free(R1, 1),
                     2: PresentedModule.free(R1, 1, [1])},
                {1: Matrix.from_strings(R1.poly_ring, [["1"]]), 2: Matrix.from_strings(R1.poly_ring, [["x"]])})
    for i, dims in oracle_table(C, 8).items():
        assert all(v == 0 for v in dims.values())


def test_socle():
    m1 = R1.gens()
    assert socle_test(PresentedModule.residue_field(R1), m1)
    assert not socle_test(PresentedModule.free(R1, 1), m1)
    assert socle_test(PresentedModule.cyclic(R1, ["x^2"]), m1)


def test_oracle_in_positive_characteristic():
    R = Ring(GF(3), "xy")
    K = tensor(koszul(["x^3", "y"], R), Complex.from_module(PresentedModule.cyclic(R, ["x*y"])))
    for i in range(K.lo, K.hi + 1):
        H = homology_at(K, i).module
        for d, dim in oracle_homology(K, i, 8).items():
            assert (H.hilbert_function(d) if H.ngens else 0) == dim


@given(st.lists(homogeneous_polys(), min_size=1, max_size=2), homogeneous_polys())
def test_grobner_homology_matches_oracle(xs, f):
    R = RINGS["QQ"]
    xs = [x for x in xs if x]
    if not xs:
        return
    M = PresentedModule.cyclic(R, [f]) if f else PresentedModule.free(R, 1)
    C = tensor(koszul(xs, R), Complex.from_module(M))
    table = oracle_table(C, 8)
    for i in range(C.lo, C.hi + 1):
        H = homology_at(C, i).module
        for d, dim in table[i].items():
            assert (H.hilbert_function(d) if H.ngens else 0) == dim
