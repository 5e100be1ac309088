import pytest
from hypothesis import given
from hypothesis import strategies as st

from koszul_depth.algebra.fields import QQ
from koszul_depth.algebra.matrix import Matrix
from koszul_depth.algebra.ring import Ring
from koszul_depth.complexes.complex import (
    Complex, ComplexError, ModuleTemplate, RuleComplex, TailRule, complex_from_json,
)
from koszul_depth.complexes.ops import hom_complex, koszul, se_sequence_check, shift, tensor, truncate
from koszul_depth.homology.homology import homology_at, sup_inf_amp
from koszul_depth.homology.modules import PresentedModule

from strategies import RINGS, homogeneous_polys

R1 = Ring(QQ, "x")
R2 = Ring(QQ, "xy")


def hf(C, i, lo=0, hi=4):
    H = homology_at(C, i).module
    return H.hilbert_table(lo, hi) if H.ngens else [0] * (hi - lo + 1)


def mult_x():
    # 0 -> R --x--> R -> 0 in degrees 1, 0
    return Complex.free(R1, {0: 1, 1: 1}, {1: Matrix.from_strings(R1.poly_ring, [["x"]])}, {0: [0], 1: [1]})


def test_d_squared_checked():
    m = Matrix.from_strings(R1.poly_ring, [["x"]])
    with pytest.raises(ComplexError):
        Complex.free(R1, {0: 1, 1: 1, 2: 1}, {1: m, 2: m})


def test_shift_zero_is_identity():
    K = koszul(["x", "y"], R2)
    assert shift(K, 0).equals(K)


def test_shift_sign():
    S = shift(koszul(["x"], R1), 1)
    assert (S.lo, S.hi) == (1, 2)
    assert S.diff(2).to_strings() == [["-x"]]


def test_truncate_below_gives_cokernel():
    T = truncate(mult_x(), "below", 0)
    assert (T.lo, T.hi) == (0, 0)
    assert T.module(0).hilbert_table(0, 3) == [1, 0, 0, 0]


def test_truncate_above_kills_nothing_here():
    T = truncate(mult_x(), "above", 1)
    assert hf(T, 1) == [0] * 5


def test_truncate_zero_complex():
    assert truncate(Complex.zero(R1), "above", 3).is_empty
    assert truncate(Complex.zero(R1), "below", 0).is_empty


def test_tensor_unit_and_window():
    K = koszul(["x", "y"], R2)
    unit = Complex.from_module(PresentedModule.free(R2, 1))
    assert tensor(K, unit).equals(K)
    D = shift(koszul(["x"], R2), 3)
    T = tensor(K, D)
    assert (T.lo, T.hi) == (K.lo + D.lo, K.hi + D.hi)


def test_hom_unit_and_zero():
    K = koszul(["x", "y"], R2)
    unit = Complex.from_module(PresentedModule.free(R2, 1))
    assert hom_complex(unit, K).equals(K)
    assert hom_complex(K, Complex.zero(R2)).is_empty


def test_koszul_self_dual():
    K = koszul(["x", "y"], R2)
    R = Complex.from_module(PresentedModule.free(R2, 1))
    H = hom_complex(K, R)
    S = shift(K, -2)
    # equal homology after the shift, up to the internal twist by deg x + deg y
    for i in range(-3, 2):
        assert [homology_at(H, i).module.hilbert_function(d - 2) for d in range(-3, 4)] == \
            [homology_at(S, i).module.hilbert_function(d) for d in range(-3, 4)]


def test_koszul_signs():
    K = koszul(["x", "y"], R2)
    assert K.diff(1).to_strings() == [["x", "y"]]
    assert (K.diff(1) @ K.diff(2)).is_zero()
    assert sorted(map(tuple, K.diff(2).to_strings())) == [("-y",), ("x",)]


def test_koszul_on_zero():
    K = koszul(["0"], R1)
    assert homology_at(K, 0).module.ngens == 1 and homology_at(K, 1).module.ngens == 1
    assert not homology_at(K, 1).module.is_zero()


def test_les_regular_element():
    C = Complex.from_module(PresentedModule.free(R1, 1))
    r = se_sequence_check(C, "x")
    assert r.exact


def test_les_zero_element():
    C = Complex.from_module(PresentedModule.cyclic(R2, ["x"]))
    r = se_sequence_check(C, "0")
    assert r.exact
    K = tensor(koszul(["0"], R2), C)
    assert hf(K, 1) == hf(C, 0)


def test_rule_complex_json_roundtrip():
    k = PresentedModule.residue_field(R1)
    P = RuleComplex(R1, (0, 0), {0: k}, TailRule("periodic", up=[k]))
    Q = complex_from_json(R1, P.to_json())
    assert sup_inf_amp(Q).sup == sup_inf_amp(P).sup
    T = RuleComplex(Ring(QQ, "t"), (0, 3), {}, TailRule("parametric",
                    template=ModuleTemplate(Ring(QQ, "t"), 1, [["t-n"]]), direction="up"))
    assert T.module(2).relations == ((T.ring.parse("t - 2"),),)
    assert complex_from_json(T.ring, T.to_json()).module(2).relations == T.module(2).relations


def test_complex_json_roundtrip():
    K = koszul(["x", "y"], R2)
    assert complex_from_json(R2, K.to_json()).equals(K)


@given(st.lists(homogeneous_polys(), min_size=1, max_size=3))
def test_koszul_bounds_on_free(xs):
    R = RINGS["QQ"]
    xs = [x for x in xs if x]
    if not xs:
        return
    C = Complex.from_module(PresentedModule.cyclic(R, ["x^2"]))
    K = koszul(xs, R)
    s, t = sup_inf_amp(C), sup_inf_amp(tensor(K, C))
    assert s.sup <= t.sup <= s.sup + len(xs)
    assert t.inf == s.inf
    h = sup_inf_amp(hom_complex(K, C))
    assert t.sup == h.sup + len(xs)


@given(st.integers(-3, 3), st.integers(-3, 3))
def test_shift_composes(a, b):
    K = koszul(["x", "y"], R2)
    assert shift(shift(K, a), b).equals(shift(K, a + b))
