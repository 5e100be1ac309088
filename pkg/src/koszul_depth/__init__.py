"""Depth and width of complexes over polynomial rings and their quotients.

The common entry points are re-exported here; the subpackages hold the rest.
"""

from .algebra.fields import GF, QQ
from .algebra.ring import Ring
from .complexes.complex import ChainMap, Complex, RuleComplex, TailRule, complex_from_json
from .complexes.ops import hom_complex, koszul, se_sequence_check, shift, tensor, truncate
from .derived.functors import ext_module, fd, ltensor, pd, rhom, tor
from .derived.resolution import resolve
from .groebner.core import buchberger, krull_dim, normal_form, syzygies
from .groebner.ideals import colon_saturate, ideal_arith
from .homology.extended import NEG_INF, POS_INF, ExtendedInt
from .homology.homology import homology_at, induced_map, sup_inf_amp
from .homology.modules import PresentedModule, is_zero_module, socle_test
from .invariants.depth import (
    depth_at_prime, depth_ext, depth_koszul, depth_koszul_coh, depth_lc, width_koszul, width_tor,
)
from .invariants.duality import matlis_dual
from .invariants.frobenius import frobenius_pushforward

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "Ring", "ChainMap", "Complex", "RuleComplex", "TailRule", "complex_from_json",
    "hom_complex", "koszul", "se_sequence_check", "shift", "tensor", "truncate",
    "ext_module", "fd", "ltensor", "pd", "rhom", "tor", "resolve",
    "buchberger", "krull_dim", "normal_form", "syzygies", "colon_saturate", "ideal_arith",
    "NEG_INF", "POS_INF", "ExtendedInt", "homology_at", "induced_map", "sup_inf_amp",
    "PresentedModule", "is_zero_module", "socle_test",
    "depth_at_prime", "depth_ext", "depth_koszul", "depth_koszul_coh", "depth_lc", "width_koszul", "width_tor",
    "matlis_dual", "frobenius_pushforward",
]
