"""Exact enumeration and verification toolkit for alternating sign matrix
symmetry classes, their determinant generating functions, and the related
plane-partition families."""

from .asm import CLASSES, SymmetryClass, is_asm, symmetry_class
from .bipoly import BiPoly, ExactDivisionError
from .detgen import det, r_poly, t_poly, z_poly
from .enumeration import WeightedGF, count, enumerate_asms, genfun, genfun_parallel
from .exact import binom, delta, delta_product, pochhammer
from .planepart import enum_sccpp, enum_shifted_pp, enum_tri_array
from .verify import (
    FactorReport,
    VerdictReport,
    check_conjecture,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    check_theorem4,
    default_suite,
    extract_S,
    extract_v_sequence,
    extract_w_sequence,
    extract_w_v,
    factor_smooth,
)

__version__ = "1.0.0"

__all__ = [
    "BiPoly",
    "CLASSES",
    "ExactDivisionError",
    "FactorReport",
    "SymmetryClass",
    "VerdictReport",
    "WeightedGF",
    "binom",
    "check_conjecture",
    "check_theorem1",
    "check_theorem2",
    "check_theorem3",
    "check_theorem4",
    "count",
    "default_suite",
    "delta",
    "delta_product",
    "det",
    "enum_sccpp",
    "enum_shifted_pp",
    "enum_tri_array",
    "enumerate_asms",
    "extract_S",
    "extract_v_sequence",
    "extract_w_sequence",
    "extract_w_v",
    "factor_smooth",
    "genfun",
    "genfun_parallel",
    "is_asm",
    "pochhammer",
    "r_poly",
    "symmetry_class",
    "t_poly",
    "z_poly",
]
