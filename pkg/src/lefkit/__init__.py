"""Exact computations with artinian graded algebras: Hilbert functions,
inverse systems, and Weak/Strong Lefschetz checks with certificates."""

from .bounds import (
    HilbertSeq,
    binomial_expansion,
    gotzmann_growth,
    green_bound,
    is_o_sequence,
    is_si_sequence,
    macaulay_bound,
)
from .fields import GF, QQ, FieldSpec, Scalar
from .inverse import DualModule, algebra_from_dual, derivative_span, dual_hilbert, watanabe_check
from .lefschetz import LinearForm, mult_map, sample_general_forms, slp_check, wlp_check
from .parsing import parse_poly, parse_ring
from .polyring import Form, RingCtx
from .quotient import GradedIdeal, QuotientAlgebra, check_exact_sequence, hilbert_function

__version__ = "0.1.0"

__all__ = [
    "DualModule",
    "FieldSpec",
    "Form",
    "GF",
    "GradedIdeal",
    "HilbertSeq",
    "LinearForm",
    "QQ",
    "QuotientAlgebra",
    "RingCtx",
    "Scalar",
    "algebra_from_dual",
    "binomial_expansion",
    "check_exact_sequence",
    "derivative_span",
    "dual_hilbert",
    "gotzmann_growth",
    "green_bound",
    "hilbert_function",
    "is_o_sequence",
    "is_si_sequence",
    "macaulay_bound",
    "mult_map",
    "parse_poly",
    "parse_ring",
    "sample_general_forms",
    "slp_check",
    "watanabe_check",
    "wlp_check",
]
