"""Exact Lebesgue constants of the L2 projection onto linear splines with
equally spaced knots on [0, 1]."""

from .gram import GramSpec, InverseGramClosedForm, gram_matrix, inverse_gram_entry
from .lebesgue import NormReport, dg0, g, g_via_p, h, norm, phi, verify_theorems
from .numbers import LAMBDA, QuadInt, quad_mul, quad_pow
from .oracle import OracleResult, lebesgue_function, oracle_norm
from .sequences import SeqPair, seq

__all__ = [
    "GramSpec",
    "InverseGramClosedForm",
    "gram_matrix",
    "inverse_gram_entry",
    "NormReport",
    "dg0",
    "g",
    "g_via_p",
    "h",
    "norm",
    "phi",
    "verify_theorems",
    "LAMBDA",
    "QuadInt",
    "quad_mul",
    "quad_pow",
    "OracleResult",
    "lebesgue_function",
    "oracle_norm",
    "SeqPair",
    "seq",
]
