"""Cyclic and constacyclic trace codes for b-symbol read channels.

Builds the irreducible cyclic code ``{(Tr(beta alpha^i))_i}`` over GF(q) and
its constacyclic shortening, and checks by exhaustive enumeration with exact
rational arithmetic that their b-symbol distances meet the Plotkin-like bound
``K <= d / (d - n (q^b - 1) / q^b)`` with equality.
"""
from .bounds import (
    VerificationReport,
    b_weight_distribution,
    check_equi_b_distance,
    min_b_distance,
    plotkin_rhs,
    theta_b,
    verify_construction,
)
from .codes import Code, CodeParams, codeword, derive_params, parity_check_poly, \
    shortened_codeword
from .field import FieldCtx, build_field, ord_mod
from .kernels import BACKEND as KERNEL_BACKEND
from .metric import Word, b_distance, b_weight, pi_b
from .search import SearchGrid, emit_report, run_search

__version__ = "0.1.0"

__all__ = [
    "Code", "CodeParams", "FieldCtx", "KERNEL_BACKEND", "SearchGrid",
    "VerificationReport", "Word", "b_distance", "b_weight", "b_weight_distribution",
    "build_field", "check_equi_b_distance", "codeword", "derive_params", "emit_report",
    "min_b_distance", "ord_mod", "parity_check_poly", "pi_b", "plotkin_rhs",
    "run_search", "shortened_codeword", "theta_b", "verify_construction",
]
