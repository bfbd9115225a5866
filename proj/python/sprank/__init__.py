"""Exact 2-ranks of symplectic point-subspace incidence matrices over GF(2^t).

Thin wrapper around the C++ core: closed-form ranks via the trace of a
dimension matrix, the equivalent H-type dimension sum, brute-force incidence
ranks, and the numeric verification of the admissible-SBF basis.
"""

from ._core import (
    build_A,
    build_A_prime,
    bruteforce_rank,
    d_lambda,
    dim_S,
    enumerate_htypes_leq,
    export_sms,
    filtration_basis_count,
    htype_to_type,
    num_points,
    num_subspaces,
    rank_closed_form,
    rank_odd_model,
    rank_sms,
    rank_via_htypes,
    sbf_count,
    type_to_htype,
    verify_sbf,
    weyl_basis_count,
)

__all__ = [
    "build_A",
    "build_A_prime",
    "bruteforce_rank",
    "d_lambda",
    "dim_S",
    "enumerate_htypes_leq",
    "export_sms",
    "filtration_basis_count",
    "htype_to_type",
    "num_points",
    "num_subspaces",
    "rank_closed_form",
    "rank_odd_model",
    "rank_sms",
    "rank_via_htypes",
    "sbf_count",
    "type_to_htype",
    "verify_sbf",
    "weyl_basis_count",
]
