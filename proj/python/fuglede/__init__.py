"""Exact and certified checks for spectral sets and tilings of the line."""

from ._fuglede import (
    FugledeError,
    StepSet,
    build_dn,
    certify_zero_free,
    covering_report,
    difference_set,
    dset_condition,
    growth_contradiction,
    is_exact_zero,
    jensen_audit,
    lemma21_min,
    locate_real_zeros,
    orthogonality_check,
    parse_scene,
    prop31_reconstruct,
    run_cli,
    smallest_violating_n,
    tiling_factorization,
    weak_tiling_check,
    xhat,
)

__all__ = [
    "FugledeError",
    "StepSet",
    "build_dn",
    "certify_zero_free",
    "covering_report",
    "difference_set",
    "dset_condition",
    "growth_contradiction",
    "is_exact_zero",
    "jensen_audit",
    "lemma21_min",
    "locate_real_zeros",
    "orthogonality_check",
    "parse_scene",
    "prop31_reconstruct",
    "run_cli",
    "smallest_violating_n",
    "tiling_factorization",
    "weak_tiling_check",
    "xhat",
]
