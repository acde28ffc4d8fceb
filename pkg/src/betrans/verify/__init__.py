"""Verification harness: structured reports and the canonical check suite."""

from .checks import (
    CopsonData,
    check_embedding_inequality,
    check_factorization,
    check_intertwining,
    check_multiplicator_ratio,
    check_norm_vs_sup,
    check_seminorm_identity,
    check_unbounded_growth,
    check_unitarity,
    copson_check,
)
from .registry import REGISTRY, check_ids, run_all, run_checks
from .report import FAIL, PASS, SKIPPED, XFAIL_PASS, VerificationReport

__all__ = [
    "VerificationReport",
    "PASS",
    "FAIL",
    "SKIPPED",
    "XFAIL_PASS",
    "CopsonData",
    "check_intertwining",
    "check_factorization",
    "check_unitarity",
    "check_unbounded_growth",
    "check_seminorm_identity",
    "check_embedding_inequality",
    "check_multiplicator_ratio",
    "check_norm_vs_sup",
    "copson_check",
    "REGISTRY",
    "check_ids",
    "run_all",
    "run_checks",
]
