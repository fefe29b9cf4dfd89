"""Covering radius, quasi-perfection and classification of small linear codes over GF(2) and GF(3)."""

from __future__ import annotations

from .appendix import CorpusEntry, EntryCheck, corpus, verify_corpus
from .code import (
    LinearCode,
    WeightDistribution,
    dual_shortening,
    macwilliams_transform,
    min_distance,
    puncture,
    residual,
    shorten,
    weight,
    weight_distribution,
)
from .codefile import format_code_file, parse_code_file, read_code_file, write_code_file
from .equivalence import (
    CanonicalKey,
    apply_monomial,
    canonical_code,
    canonical_form,
    equivalent,
    fingerprint,
    random_monomial,
)
from .errors import *  # noqa: F401,F403
from .gf import CodeMatrix, FieldElement, dual, parity_check, rank, rref, systematize
from .radii import (
    CodeReport,
    CosetLeaderDistribution,
    classify_radius_class,
    coset_leader_distribution,
    coset_test_budget,
    covering_radius,
    covering_radius_by_coset_reps,
    is_quasi_perfect_fast,
    packing_radius,
)
from .search import (
    AT_LEAST,
    EXACT,
    ChainResult,
    ClassificationResult,
    ClassificationTask,
    ScanRow,
    chain_extend,
    chain_run,
    classify,
    classify_via_residuals,
    extend_enumerate,
    qp_scan,
)

__version__ = "0.1.0"
