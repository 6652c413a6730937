"""Noncommutative natural numbers.

Binary trees over a single generator, identified modulo the medial rewrite
((w x) (y z)) -> ((w y) (x z)), with exact equality decision, grafting
multiplication, polynomial invariants, and search for non-cancellative
products.
"""

from ncnat._core import (
    DEFAULT_N_MAX,
    BudgetError,
    ChainVerdict,
    ClassId,
    DeformationSpec,
    Factor,
    Factorization,
    NonCancelWitness,
    Polynomial,
    RewriteSite,
    SiteError,
    StepVerdict,
    StratumStore,
    Term,
    TermParseError,
    apply_rewrite,
    enumerate_stratum,
    eval_morphism,
    load_chain,
    magnitude,
    magnitude_via_ell,
    multiply,
    oplus,
    rewrite_sites,
    stratum_size,
    verify_chain,
    __version__,
)

__all__ = [
    "DEFAULT_N_MAX",
    "BudgetError",
    "ChainVerdict",
    "ClassId",
    "DeformationSpec",
    "Factor",
    "Factorization",
    "NonCancelWitness",
    "Polynomial",
    "RewriteSite",
    "SiteError",
    "StepVerdict",
    "StratumStore",
    "Term",
    "TermParseError",
    "apply_rewrite",
    "enumerate_stratum",
    "eval_morphism",
    "load_chain",
    "magnitude",
    "magnitude_via_ell",
    "multiply",
    "oplus",
    "rewrite_sites",
    "stratum_size",
    "verify_chain",
    "__version__",
]
