"""Invariants of numerical semigroups generated by quadratic sequences.

S(a,b) is generated by y_n = n*a + C(n,2)*b.  The package computes the
minimum index-weight function mu and its analytic envelope, membership,
Apery sets, Frobenius number, genus, and embedding dimension, replays
the exhaustive searches that locate every exceptional pair, and checks
each closed form against an independent brute-force oracle.
"""

from .embedding import (
    MinimalGeneratorSet,
    embedding_dimension,
    is_minimal_closed,
    minimal_generators_closed,
    minimal_generators_oracle,
    verify_decomposition,
)
from .invariants import (
    AperySet,
    InvariantSummary,
    apery_closed,
    apery_oracle,
    bounds_certified,
    frobenius,
    frobenius_bounds,
    frobenius_oracle,
    genus,
    genus_bounds,
    genus_oracle,
    invariant_summary,
)
from .mu import (
    ORACLE_LIMIT,
    BoundProfile,
    MuTable,
    adopt_shared_table,
    bound_profiles,
    bounds_csv,
    combined_bound,
    gauss_bound,
    inverse_triangular,
    largest_index,
    load_table,
    lower_bound,
    mu,
    mu_oracle,
    save_table,
    shared_table,
    triangular,
)
from .search import (
    EMBED_DECOMPOSITIONS,
    EXPECTED_DROP_PAIRS,
    EXPECTED_RESIDUE_PAIRS,
    EXTRA_INDEX_ROWS,
    Certificate,
    DropHit,
    GAnalysis,
    ResidueHit,
    SearchReport,
    decomposition_certificates,
    exception_certificates,
    g_analysis,
    g_local_max,
    g_of,
    g_solve,
    search_embedding_eq,
    search_mu_drop,
)
from .semigroup import (
    EXCEPTIONAL_CASES,
    EXCEPTIONAL_PAIRS,
    ExceptionalCase,
    MembershipTable,
    NotANumericalSemigroup,
    QuadraticSemigroup,
    contains,
    describe,
    generator,
    lift_contains,
    make_semigroup,
    membership_bound,
    membership_table,
    mu_ab_closed,
    mu_ab_oracle,
    mu_ab_shift,
    project,
    require_nontrivial,
    shared_membership,
)

__version__ = "0.1.0"

__all__ = [
    "ORACLE_LIMIT",
    "EMBED_DECOMPOSITIONS",
    "EXCEPTIONAL_CASES",
    "EXCEPTIONAL_PAIRS",
    "EXPECTED_DROP_PAIRS",
    "EXPECTED_RESIDUE_PAIRS",
    "EXTRA_INDEX_ROWS",
    "AperySet",
    "BoundProfile",
    "Certificate",
    "DropHit",
    "ExceptionalCase",
    "GAnalysis",
    "InvariantSummary",
    "MembershipTable",
    "MinimalGeneratorSet",
    "MuTable",
    "NotANumericalSemigroup",
    "QuadraticSemigroup",
    "ResidueHit",
    "SearchReport",
    "adopt_shared_table",
    "apery_closed",
    "apery_oracle",
    "bound_profiles",
    "bounds_certified",
    "bounds_csv",
    "combined_bound",
    "contains",
    "decomposition_certificates",
    "describe",
    "embedding_dimension",
    "exception_certificates",
    "frobenius",
    "frobenius_bounds",
    "frobenius_oracle",
    "g_analysis",
    "g_local_max",
    "g_of",
    "g_solve",
    "gauss_bound",
    "generator",
    "genus",
    "genus_bounds",
    "genus_oracle",
    "inverse_triangular",
    "invariant_summary",
    "is_minimal_closed",
    "largest_index",
    "lift_contains",
    "load_table",
    "lower_bound",
    "make_semigroup",
    "membership_bound",
    "membership_table",
    "minimal_generators_closed",
    "minimal_generators_oracle",
    "mu",
    "mu_ab_closed",
    "mu_ab_oracle",
    "mu_ab_shift",
    "mu_oracle",
    "project",
    "require_nontrivial",
    "save_table",
    "search_embedding_eq",
    "search_mu_drop",
    "shared_membership",
    "shared_table",
    "triangular",
    "verify_decomposition",
]
