"""Exact Buchstaber invariant computations for simplicial complexes."""

from .complexes import (
    SimplicialComplex,
    face_mask,
    face_vertices,
    minimal_nonsimplices_by_scan,
    minimal_nonsimplices_by_transversal,
    minimal_transversals,
)
from .invariant import (
    CoverBound,
    CriterionWitness,
    InvariantReport,
    SRealResult,
    XiWitness,
    analyze,
    ayzenberg_s,
    check_criteria,
    chromatic_number,
    cover_lower_bound,
    dual_lambda,
    matrix_search,
    oracle_check,
    s_real,
    validate_xi,
    verify_Lambda,
    verify_S,
    verify_nonsimplex_condition,
    xi_search,
    xi_to_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex",
    "face_mask",
    "face_vertices",
    "minimal_nonsimplices_by_scan",
    "minimal_nonsimplices_by_transversal",
    "minimal_transversals",
    "CoverBound",
    "CriterionWitness",
    "InvariantReport",
    "SRealResult",
    "XiWitness",
    "analyze",
    "ayzenberg_s",
    "check_criteria",
    "chromatic_number",
    "cover_lower_bound",
    "dual_lambda",
    "matrix_search",
    "oracle_check",
    "s_real",
    "validate_xi",
    "verify_Lambda",
    "verify_S",
    "verify_nonsimplex_condition",
    "xi_search",
    "xi_to_matrix",
    "__version__",
]
