"""Exact Casson-Gordon obstruction engine for cabled torus knot sums.

Computes Casson-Gordon sigma invariants and nullities of connected sums
of (2,p)-cables of (2,q) torus knots, enumerates isotropic characters of
the double-branched-cover linking form, and certifies topological
four-genus lower bounds by exhausting the signature inequality over all
of them.  Includes a search mode over prime tuples.
"""

from .casson_gordon import (
    Character,
    SigmaTable,
    build_sigma_tables,
    eta_cable,
    eta_knot,
    sigma_cable,
    sigma_knot,
    sigma_torus,
)
from .knots import (
    FoxMilnorResult,
    GAKnot,
    LaurentPoly,
    Piece,
    alexander_polynomial,
    build_family,
    format_knot,
    fox_milnor_check,
    is_algebraic_piece,
    parse_knot,
    torus_alexander,
)
from .linking_form import (
    PrimaryPart,
    enumerate_projective_isotropic,
    is_isotropic,
    primary_parts,
    sqrt_table,
)
from .obstruction import (
    ObstructionReport,
    PrimeResult,
    Witness,
    check_point,
    family_parameters,
    genus_lower_bound,
    verify_primary_part,
)
from .search import RANKINGS, SearchConfig, enumerate_candidates, parse_config_file, search
from .signatures import (
    RootOfUnity,
    lt_nullity,
    lt_signature,
    seifert_matrix_T2,
    signature_at_minus_one,
    signature_function_samples,
    torus_signature_at_angle,
)
from .sturm import PrecisionError, signature_nullity_exact

__version__ = "0.1.0"

__all__ = [
    "Character",
    "FoxMilnorResult",
    "GAKnot",
    "LaurentPoly",
    "ObstructionReport",
    "Piece",
    "PrecisionError",
    "PrimaryPart",
    "PrimeResult",
    "RANKINGS",
    "RootOfUnity",
    "SearchConfig",
    "SigmaTable",
    "Witness",
    "alexander_polynomial",
    "build_family",
    "build_sigma_tables",
    "check_point",
    "enumerate_candidates",
    "enumerate_projective_isotropic",
    "eta_cable",
    "eta_knot",
    "family_parameters",
    "format_knot",
    "fox_milnor_check",
    "genus_lower_bound",
    "is_algebraic_piece",
    "is_isotropic",
    "lt_nullity",
    "lt_signature",
    "parse_config_file",
    "parse_knot",
    "primary_parts",
    "search",
    "seifert_matrix_T2",
    "sigma_cable",
    "sigma_knot",
    "sigma_torus",
    "signature_at_minus_one",
    "signature_function_samples",
    "signature_nullity_exact",
    "sqrt_table",
    "torus_alexander",
    "torus_signature_at_angle",
    "verify_primary_part",
]
