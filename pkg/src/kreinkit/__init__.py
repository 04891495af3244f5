"""kreinkit: completions, factorizations, liftings, and extensions with a negative index.

Finite-dimensional constructive operator theory over the reals: symmetric
2x2 block completions with prescribed negative index, J-space
factorizations and liftings of contractions, extremal quasi-contractive
selfadjoint extensions, and Cayley-transform construction of the
Friedrichs and Krein-von Neumann extensions of symmetric linear relations.
"""

from . import errors
from .completion import (
    CompletionSolution,
    IncompleteBlock,
    assemble,
    completable,
    is_solution,
    minimal_completion,
    schur_inertia,
)
from .factor import (
    BicontractionCase,
    JFactorResult,
    JSpace,
    bicontraction_classify,
    douglas_factor,
    inertia_balance,
    schur_negativity_factor,
)
from .lifting import (
    JContractionData,
    JIsometryReport,
    LiftParameters,
    column_extend,
    defect_data,
    extract_column_parameter,
    extract_lift_parameters,
    extract_row_parameter,
    j_isometry_test,
    kernel_map_check,
    lift,
    range_intersection,
    row_extend,
    row_index_formula,
    verify_link_identities,
)
from .quasicontraction import (
    ExtremalPair,
    SymmetricColumn,
    extremal_extensions,
    is_member,
    krein_uniqueness_criterion,
    solvable,
    split_counts,
    uniqueness_gap,
)
from .relations import (
    FormData,
    LinearRelation,
    RelationClass,
    RelationInertia,
    antitonicity_check,
    as_bounded_operator,
    classify,
    ext_membership,
    form_a1,
    friedrichs_krein,
    inverse_duality_check,
    krein_uniqueness_relation,
    relation_inertia,
    relation_leq,
    resolvent_interval_check,
)
from .spectral import (
    Inertia,
    SpectralDecomposition,
    inertia_of,
    loewner_leq,
    modulus_power,
    moore_penrose_power,
    negativity,
    range_factor,
    signature_of,
    spectral_decompose,
)
from .tolerances import ToleranceProfile, default_tolerances, set_default_tolerances

__version__ = "0.1.0"

__all__ = [
    "errors",
    "ToleranceProfile",
    "default_tolerances",
    "set_default_tolerances",
    "Inertia",
    "SpectralDecomposition",
    "spectral_decompose",
    "inertia_of",
    "negativity",
    "signature_of",
    "modulus_power",
    "moore_penrose_power",
    "range_factor",
    "loewner_leq",
    "IncompleteBlock",
    "CompletionSolution",
    "completable",
    "minimal_completion",
    "is_solution",
    "assemble",
    "schur_inertia",
    "JSpace",
    "JFactorResult",
    "BicontractionCase",
    "inertia_balance",
    "schur_negativity_factor",
    "douglas_factor",
    "bicontraction_classify",
    "JContractionData",
    "LiftParameters",
    "JIsometryReport",
    "defect_data",
    "verify_link_identities",
    "column_extend",
    "extract_column_parameter",
    "row_extend",
    "extract_row_parameter",
    "row_index_formula",
    "lift",
    "extract_lift_parameters",
    "kernel_map_check",
    "range_intersection",
    "j_isometry_test",
    "SymmetricColumn",
    "ExtremalPair",
    "split_counts",
    "solvable",
    "extremal_extensions",
    "is_member",
    "uniqueness_gap",
    "krein_uniqueness_criterion",
    "LinearRelation",
    "RelationInertia",
    "RelationClass",
    "FormData",
    "classify",
    "relation_inertia",
    "as_bounded_operator",
    "form_a1",
    "friedrichs_krein",
    "relation_leq",
    "ext_membership",
    "resolvent_interval_check",
    "inverse_duality_check",
    "antitonicity_check",
    "krein_uniqueness_relation",
]
