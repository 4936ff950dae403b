"""Exact verification toolkit for vector-set contextuality games.

Constructs the totally antisymmetric d-party state, decides the
uncolorability of vector sets, evaluates the associated guessing game with
exact rational probabilities on both the quantum and classical sides, and
certifies the state as the unique perfect-strategy state through rational
constraint systems.
"""

from .catalog import (
    builtin_names,
    catalog_ceg18,
    catalog_conway_kochen31,
    catalog_peres24,
    load_builtin,
    merged_peres,
    merged_window_bases,
)
from .exact_linalg import (
    determinant,
    gram_schmidt,
    inner_product,
    norm_squared,
    null_space_basis,
    orthocomplement_basis,
    primitive,
    rank,
    row_echelon,
)
from .game import (
    ClassicalBoundReport,
    GameSpec,
    PerfectStrategyReport,
    SearchBudgetError,
    classical_value,
    classical_value_report,
    measurement_algebra_check,
    quantum_joint_distribution,
    verify_perfect_strategy,
    winning_predicate,
)
from .ks_sets import (
    Context,
    KSDecision,
    OrthogonalityGraph,
    VectorSet,
    build_orthogonality_graph,
    check_completeness,
    check_ks_property,
    complete_set,
    enumerate_contexts,
    from_json_dict,
    parity_certificate,
    to_json_dict,
    validate_assignment,
)
from .selftest import (
    CoefficientVector,
    ConstraintRow,
    SelftestReport,
    SelftestSolution,
    assemble_and_solve,
    general_d_selftest,
    pqs_constraint_rows,
    support_restriction_constraints,
    verify_unique_supersinglet,
)
from .supersinglet import (
    Amplitude,
    ProductBasisExpansion,
    SupersingletState,
    amplitude,
    build_supersinglet,
    check_unitary_invariance,
    check_unitary_invariance_exact,
    levi_civita,
    random_signed_permutation,
    random_special_unitary,
    reexpand_in_basis,
)

__version__ = "0.1.0"

__all__ = [
    "Amplitude",
    "ClassicalBoundReport",
    "CoefficientVector",
    "ConstraintRow",
    "Context",
    "GameSpec",
    "KSDecision",
    "OrthogonalityGraph",
    "PerfectStrategyReport",
    "ProductBasisExpansion",
    "SearchBudgetError",
    "SelftestReport",
    "SelftestSolution",
    "SupersingletState",
    "VectorSet",
    "amplitude",
    "assemble_and_solve",
    "build_orthogonality_graph",
    "build_supersinglet",
    "builtin_names",
    "catalog_ceg18",
    "catalog_conway_kochen31",
    "catalog_peres24",
    "check_completeness",
    "check_ks_property",
    "check_unitary_invariance",
    "check_unitary_invariance_exact",
    "classical_value",
    "classical_value_report",
    "complete_set",
    "determinant",
    "enumerate_contexts",
    "from_json_dict",
    "general_d_selftest",
    "gram_schmidt",
    "inner_product",
    "levi_civita",
    "load_builtin",
    "measurement_algebra_check",
    "merged_peres",
    "merged_window_bases",
    "norm_squared",
    "null_space_basis",
    "orthocomplement_basis",
    "parity_certificate",
    "pqs_constraint_rows",
    "primitive",
    "quantum_joint_distribution",
    "random_signed_permutation",
    "random_special_unitary",
    "rank",
    "reexpand_in_basis",
    "row_echelon",
    "support_restriction_constraints",
    "to_json_dict",
    "validate_assignment",
    "verify_perfect_strategy",
    "verify_unique_supersinglet",
    "winning_predicate",
]
