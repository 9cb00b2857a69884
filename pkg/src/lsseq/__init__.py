"""Generalized LS sequences: low-discrepancy point sets in [0, 1) built
from a digit numeration system tied to Kakutani-style interval splitting,
with an exact splitting simulator, exact discrepancy computation, and the
explicit constants of the discrepancy upper bounds.
"""

from .bounds import (
    BoundReport,
    ClassicalIngredients,
    GeneralizedIngredients,
    asymptotic_ratio,
    carbone_star_coefficient,
    certification_threshold,
    classical_bound,
    classical_ingredients,
    generalized_bound,
    generalized_ingredients,
    kakutani_deviation,
)
from .counts import CountsTable, build_counts, closed_form_count, level_of
from .discrepancy import (
    DiscrepancyReport,
    brute_force_discrepancy,
    discrepancy_report,
    extreme_discrepancy,
    partition_deviation_extrema,
    partition_discrepancy,
    star_discrepancy,
)
from .errors import (
    DegenerateAlphabet,
    EmptySet,
    EmptyTuple,
    IllConditioned,
    InvalidClassicalParams,
    InvalidExpansion,
    LsSeqError,
    MultipleRoot,
    NonPositiveIndex,
    NotElementary,
    NotMember,
    OutOfRange,
    RootConditionViolated,
    TooLarge,
    UnknownFunction,
    ZeroEndpoint,
)
from .numeration import (
    DigitExpansion,
    enumerate_expansions,
    is_valid_expansion,
    phi,
    positional_weights,
    psi,
)
from .partition import (
    Partition,
    left_endpoints,
    node_positions,
    partition_at_level,
    refine,
)
from .points import BetaPoint, LsPoints, digit_buckets, horner_value
from .spectral import Params, Spectral, lambda_table, solve_spectral, validate_params

__version__ = "0.1.0"

__all__ = [
    "BetaPoint",
    "BoundReport",
    "ClassicalIngredients",
    "CountsTable",
    "DigitExpansion",
    "DiscrepancyReport",
    "GeneralizedIngredients",
    "LsPoints",
    "Params",
    "Partition",
    "Spectral",
    "asymptotic_ratio",
    "brute_force_discrepancy",
    "build_counts",
    "carbone_star_coefficient",
    "certification_threshold",
    "classical_bound",
    "classical_ingredients",
    "closed_form_count",
    "digit_buckets",
    "discrepancy_report",
    "enumerate_expansions",
    "extreme_discrepancy",
    "generalized_bound",
    "generalized_ingredients",
    "horner_value",
    "is_valid_expansion",
    "kakutani_deviation",
    "lambda_table",
    "left_endpoints",
    "level_of",
    "node_positions",
    "partition_at_level",
    "partition_deviation_extrema",
    "partition_discrepancy",
    "phi",
    "positional_weights",
    "psi",
    "refine",
    "solve_spectral",
    "star_discrepancy",
    "validate_params",
    # errors
    "LsSeqError",
    "EmptyTuple",
    "ZeroEndpoint",
    "DegenerateAlphabet",
    "RootConditionViolated",
    "MultipleRoot",
    "IllConditioned",
    "NonPositiveIndex",
    "InvalidExpansion",
    "TooLarge",
    "NotMember",
    "NotElementary",
    "EmptySet",
    "OutOfRange",
    "InvalidClassicalParams",
    "UnknownFunction",
]
