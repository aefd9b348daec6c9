"""Local antimagic vertex colorings of corona products.

Constructs, verifies, and exactly computes local antimagic labelings of
path, cycle, and complete-graph coronas with null graphs, together with
the closed-form bounds that pin down the chromatic numbers.
"""

from .bounds import (
    BoundResult,
    ThresholdRow,
    corona_lower_bound,
    leaf_lower_bound,
    odd_cycle_threshold,
    odd_cycle_threshold_table,
    path_counting_bracket,
    path_counting_gap,
    threshold_table_csv,
)
from .constructions import (
    ConstructionCase,
    ConstructionError,
    ConstructionResult,
    LayerCompositionError,
    LayerScheme,
    classify,
    construct,
    construct_complete_k1,
    layer_extension,
)
from .graphs import (
    CoronaGraph,
    CoronaSpec,
    Family,
    Graph,
    InvalidSpecError,
    UnsupportedSpecError,
    corona,
    make_base,
    to_dot,
)
from .labelings import (
    DocumentError,
    EdgeLabeling,
    LabelingShapeError,
    VerificationReport,
    WeightVector,
    labeling_from_document,
    labeling_to_document,
    load_document,
    palette_of,
    verify,
    weights,
)
from .oracle import (
    BudgetExceededError,
    ExactResult,
    OracleInputError,
    SearchBudget,
    SearchOutcome,
    corona_automorphisms,
    count_optimal_labelings,
    exact_chi_la,
    find_labeling,
)

__version__ = "0.1.0"

__all__ = [
    "BoundResult",
    "BudgetExceededError",
    "ConstructionCase",
    "ConstructionError",
    "ConstructionResult",
    "CoronaGraph",
    "CoronaSpec",
    "DocumentError",
    "EdgeLabeling",
    "ExactResult",
    "Family",
    "Graph",
    "InvalidSpecError",
    "LabelingShapeError",
    "LayerCompositionError",
    "LayerScheme",
    "OracleInputError",
    "SearchBudget",
    "SearchOutcome",
    "ThresholdRow",
    "UnsupportedSpecError",
    "VerificationReport",
    "WeightVector",
    "classify",
    "construct",
    "construct_complete_k1",
    "corona",
    "corona_automorphisms",
    "corona_lower_bound",
    "count_optimal_labelings",
    "exact_chi_la",
    "find_labeling",
    "labeling_from_document",
    "labeling_to_document",
    "layer_extension",
    "leaf_lower_bound",
    "load_document",
    "make_base",
    "odd_cycle_threshold",
    "odd_cycle_threshold_table",
    "palette_of",
    "path_counting_bracket",
    "path_counting_gap",
    "threshold_table_csv",
    "to_dot",
    "verify",
    "weights",
]
