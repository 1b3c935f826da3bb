"""Exact Roman domination invariants on small graphs and their products.

The package computes domination and Roman domination numbers, 2-packing
numbers, and efficient dominating sets with exact branch-and-bound solvers,
builds Cartesian and strong products, realizes the classical upper-bound
constructions, and checks a registry of provable bounds over instance
corpora with deterministic, machine-readable reports.
"""

from .bounds import (
    BoundRecord,
    Env,
    PremiseReport,
    SuiteSpec,
    THEOREM_ORDER,
    THEOREM_STATEMENTS,
    THEOREMS,
    check_pncn_premise,
    default_corpus,
    evaluate,
    exhaustive_corpus,
    random_corpus,
    report_to_csv,
    report_to_json,
    resolve_theorem_ids,
    run_suite,
    suite_ok,
)
from .config import DEFAULT_ENUM_GUARD, DEFAULT_MAX_WIDTH, DEFAULT_SUITE_BUDGET, max_width
from .constructions import (
    ConstructionOutcome,
    case_table_labels,
    cross_construction,
    project_max,
    replicate_construction,
    strong_case_construction,
    swap_construction,
    validate_rdf,
)
from .errors import (
    BudgetExceeded,
    CapacityError,
    Graph6Error,
    ParameterError,
    RomdomError,
)
from .families import (
    FamilySpec,
    complete,
    cycle,
    hypercube,
    make_family,
    parse_family,
    path,
    random_graph,
    spider,
    splitmix64,
    star,
)
from .graph6 import parse_graph6, write_graph6
from .graphs import (
    CARTESIAN,
    PRODUCT_KINDS,
    STRONG,
    Graph,
    bits,
    components,
    from_edges,
    is_connected,
    is_cycle_graph,
    is_path_graph,
    mask_of,
    product,
    square,
)
from .solvers import (
    InvariantResult,
    RomanFunction,
    domination_number,
    efficient_dominating_sets,
    enumerate_optimal_rdfs,
    has_full_degree_vertex,
    is_roman,
    roman_domination_number,
    roman_function_from_b2,
    two_packing_number,
)

__version__ = "0.1.0"

__all__ = [
    "BoundRecord",
    "BudgetExceeded",
    "CARTESIAN",
    "CapacityError",
    "ConstructionOutcome",
    "DEFAULT_ENUM_GUARD",
    "DEFAULT_MAX_WIDTH",
    "DEFAULT_SUITE_BUDGET",
    "Env",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "InvariantResult",
    "PRODUCT_KINDS",
    "ParameterError",
    "PremiseReport",
    "RomanFunction",
    "RomdomError",
    "STRONG",
    "SuiteSpec",
    "THEOREMS",
    "THEOREM_ORDER",
    "THEOREM_STATEMENTS",
    "bits",
    "case_table_labels",
    "check_pncn_premise",
    "complete",
    "components",
    "cross_construction",
    "cycle",
    "default_corpus",
    "domination_number",
    "efficient_dominating_sets",
    "enumerate_optimal_rdfs",
    "evaluate",
    "exhaustive_corpus",
    "from_edges",
    "has_full_degree_vertex",
    "hypercube",
    "is_connected",
    "is_cycle_graph",
    "is_path_graph",
    "is_roman",
    "make_family",
    "mask_of",
    "max_width",
    "parse_family",
    "parse_graph6",
    "path",
    "product",
    "project_max",
    "random_corpus",
    "random_graph",
    "replicate_construction",
    "report_to_csv",
    "report_to_json",
    "resolve_theorem_ids",
    "roman_domination_number",
    "roman_function_from_b2",
    "run_suite",
    "spider",
    "splitmix64",
    "square",
    "star",
    "strong_case_construction",
    "suite_ok",
    "swap_construction",
    "two_packing_number",
    "validate_rdf",
    "write_graph6",
]
