"""Identifying, locating-dominating, total-dominating and dominating codes
in Sierpinski graphs S(n, k)."""

from .codes import (
    ALL_KINDS,
    Code,
    CodeKind,
    VerificationReport,
    ball,
    classify,
    is_dominating,
    is_identifying,
    is_locating_dominating,
    is_total_dominating,
    is_twin_free,
    verify,
)
from .constructions import (
    conjecture_bound,
    construct,
    identifying_code,
    locating_dominating_code,
    predicted_size,
    total_dominating_code,
)
from .graph import (
    CapacityError,
    Graph,
    ParameterError,
    SierpinskiGraph,
    complete_graph,
    export,
    new_graph,
    new_graph_recursive,
)
from .solver import (
    SolveOptions,
    SolveResult,
    Status,
    brute_force_min,
    certify_paper_value,
    min_code,
    structural_lower_bound,
)

__version__ = "0.1.0"
