"""Exact discrete Ricci curvature of graph edges and of graph products."""

from .curvature import (
    EdgeCurvatureReport,
    IdlenessFunction,
    Measure,
    edge_report,
    idleness_function,
    kappa_alpha,
    kappa_lly_assignment,
    kappa_lly_limit,
    kappa_zero,
    walk_measure,
    wasserstein,
)
from .errors import (
    CrossCheckError,
    GraphError,
    ParseError,
    PreconditionError,
    RicciError,
    UnreachableError,
)
from .graph import (
    EdgeKind,
    EdgeNeighborhood,
    Graph,
    ProductGraph,
    bfs_distance,
    cartesian_product,
    classify_edge,
    closed_neighborhood_equal,
    edge_neighborhood,
    format_edge_list,
    generate,
    parse_edge_list,
    strong_product,
)
from .transport import (
    AssignmentResult,
    TransportPlan,
    TransportProblem,
    max_over_optimal,
    opt_value,
    solve_assignment,
    solve_transport,
)

__version__ = "0.1.0"
