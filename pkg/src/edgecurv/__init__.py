"""Edge-based curvatures of graphs, directed graphs and directed hypergraphs."""

from .batch import CurvatureRecord, compute_records
from .directed import directed_degree_difference, forman_directed, ollivier_directed, vertex_flow
from .errors import ContractViolation, CurvatureUndefined, EdgecurvError, NetworkParseError
from .hypergraph import (
    degree_difference_hyper,
    forman_hyper,
    hyper_distance,
    in_measure,
    ollivier_hyper,
    out_measure,
)
from .netstats import assortativity, histogram, summarize
from .network import (
    Edge,
    Hyperedge,
    Network,
    from_edges,
    largest_component,
    parse_edge_list,
    parse_hyperedges,
)
from .transport import TransportInstance, TransportPlan, solve_transport
from .undirected import degree_difference, forman, ollivier

__version__ = "0.1.0"

__all__ = [
    "ContractViolation",
    "CurvatureRecord",
    "CurvatureUndefined",
    "Edge",
    "EdgecurvError",
    "Hyperedge",
    "Network",
    "NetworkParseError",
    "TransportInstance",
    "TransportPlan",
    "assortativity",
    "compute_records",
    "degree_difference",
    "degree_difference_hyper",
    "directed_degree_difference",
    "forman",
    "forman_directed",
    "forman_hyper",
    "from_edges",
    "histogram",
    "hyper_distance",
    "in_measure",
    "largest_component",
    "ollivier",
    "ollivier_directed",
    "ollivier_hyper",
    "out_measure",
    "parse_edge_list",
    "parse_hyperedges",
    "solve_transport",
    "summarize",
    "vertex_flow",
]
