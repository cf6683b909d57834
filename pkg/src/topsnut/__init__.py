"""topsnut: graph-labelling engine and graphical-password toolkit."""

from .graphs import (
    Graph,
    GraphMatrix,
    Labelling,
    TopsnutGpw,
    build_graph,
    canonical_code,
    format_graph_text,
    gpw_equal,
    gpw_from_labels,
    gpw_from_matrix,
    graph_matrix,
    parse_graph_text,
)
from .keylock import AuthRule, ChainSpec, KeyLockPair, authenticate, verify_twin_odd_graceful
from .kernels import BACKEND_NAME
from .labellings import (
    SearchBudget,
    count_labellings,
    dual_labelling,
    search_labellings,
    verify_labelling,
)
from .planar import PlanarEmbedding, recursive_mpg

__version__ = "0.1.0"

__all__ = [
    "AuthRule",
    "BACKEND_NAME",
    "ChainSpec",
    "Graph",
    "GraphMatrix",
    "KeyLockPair",
    "Labelling",
    "PlanarEmbedding",
    "SearchBudget",
    "TopsnutGpw",
    "authenticate",
    "build_graph",
    "canonical_code",
    "count_labellings",
    "dual_labelling",
    "format_graph_text",
    "gpw_equal",
    "gpw_from_labels",
    "gpw_from_matrix",
    "graph_matrix",
    "parse_graph_text",
    "recursive_mpg",
    "search_labellings",
    "verify_labelling",
]
