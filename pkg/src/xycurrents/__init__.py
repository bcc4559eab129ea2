"""Exact verification engine for XY-model random currents and multigraph
counts, including the split/merge bijection and the count-level certificate
of Ginibre's correlation inequality."""

from .graph import (
    Graph,
    GraphError,
    OrientedEdge,
    SourceFunction,
    build_graph,
    cycle_graph,
    load_graph,
    oriented_edges,
    path_graph,
    single_edge,
)
from .currents import (
    Current,
    EdgeAmplitude,
    amplitude_vectors,
    enumerate_currents,
    zero_current,
)
from .multigraph import (
    Color,
    ColoredConfig,
    Direction,
    Multigraph,
    OrientedConfig,
    count_one_color,
    count_two_color,
    enumerate_configs,
    one_color_class_counts,
    sources_of_config,
    two_color_class_counts,
)
from .bijection import BijectionReport, SplitPair, merge, split, verify_bijection
from .series import (
    CoefficientReport,
    TruncatedSeries,
    amplitude_weight,
    coefficient_identity_check,
    correlation,
    ginibre_gap_counts,
    ginibre_gap_series,
    ginibre_gap_terms,
    partition_function,
    sourced_weight_sums,
)
from .oracle import MCResult, hamiltonian, mc_correlation, quadrature_correlation

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "OrientedEdge",
    "SourceFunction",
    "build_graph",
    "cycle_graph",
    "load_graph",
    "oriented_edges",
    "path_graph",
    "single_edge",
    "Current",
    "EdgeAmplitude",
    "amplitude_vectors",
    "enumerate_currents",
    "zero_current",
    "Color",
    "ColoredConfig",
    "Direction",
    "Multigraph",
    "OrientedConfig",
    "count_one_color",
    "count_two_color",
    "enumerate_configs",
    "one_color_class_counts",
    "sources_of_config",
    "two_color_class_counts",
    "BijectionReport",
    "SplitPair",
    "merge",
    "split",
    "verify_bijection",
    "CoefficientReport",
    "TruncatedSeries",
    "amplitude_weight",
    "coefficient_identity_check",
    "correlation",
    "ginibre_gap_counts",
    "ginibre_gap_series",
    "ginibre_gap_terms",
    "partition_function",
    "sourced_weight_sums",
    "MCResult",
    "hamiltonian",
    "mc_correlation",
    "quadrature_correlation",
]
