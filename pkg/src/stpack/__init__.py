"""Spanning-tree packing, edge connectivity and spectral radius toolkit."""

__version__ = "0.1.0"

from .canon import canonical_form
from .graph import (
    Graph,
    GraphError,
    VertexPartition,
    build_graph,
    cross_edge_count,
    induced_edge_count,
    min_degree,
    partition_cross_edges,
    read_edge_list,
    write_edge_list,
)

__all__ = [
    "Graph",
    "GraphError",
    "VertexPartition",
    "build_graph",
    "canonical_form",
    "cross_edge_count",
    "induced_edge_count",
    "min_degree",
    "partition_cross_edges",
    "read_edge_list",
    "write_edge_list",
    "__version__",
]
