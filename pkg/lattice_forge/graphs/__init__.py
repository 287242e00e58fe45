from lattice_forge.graphs.multigraph import (
    MultiGraph,
    adjacency_matrix,
    adjacency_spectrum,
    build_graph,
    path_count,
    triangle_count,
)
from lattice_forge.graphs.spanning_tree import SpanningTreeDecomposition, spanning_tree

__all__ = [
    "MultiGraph",
    "SpanningTreeDecomposition",
    "adjacency_matrix",
    "adjacency_spectrum",
    "build_graph",
    "path_count",
    "spanning_tree",
    "triangle_count",
]
