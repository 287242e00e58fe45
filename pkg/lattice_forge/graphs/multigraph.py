import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx
import numpy as np
from scipy import linalg

from lattice_forge.utils.errors import DisconnectedGraphError, InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiGraph:
    """Finite connected multigraph; loops and parallel edges allowed.

    Each undirected edge is stored once as (origin, terminus). Its reversal is
    addressed through half-edges: edge k owns half-edges 2k (o -> t) and
    2k + 1 (t -> o), and `h ^ 1` reverses a half-edge.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def betti_number(self) -> int:
        return self.edge_count - self.vertex_count + 1

    def origin(self, edge: int) -> int:
        return self.edges[edge][0]

    def terminus(self, edge: int) -> int:
        return self.edges[edge][1]

    def half_edge_tail(self, half_edge: int) -> int:
        o, t = self.edges[half_edge // 2]
        return t if half_edge % 2 else o

    def half_edge_head(self, half_edge: int) -> int:
        o, t = self.edges[half_edge // 2]
        return o if half_edge % 2 else t

    def incident_half_edges(self, vertex: int) -> list[int]:
        """Half-edges leaving `vertex`, in stored edge order; a loop yields both of its half-edges."""
        out = []
        for k, (o, t) in enumerate(self.edges):
            if o == vertex:
                out.append(2 * k)
            if t == vertex:
                out.append(2 * k + 1)
        return out

    def degree(self, vertex: int) -> int:
        return sum((o == vertex) + (t == vertex) for o, t in self.edges)

    def loop_count(self, vertex: int) -> int:
        return sum(1 for o, t in self.edges if o == t == vertex)

    def is_simple(self) -> bool:
        seen = set()
        for o, t in self.edges:
            if o == t:
                return False
            key = (min(o, t), max(o, t))
            if key in seen:
                return False
            seen.add(key)
        return True

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for k, (o, t) in enumerate(self.edges):
            graph.add_edge(o, t, key=k)
        return graph


def build_graph(vertex_count: int, edge_list: Iterable[Sequence[int]]) -> MultiGraph:
    """Validate endpoints and connectivity and freeze the edge order.

    Args:
        vertex_count (int): number of vertices, at least 1.
        edge_list (Iterable[Sequence[int]]): (origin, terminus) pairs.

    Returns:
        MultiGraph: the validated graph.
    """
    if vertex_count < 1:
        raise InvalidInputError(f"vertex_count must be positive, got {vertex_count}")
    edges = []
    for index, edge in enumerate(edge_list):
        if len(edge) != 2:
            raise InvalidInputError(f"edge {index} must have two endpoints, got {tuple(edge)}")
        o, t = int(edge[0]), int(edge[1])
        if not (0 <= o < vertex_count and 0 <= t < vertex_count):
            raise InvalidInputError(
                f"edge {index} endpoint out of range: ({o}, {t}) with {vertex_count} vertices"
            )
        edges.append((o, t))
    graph = MultiGraph(vertex_count=vertex_count, edges=tuple(edges))
    if not nx.is_connected(graph.to_networkx()):
        raise DisconnectedGraphError("graph not connected")
    logger.debug("Built graph with %s vertices and %s edges", vertex_count, len(edges))
    return graph


def adjacency_matrix(g: MultiGraph) -> np.ndarray:
    """a_ij = number of edges between v_i and v_j; a_ii = number of loops at v_i."""
    a = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int64)
    for o, t in g.edges:
        if o == t:
            a[o, o] += 1
        else:
            a[o, t] += 1
            a[t, o] += 1
    return a


def path_count(g: MultiGraph, k: int, i: int, j: int) -> int:
    if k < 0:
        raise InvalidInputError(f"number of steps must be non-negative, got {k}")
    power = np.linalg.matrix_power(adjacency_matrix(g).astype(object), k)
    return int(power[i, j])


def triangle_count(g: MultiGraph) -> int:
    if not g.is_simple():
        raise InvalidInputError("triangle count requires a simple graph (no loops, no parallel edges)")
    a = adjacency_matrix(g)
    return int(np.trace(np.linalg.matrix_power(a, 3))) // 6


def adjacency_spectrum(g: MultiGraph) -> np.ndarray:
    """Eigenvalues of the adjacency matrix, descending."""
    eigenvalues = linalg.eigh(adjacency_matrix(g).astype(float), eigvals_only=True)
    return np.sort(eigenvalues)[::-1]
