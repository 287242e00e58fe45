import itertools
import logging
from collections import Counter
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from lattice_forge.graphs.multigraph import MultiGraph, build_graph
from lattice_forge.utils.datatypes import CrystalRealization
from lattice_forge.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

Neighbor = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class DiscreteSurface:
    """Trivalent geometric graph in R^3, optionally periodic.

    `neighbors[v]` is the ordered triple of (vertex, translation label); the
    neighbour of v through slot i sits at positions[j] + label @ lattice. The
    stored order fixes the orientation of the normal at v.
    """

    positions: np.ndarray
    neighbors: tuple[tuple[Neighbor, ...], ...]
    lattice: Optional[np.ndarray] = None

    def __post_init__(self):
        positions = np.asarray(self.positions, dtype=float)
        if positions.ndim != 2 or positions.shape[1] != 3:
            raise InvalidInputError(f"positions must be N x 3, got shape {positions.shape}")
        object.__setattr__(self, "positions", positions)
        if self.lattice is not None:
            lattice = np.asarray(self.lattice, dtype=float).reshape(-1, 3)
            object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "neighbors", _normalize_neighbors(self.neighbors, len(positions), self.period_count))
        _check_symmetric(self.neighbors)

    @property
    def vertex_count(self) -> int:
        return len(self.positions)

    @property
    def period_count(self) -> int:
        return 0 if self.lattice is None else self.lattice.shape[0]

    @property
    def is_periodic(self) -> bool:
        return self.period_count > 0

    @property
    def edge_count(self) -> int:
        return 3 * self.vertex_count // 2

    def translation(self, label: Sequence[int]) -> np.ndarray:
        if not self.is_periodic:
            return np.zeros(3)
        return np.asarray(label, dtype=float) @ self.lattice

    def neighbor_positions(self, v: int) -> np.ndarray:
        return np.array([self.positions[j] + self.translation(label) for j, label in self.neighbors[v]])

    def edge_vectors(self, v: int) -> np.ndarray:
        """Rows e1, e2, e3: neighbour minus vertex, in stored order."""
        return self.neighbor_positions(v) - self.positions[v]

    def with_positions(self, positions: np.ndarray) -> "DiscreteSurface":
        return replace(self, positions=np.asarray(positions, dtype=float))

    def edges(self) -> list[tuple[int, int, tuple[int, ...]]]:
        """Each undirected edge once, as (i, j, label) taken from the lower endpoint."""
        seen: Counter = Counter()
        out = []
        for i, triple in enumerate(self.neighbors):
            for j, label in triple:
                reverse = (j, i, tuple(-x for x in label))
                if seen[reverse] > 0:
                    seen[reverse] -= 1
                    continue
                seen[(i, j, label)] += 1
                out.append((i, j, label))
        return out

    def to_graph(self) -> MultiGraph:
        """Quotient graph of the surface; translation labels are dropped."""
        return build_graph(self.vertex_count, [(i, j) for i, j, _ in self.edges()])


def _normalize_neighbors(neighbors, vertex_count: int, period_count: int) -> tuple[tuple[Neighbor, ...], ...]:
    if len(neighbors) != vertex_count:
        raise InvalidInputError(f"{len(neighbors)} neighbour triples for {vertex_count} vertices")
    out = []
    for v, triple in enumerate(neighbors):
        if len(triple) != 3:
            raise InvalidInputError(f"vertex {v} has {len(triple)} neighbours, expected 3")
        entries = []
        for entry in triple:
            if isinstance(entry, (int, np.integer)):
                j, label = int(entry), (0,) * period_count
            else:
                j, label = int(entry[0]), tuple(int(x) for x in entry[1])
                if not label:
                    label = (0,) * period_count
            if not 0 <= j < vertex_count:
                raise InvalidInputError(f"vertex {v} has neighbour {j} out of range")
            if len(label) != period_count:
                raise InvalidInputError(
                    f"vertex {v}: label {label} does not match {period_count} lattice rows"
                )
            entries.append((j, label))
        out.append(tuple(entries))
    return tuple(out)


def _check_symmetric(neighbors: tuple[tuple[Neighbor, ...], ...]) -> None:
    forward = Counter()
    for i, triple in enumerate(neighbors):
        for j, label in triple:
            forward[(i, j, label)] += 1
    for (i, j, label), count in forward.items():
        if forward[(j, i, tuple(-x for x in label))] != count:
            raise InvalidInputError(f"neighbour relation is not symmetric at edge {i}-{j} {label}")


def surface_from_realization(
    r: CrystalRealization, ccw: bool = True, counts: Optional[Sequence[int]] = None
) -> DiscreteSurface:
    """Periodic surface on a trivalent 2D or 3D realization, over a box of `counts` cells.

    Planar realizations are lifted to z = 0; with `ccw` their neighbours are
    ordered counter-clockwise seen from +z. In 3D the incidence order is kept.
    The surface lattice rows are the realization periods scaled by `counts`.
    """
    if r.dimension not in (2, 3):
        raise InvalidInputError(f"surfaces need a 2D or 3D realization, got dimension {r.dimension}")
    counts = tuple(int(c) for c in (counts or (1,) * r.dimension))
    if len(counts) != r.dimension or any(c < 1 for c in counts):
        raise InvalidInputError(f"expected {r.dimension} positive cell counts, got {counts}")
    g = r.graph
    pad = 3 - r.dimension
    block = np.pad(r.vertex_positions, ((0, 0), (0, pad)))
    periods = np.pad(r.lattice.rows, ((0, 0), (0, pad)))
    edge_vectors = np.pad(r.edge_vectors, ((0, 0), (0, pad)))

    cells = list(itertools.product(*(range(c) for c in counts)))
    cell_index = {cell: i for i, cell in enumerate(cells)}
    n = g.vertex_count
    positions = np.zeros((len(cells) * n, 3))
    neighbors = []
    for cell in cells:
        positions[cell_index[cell] * n : (cell_index[cell] + 1) * n] = block + np.array(cell, dtype=float) @ periods
        for v in range(n):
            darts = g.incident_half_edges(v)
            if len(darts) != 3:
                raise InvalidInputError(f"vertex {v} has degree {len(darts)}, surfaces must be trivalent")
            entries = []
            for half_edge in darts:
                edge = half_edge // 2
                sign = -1 if half_edge % 2 else 1
                target = g.half_edge_head(half_edge)
                shifted = [x + sign * l for x, l in zip(cell, r.labels[edge])]
                wrap = tuple(x // c for x, c in zip(shifted, counts))
                home = tuple(x % c for x, c in zip(shifted, counts))
                entries.append((cell_index[home] * n + target, wrap, sign * edge_vectors[edge]))
            if ccw and r.dimension == 2:
                entries.sort(key=lambda item: np.arctan2(item[2][1], item[2][0]))
            neighbors.append(tuple((j, label) for j, label, _ in entries))
    lattice = periods * np.array(counts, dtype=float)[:, None]
    return DiscreteSurface(positions=positions, neighbors=tuple(neighbors), lattice=lattice)
