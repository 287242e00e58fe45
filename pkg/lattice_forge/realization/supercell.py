import itertools
import logging
from typing import Sequence

import numpy as np
from rich.progress import track

from lattice_forge.utils.datatypes import CrystalRealization, Supercell
from lattice_forge.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

# Show a progress bar for boxes with at least this many cells
PROGRESS_THRESHOLD = 4096


def supercell(r: CrystalRealization, counts: Sequence[int], periodic: bool = False) -> Supercell:
    """Translate the building block over a box of lattice cells.

    Vertex v of cell n gets index cell_index(n) * |V| + v. An edge whose far
    end falls outside the box is dropped, or wrapped around the box when
    `periodic` is set.
    """
    counts = tuple(int(c) for c in counts)
    if len(counts) != r.dimension:
        raise InvalidInputError(f"expected {r.dimension} cell counts, got {len(counts)}")
    if any(c < 1 for c in counts):
        raise InvalidInputError(f"cell counts must be positive, got {counts}")

    n_vertices = r.graph.vertex_count
    cells = list(itertools.product(*(range(c) for c in counts)))
    cell_index = {cell: i for i, cell in enumerate(cells)}

    points = np.zeros((len(cells) * n_vertices, r.dimension))
    edges, wrapped = [], []
    for cell in track(
        cells,
        description="Building supercell...",
        disable=len(cells) < PROGRESS_THRESHOLD,
    ):
        base = cell_index[cell] * n_vertices
        offset = np.array(cell, dtype=float) @ r.lattice.rows
        points[base : base + n_vertices] = r.vertex_positions + offset
        for (o, t), label in zip(r.graph.edges, r.labels):
            target = tuple(n + l for n, l in zip(cell, label))
            inside = all(0 <= x < c for x, c in zip(target, counts))
            if not inside:
                if not periodic:
                    continue
                target = tuple(x % c for x, c in zip(target, counts))
            edges.append((base + o, cell_index[target] * n_vertices + t))
            wrapped.append(not inside)

    logger.debug("Supercell %s: %s points, %s edges", counts, len(points), len(edges))
    return Supercell(points=points, edges=tuple(edges), counts=counts, wrapped=tuple(wrapped))
