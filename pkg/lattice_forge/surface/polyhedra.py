import itertools
import logging
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from lattice_forge.realization.allotropes import hexagonal_base, scaled_to_bond_length
from lattice_forge.realization.homology_solver import realize_max_abelian
from lattice_forge.surface.discrete_surface import DiscreteSurface, surface_from_realization
from lattice_forge.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

GOLDEN_RATIO = (1 + np.sqrt(5)) / 2


def _even_permutations(point: Sequence[float]) -> list[tuple[float, ...]]:
    x, y, z = point
    return [(x, y, z), (y, z, x), (z, x, y)]


def _sign_variants(point: Sequence[float]) -> set[tuple[float, ...]]:
    choices = [(c,) if c == 0 else (c, -c) for c in point]
    return set(itertools.product(*choices))


def surface_from_points(points: np.ndarray, bond_length: float, tol: float = 1e-6) -> DiscreteSurface:
    """Closed trivalent surface on a convex point set centred at the origin.

    Bonds join points at `bond_length`; neighbours are ordered counter-clockwise
    seen from outside, so normals point away from the origin.
    """
    points = np.asarray(points, dtype=float)
    pairs = cKDTree(points).query_pairs(bond_length * (1 + tol))
    adjacency: dict[int, list[int]] = {v: [] for v in range(len(points))}
    for i, j in sorted(pairs):
        if np.linalg.norm(points[i] - points[j]) >= bond_length * (1 - tol):
            adjacency[i].append(j)
            adjacency[j].append(i)

    neighbors = []
    for v, adjacent in adjacency.items():
        if len(adjacent) != 3:
            raise InvalidInputError(f"vertex {v} has {len(adjacent)} bonds of length {bond_length}")
        outward = points[v] / np.linalg.norm(points[v])
        reference = points[adjacent[0]] - points[v]
        reference -= (reference @ outward) * outward
        side = np.cross(outward, reference)

        def angle(j: int) -> float:
            e = points[j] - points[v]
            return float(np.arctan2(e @ side, e @ reference) % (2 * np.pi))

        neighbors.append(tuple(sorted(adjacent, key=angle)))
    return DiscreteSurface(positions=points, neighbors=tuple(neighbors))


def tetrahedron() -> DiscreteSurface:
    """Regular tetrahedron with circumradius sqrt(3)."""
    points = np.array([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)], dtype=float)
    return surface_from_points(points, bond_length=2 * np.sqrt(2))


def cube() -> DiscreteSurface:
    """Unit cube centred at the origin, circumradius sqrt(3)/2."""
    points = np.array(list(itertools.product((-0.5, 0.5), repeat=3)))
    return surface_from_points(points, bond_length=1.0)


def truncated_icosahedron() -> DiscreteSurface:
    """C60 with bond length 2: even permutations of the three signed seed points."""
    phi = GOLDEN_RATIO
    seeds = [(0.0, 1.0, 3 * phi), (1.0, 2 + phi, 2 * phi), (phi, 2.0, 2 * phi + 1)]
    points = sorted(
        {variant for seed in seeds for base in _even_permutations(seed) for variant in _sign_variants(base)}
    )
    return surface_from_points(np.array(points), bond_length=2.0)


def graphene_sheet(counts: Sequence[int] = (1, 1), bond_length: float = 1.0) -> DiscreteSurface:
    """Flat periodic honeycomb in the plane z = 0."""
    block = scaled_to_bond_length(realize_max_abelian(hexagonal_base()), bond_length)
    return surface_from_realization(block, ccw=True, counts=counts)


TEMPLATES = {
    "tetrahedron": tetrahedron,
    "cube": cube,
    "c60": truncated_icosahedron,
    "graphene": graphene_sheet,
}
