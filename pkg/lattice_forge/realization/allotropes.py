import logging
from typing import Sequence

import numpy as np

from lattice_forge.graphs.multigraph import MultiGraph, build_graph
from lattice_forge.realization.homology_solver import realize_max_abelian
from lattice_forge.realization.supercell import supercell
from lattice_forge.utils.datatypes import CrystalRealization, Supercell
from lattice_forge.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


def hexagonal_base() -> MultiGraph:
    return build_graph(2, [(0, 1), (0, 1), (0, 1)])


def diamond_base() -> MultiGraph:
    return build_graph(2, [(0, 1), (0, 1), (0, 1), (0, 1)])


def k4_base() -> MultiGraph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])


def bouquet(loops: int) -> MultiGraph:
    return build_graph(1, [(0, 0)] * loops)


BASE_GRAPHS = {
    "graphene": hexagonal_base,
    "diamond": diamond_base,
    "k4": k4_base,
}


def hypercubic(d: int) -> CrystalRealization:
    """d-bouquet: identity lattice and unit edge vectors."""
    if d < 1:
        raise InvalidInputError(f"dimension must be positive, got {d}")
    return realize_max_abelian(bouquet(d))


def scaled_to_bond_length(r: CrystalRealization, bond_length: float) -> CrystalRealization:
    lengths = np.linalg.norm(r.edge_vectors, axis=1)
    if not np.allclose(lengths, lengths[0], rtol=1e-9):
        raise InvalidInputError("bonds of the standard realization have different lengths")
    return r.transformed(np.eye(r.dimension) * (bond_length / lengths[0]))


def carbon_allotrope(kind: str, counts: Sequence[int], bond_length: float = 1.0) -> Supercell:
    """Translate the standard building block of graphene, diamond or the K4 crystal.

    Args:
        kind (str): one of "graphene", "diamond", "k4".
        counts (Sequence[int]): cells along each period.
        bond_length (float): length of every bond in the output.

    Returns:
        Supercell: atoms and bonds of the patch.
    """
    if kind not in BASE_GRAPHS:
        raise InvalidInputError(f"unknown allotrope {kind!r}; choose from {sorted(BASE_GRAPHS)}")
    if bond_length <= 0:
        raise InvalidInputError(f"bond length must be positive, got {bond_length}")
    block = scaled_to_bond_length(realize_max_abelian(BASE_GRAPHS[kind]()), bond_length)
    logger.info("Building %s with %s cells", kind, tuple(counts))
    return supercell(block, counts)
