import logging

import numpy as np
from scipy import linalg

from lattice_forge.graphs.multigraph import MultiGraph, adjacency_matrix
from lattice_forge.utils.datatypes import HuckelResult
from lattice_forge.utils.errors import InvalidInputError
from lattice_forge.utils.settings import DEGENERATE_LEVEL_TOL

logger = logging.getLogger(__name__)


def _levels(eigenvalues: np.ndarray, tol: float) -> list[list[int]]:
    """Group indices of descending eigenvalues into degenerate levels."""
    groups: list[list[int]] = []
    for k, value in enumerate(eigenvalues):
        if groups and abs(eigenvalues[groups[-1][0]] - value) <= tol:
            groups[-1].append(k)
        else:
            groups.append([k])
    return groups


def huckel(g: MultiGraph, n_electrons: int, degeneracy_tol: float = DEGENERATE_LEVEL_TOL) -> HuckelResult:
    """Molecular orbitals of the adjacency matrix filled from the largest eigenvalue.

    Args:
        g (MultiGraph): simple connected molecular graph.
        n_electrons (int): pi electrons, between 0 and 2|V|.
        degeneracy_tol (float): eigenvalues closer than this share a level.

    Returns:
        HuckelResult: eigenvalues (descending, adjacency convention), orbitals as columns,
            occupations, per-vertex density and the HOMO/LUMO eigenvalues.
    """
    if not g.is_simple():
        raise InvalidInputError("Hückel analysis requires a simple graph")
    if not 0 <= n_electrons <= 2 * g.vertex_count:
        raise InvalidInputError(f"n_electrons must be in [0, {2 * g.vertex_count}], got {n_electrons}")

    eigenvalues, orbitals = linalg.eigh(adjacency_matrix(g).astype(float))
    eigenvalues, orbitals = eigenvalues[::-1], orbitals[:, ::-1]

    occupations = np.zeros(g.vertex_count)
    remaining = float(n_electrons)
    fractional = False
    for level in _levels(eigenvalues, degeneracy_tol):
        if remaining <= 0:
            break
        capacity = 2.0 * len(level)
        filled = min(remaining, capacity)
        occupations[level] = filled / len(level)
        if len(level) > 1 and filled < capacity:
            fractional = True
        remaining -= filled
    if fractional:
        logger.warning("Open-shell Fermi level: occupation averaged over the degenerate level")

    density = (orbitals**2) @ occupations
    occupied = np.flatnonzero(occupations > 0)
    empty = np.flatnonzero(occupations == 0)
    return HuckelResult(
        eigenvalues=eigenvalues,
        orbitals=orbitals,
        occupations=occupations,
        density=density,
        fractional=fractional,
        homo=float(eigenvalues[occupied[-1]]) if len(occupied) else None,
        lumo=float(eigenvalues[empty[0]]) if len(empty) else None,
    )
