import logging

import numpy as np

from lattice_forge.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


def band_radicand(xi1, xi2):
    """3 + 2 cos xi1 + 2 cos xi2 + 2 cos(xi1 - xi2); works on arrays."""
    return 3 + 2 * np.cos(xi1) + 2 * np.cos(xi2) + 2 * np.cos(np.subtract(xi1, xi2))


def _band_modulus(xi1, xi2):
    return np.abs(1 + np.exp(1j * np.asarray(xi1)) + np.exp(1j * np.asarray(xi2)))


def graphene_band(xi: tuple[float, float]) -> tuple[float, float]:
    """Lower and upper nearest-neighbour band at wave vector xi, E = +-|1 + e^(i xi1) + e^(i xi2)|."""
    value = float(_band_modulus(xi[0], xi[1]))
    return -value, value


def dirac_scan(grid_n: int, tol: float = 1e-9) -> list[tuple[int, int, float, float]]:
    """Grid points (i, j, xi1, xi2) of the n x n torus grid whose band gap is below `tol`."""
    if grid_n < 3:
        raise InvalidInputError(f"grid_n must be at least 3, got {grid_n}")
    steps = 2 * np.pi * np.arange(grid_n) / grid_n
    xi1, xi2 = np.meshgrid(steps, steps, indexing="ij")
    gap = 2 * _band_modulus(xi1, xi2)
    hits = np.argwhere(gap < tol)
    logger.info("Dirac scan on %s x %s grid: %s points below %s", grid_n, grid_n, len(hits), tol)
    return [(int(i), int(j), float(steps[i]), float(steps[j])) for i, j in hits]
