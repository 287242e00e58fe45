import logging
from typing import Iterable, Optional

import numpy as np

from lattice_forge.surface.curvature import curvature_map, vertex_normals
from lattice_forge.surface.discrete_surface import DiscreteSurface
from lattice_forge.utils.datatypes import RelaxationResult
from lattice_forge.utils.errors import DegenerateVertexError, InvalidInputError
from lattice_forge.utils.settings import DEFAULT_RELAX_STEP

logger = logging.getLogger(__name__)


def _max_mean_curvature(s: DiscreteSurface) -> float:
    return float(np.max(np.abs(curvature_map(s).mean_curvature)))


def _normal_displacement(s: DiscreteSurface, free: np.ndarray) -> np.ndarray:
    """Offset of each free vertex toward its neighbour centroid, along its normal."""
    normals = vertex_normals(s)
    displacement = np.zeros_like(s.positions)
    for v in np.flatnonzero(free):
        centroid = s.neighbor_positions(v).mean(axis=0)
        displacement[v] = np.dot(centroid - s.positions[v], normals[v]) * normals[v]
    return displacement


def relax_to_minimal(
    s: DiscreteSurface,
    fixed: Optional[Iterable[int]] = None,
    max_iters: int = 100,
    tol: float = 1e-9,
    step: float = DEFAULT_RELAX_STEP,
    max_halvings: int = 30,
) -> RelaxationResult:
    """Damped normal smoothing with max |H| non-increasing across accepted steps.

    Args:
        s (DiscreteSurface): starting surface; a periodic one keeps its lattice.
        fixed (Optional[Iterable[int]]): vertices that never move.
        max_iters (int): maximum number of iterations.
        tol (float): stop once max |H| falls below it.
        step (float): initial damping factor.
        max_halvings (int): step halvings tried before giving up on an iteration.

    Returns:
        RelaxationResult: the best surface found, the accepted max |H| history and a convergence flag.
    """
    fixed = set(fixed or ())
    if not s.is_periodic and not fixed:
        raise InvalidInputError("no constraints")
    outside = sorted(v for v in fixed if not 0 <= v < s.vertex_count)
    if outside:
        raise InvalidInputError(f"fixed vertices {outside} outside 0..{s.vertex_count - 1}")
    free = np.ones(s.vertex_count, dtype=bool)
    free[list(fixed)] = False

    current = s
    current_h = _max_mean_curvature(s)
    history = [current_h]
    initial_step = step
    iterations = 0
    while current_h >= tol and iterations < max_iters:
        iterations += 1
        displacement = _normal_displacement(current, free)
        accepted = False
        for _ in range(max_halvings + 1):
            candidate = current.with_positions(current.positions + step * displacement)
            try:
                candidate_h = _max_mean_curvature(candidate)
            except DegenerateVertexError:
                candidate_h = np.inf
            if candidate_h < current_h:
                accepted = True
                break
            step /= 2
        if not accepted:
            break
        current, current_h = candidate, candidate_h
        history.append(current_h)
        step = min(2 * step, initial_step)
        logger.debug("Iteration %s: max |H| = %s (step %s)", iterations, current_h, step)

    converged = current_h < tol
    if not converged:
        logger.warning(
            "Relaxation stopped after %s iterations with max |H| = %s (tol %s)", iterations, current_h, tol
        )
    return RelaxationResult(surface=current, history=history, converged=converged, iterations=iterations)
