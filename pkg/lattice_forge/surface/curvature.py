"""Curvatures of trivalent discrete surfaces.

At a vertex x with edge vectors e1, e2, e3 the normal is the unit vector of
S = e1 x e2 + e2 x e3 + e3 x e1 = (e2 - e1) x (e3 - e1). With f1 = e2 - e1 and
f2 = e3 - e1, the first fundamental form is the Gram matrix of (f1, f2) and
the second one pairs f1, f2 with the neighbour normal differences
n2 - n1, n3 - n1. K and H are the determinant and half the trace of I^-1 II.
"""
import logging
from typing import Optional, Sequence

import numpy as np

from lattice_forge.surface.discrete_surface import DiscreteSurface
from lattice_forge.utils.datatypes import AreaVariationReport, CurvatureReport, MinimalResidual, VertexGeometry
from lattice_forge.utils.errors import DegenerateVertexError
from lattice_forge.utils.settings import DEGENERACY_FACTOR

logger = logging.getLogger(__name__)


def area_vector(edge_vectors: np.ndarray) -> np.ndarray:
    e1, e2, e3 = edge_vectors
    return np.cross(e1, e2) + np.cross(e2, e3) + np.cross(e3, e1)


def _is_degenerate(edge_vectors: np.ndarray, s: np.ndarray) -> bool:
    scale = np.max(np.sum(edge_vectors**2, axis=1))
    return bool(np.linalg.norm(s) < DEGENERACY_FACTOR * scale) or scale == 0


def vertex_normals(s: DiscreteSurface) -> np.ndarray:
    normals = np.zeros((s.vertex_count, 3))
    for v in range(s.vertex_count):
        e = s.edge_vectors(v)
        area = area_vector(e)
        if _is_degenerate(e, area):
            raise DegenerateVertexError(v)
        normals[v] = area / np.linalg.norm(area)
    return normals


def _tangent_projector(n: np.ndarray) -> np.ndarray:
    return np.eye(3) - np.outer(n, n)


def vertex_geometry(s: DiscreteSurface, v: int, normals: Optional[np.ndarray] = None) -> VertexGeometry:
    """Normal, fundamental forms and curvatures at vertex `v`.

    Args:
        s (DiscreteSurface): the surface.
        v (int): vertex index.
        normals (Optional[np.ndarray]): precomputed normals of all vertices.

    Returns:
        VertexGeometry: the local geometry; II is kept unsymmetrized.
    """
    if normals is None:
        normals = vertex_normals(s)
    e = s.edge_vectors(v)
    area = area_vector(e)
    if _is_degenerate(e, area):
        raise DegenerateVertexError(v)
    n = area / np.linalg.norm(area)

    n1, n2, n3 = (normals[j] for j, _ in s.neighbors[v])
    f1, f2 = e[1] - e[0], e[2] - e[0]
    d1, d2 = n2 - n1, n3 - n1
    first = np.array([[f1 @ f1, f1 @ f2], [f2 @ f1, f2 @ f2]])
    second = -np.array([[f1 @ d1, f1 @ d2], [f2 @ d1, f2 @ d2]])
    shape = np.linalg.solve(first, second)
    return VertexGeometry(
        edge_vectors=e,
        normal=n,
        first_form=first,
        second_form=second,
        gauss_curvature=float(np.linalg.det(shape)),
        mean_curvature=float(0.5 * np.trace(shape)),
        local_area=float(0.5 * np.linalg.norm(area)),
    )


def curvature_map(s: DiscreteSurface) -> CurvatureReport:
    normals = vertex_normals(s)
    geometries = [vertex_geometry(s, v, normals) for v in range(s.vertex_count)]
    report = CurvatureReport(
        gauss_curvature=np.array([g.gauss_curvature for g in geometries]),
        mean_curvature=np.array([g.mean_curvature for g in geometries]),
        local_area=np.array([g.local_area for g in geometries]),
    )
    logger.info("Curvature map of %s vertices, total area %s", s.vertex_count, report.total_area)
    return report


def gauss_identity_residual(s: DiscreteSurface, v: int, normals: Optional[np.ndarray] = None) -> float:
    """|P(n2 - n1) x P(n3 - n1) - K (e2 - e1) x (e3 - e1)| with P the tangent projector at v."""
    if normals is None:
        normals = vertex_normals(s)
    geometry = vertex_geometry(s, v, normals)
    projector = _tangent_projector(geometry.normal)
    n1, n2, n3 = (normals[j] for j, _ in s.neighbors[v])
    e = geometry.edge_vectors
    lhs = np.cross(projector @ (n2 - n1), projector @ (n3 - n1))
    rhs = geometry.gauss_curvature * np.cross(e[1] - e[0], e[2] - e[0])
    return float(np.linalg.norm(lhs - rhs))


def total_area(s: DiscreteSurface) -> float:
    return float(sum(0.5 * np.linalg.norm(area_vector(s.edge_vectors(v))) for v in range(s.vertex_count)))


def area_first_variation_check(s: DiscreteSurface, t_values: Sequence[float]) -> AreaVariationReport:
    """Central difference of the total area along the normals against -2 sum H A."""
    normals = vertex_normals(s)
    report = curvature_map(s)
    predicted = -2.0 * report.total_mean_area
    derivatives, discrepancies = [], []
    for t in t_values:
        plus = total_area(s.with_positions(s.positions + t * normals))
        minus = total_area(s.with_positions(s.positions - t * normals))
        derivative = (plus - minus) / (2 * t)
        derivatives.append(derivative)
        discrepancies.append(abs(derivative - predicted))

    decay_rate = None
    if len(t_values) >= 2 and discrepancies[0] > 0 and discrepancies[-1] > 0:
        decay_rate = float(
            np.log(discrepancies[0] / discrepancies[-1]) / np.log(t_values[0] / t_values[-1])
        )
    return AreaVariationReport(
        t_values=tuple(float(t) for t in t_values),
        derivatives=tuple(derivatives),
        predicted=predicted,
        discrepancies=tuple(discrepancies),
        decay_rate=decay_rate,
    )


def minimal_residual(s: DiscreteSurface) -> MinimalResidual:
    """max |H| and, per vertex, |P(n2-n3) x Pe1 + P(n3-n1) x Pe2 + P(n1-n2) x Pe3|."""
    normals = vertex_normals(s)
    report = curvature_map(s)
    residuals = np.zeros(s.vertex_count)
    for v in range(s.vertex_count):
        projector = _tangent_projector(normals[v])
        n1, n2, n3 = (normals[j] for j, _ in s.neighbors[v])
        p1, p2, p3 = (projector @ e for e in s.edge_vectors(v))
        total = (
            np.cross(projector @ (n2 - n3), p1)
            + np.cross(projector @ (n3 - n1), p2)
            + np.cross(projector @ (n1 - n2), p3)
        )
        residuals[v] = np.linalg.norm(total)
    max_h = float(np.max(np.abs(report.mean_curvature))) if s.vertex_count else 0.0
    return MinimalResidual(max_mean_curvature=max_h, linear_system_residuals=residuals)


def sphere_radius(s: DiscreteSurface, tol: float = 1e-9) -> Optional[float]:
    """r if x = r n(x) at every vertex, otherwise None."""
    if s.is_periodic or s.vertex_count == 0:
        return None
    normals = vertex_normals(s)
    radii = np.einsum("ij,ij->i", s.positions, normals)
    r = float(np.mean(radii))
    if r <= 0:
        return None
    if np.max(np.linalg.norm(s.positions - radii[:, None] * normals, axis=1)) > tol * max(1.0, r):
        return None
    if np.max(np.abs(radii - r)) > tol * max(1.0, r):
        return None
    return r
