from lattice_forge.surface.curvature import (
    area_first_variation_check,
    curvature_map,
    gauss_identity_residual,
    minimal_residual,
    sphere_radius,
    total_area,
    vertex_geometry,
    vertex_normals,
)
from lattice_forge.surface.discrete_surface import DiscreteSurface, surface_from_realization
from lattice_forge.surface.faces import RotationSystem, euler_stats, face_histogram, trace_faces
from lattice_forge.surface.polyhedra import TEMPLATES, cube, graphene_sheet, tetrahedron, truncated_icosahedron
from lattice_forge.surface.relaxation import relax_to_minimal

__all__ = [
    "DiscreteSurface",
    "RotationSystem",
    "TEMPLATES",
    "area_first_variation_check",
    "cube",
    "curvature_map",
    "euler_stats",
    "face_histogram",
    "gauss_identity_residual",
    "graphene_sheet",
    "minimal_residual",
    "relax_to_minimal",
    "sphere_radius",
    "surface_from_realization",
    "tetrahedron",
    "total_area",
    "trace_faces",
    "truncated_icosahedron",
    "vertex_geometry",
    "vertex_normals",
]
