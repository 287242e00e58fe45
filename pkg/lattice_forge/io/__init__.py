from lattice_forge.io.cg_format import emit_cg, load_cg, parse_cg
from lattice_forge.io.documents import (
    GeometryFile,
    RealizationDocument,
    geometry_document,
    load_geometry,
    load_realization,
    realization_document,
    realization_from_document,
    surface_from_geometry,
)
from lattice_forge.io.exporters import export

__all__ = [
    "GeometryFile",
    "RealizationDocument",
    "emit_cg",
    "export",
    "geometry_document",
    "load_cg",
    "load_geometry",
    "load_realization",
    "parse_cg",
    "realization_document",
    "realization_from_document",
    "surface_from_geometry",
]
