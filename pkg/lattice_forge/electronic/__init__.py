from lattice_forge.electronic.bands import band_radicand, dirac_scan, graphene_band
from lattice_forge.electronic.huckel import huckel
from lattice_forge.electronic.nanotube import (
    ChiralIndex,
    TubeFrame,
    build_swnt,
    classify_metallic,
    fundamental_region_size,
    length_index,
    tube_frame,
)

__all__ = [
    "ChiralIndex",
    "TubeFrame",
    "band_radicand",
    "build_swnt",
    "classify_metallic",
    "dirac_scan",
    "fundamental_region_size",
    "graphene_band",
    "huckel",
    "length_index",
    "tube_frame",
]
