"""Byte exporters for realizations and surfaces: json, xyz, obj and csv."""
import logging
from typing import Optional, Sequence, Union

import numpy as np
import polars as pl

from lattice_forge.io.documents import face_vertices, geometry_document, realization_document
from lattice_forge.realization.supercell import supercell
from lattice_forge.surface.curvature import curvature_map
from lattice_forge.surface.discrete_surface import DiscreteSurface
from lattice_forge.utils.datatypes import CrystalRealization
from lattice_forge.utils.errors import InvalidInputError
from lattice_forge.utils.settings import DEFAULT_ELEMENT

logger = logging.getLogger(__name__)

Exportable = Union[CrystalRealization, DiscreteSurface]


def _coordinate(x: float) -> str:
    return f"{x:.12f}"


def _check_dimension(dimension: int) -> None:
    if dimension > 3:
        raise InvalidInputError(f"xyz and obj need dimension <= 3, got {dimension}; use json")


def _as_3d(points: np.ndarray) -> np.ndarray:
    return np.pad(points, ((0, 0), (0, 3 - points.shape[1])))


def _box(r: CrystalRealization, counts: Optional[Sequence[int]]) -> tuple[int, ...]:
    return tuple(counts) if counts is not None else (1,) * r.dimension


def building_block_ends(r: CrystalRealization) -> np.ndarray:
    """Far end o(e) + e of every base edge."""
    origins = [o for o, _ in r.graph.edges]
    return r.vertex_positions[origins] + r.edge_vectors


def _reject_counts(fmt: str, counts: Optional[Sequence[int]]) -> None:
    if counts is not None:
        raise InvalidInputError(f"supercell counts need the xyz or obj format, not {fmt}")


def export_json(obj: Exportable, counts: Optional[Sequence[int]] = None, name: str = "", **_) -> bytes:
    _reject_counts("json", counts)
    if isinstance(obj, CrystalRealization):
        doc = realization_document(obj, name=name)
    else:
        doc = geometry_document(obj, name=name)
    return doc.model_dump_json(indent=2).encode("utf-8") + b"\n"


def export_xyz(
    obj: Exportable,
    counts: Optional[Sequence[int]] = None,
    include_edge_ends: bool = False,
    element: str = DEFAULT_ELEMENT,
    name: str = "",
    **_,
) -> bytes:
    """XYZ atom list; realizations are expanded over `counts` cells first.

    With `include_edge_ends` the far ends of the building block edges are
    appended as extra atoms.
    """
    if isinstance(obj, CrystalRealization):
        _check_dimension(obj.dimension)
        points = supercell(obj, _box(obj, counts)).points
        if include_edge_ends:
            points = np.vstack([points, building_block_ends(obj)])
        points = _as_3d(points)
    else:
        points = obj.positions
    lines = [str(len(points)), name or "lattice_forge"]
    lines += [f"{element} " + " ".join(_coordinate(x) for x in point) for point in points]
    return ("\n".join(lines) + "\n").encode("utf-8")


def export_obj(obj: Exportable, counts: Optional[Sequence[int]] = None, name: str = "", **_) -> bytes:
    """Wavefront OBJ with `v` vertices, `l` bond lines and, for closed surfaces, `f` faces."""
    faces: list[list[int]] = []
    if isinstance(obj, CrystalRealization):
        _check_dimension(obj.dimension)
        cell = supercell(obj, _box(obj, counts))
        points = _as_3d(cell.points)
        bonds = list(cell.edges)
    else:
        points = obj.positions
        bonds = [(i, j) for i, j, label in obj.edges() if not any(label)]
        if not obj.is_periodic:
            faces = face_vertices(obj)
    lines = [f"o {name or 'lattice_forge'}"]
    lines += ["v " + " ".join(_coordinate(x) for x in point) for point in points]
    lines += [f"l {i + 1} {j + 1}" for i, j in bonds]
    lines += ["f " + " ".join(str(v + 1) for v in face) for face in faces]
    return ("\n".join(lines) + "\n").encode("utf-8")


def export_csv(obj: Exportable, counts: Optional[Sequence[int]] = None, **_) -> bytes:
    """Per-vertex table: coordinates, plus curvature and local area for surfaces."""
    _reject_counts("csv", counts)
    if isinstance(obj, CrystalRealization):
        points = obj.vertex_positions
        frame = pl.DataFrame({f"x{k + 1}": points[:, k] for k in range(points.shape[1])})
    else:
        report = curvature_map(obj)
        frame = pl.DataFrame(
            {
                "x": obj.positions[:, 0],
                "y": obj.positions[:, 1],
                "z": obj.positions[:, 2],
                "gauss_curvature": report.gauss_curvature,
                "mean_curvature": report.mean_curvature,
                "local_area": report.local_area,
            }
        )
    frame = frame.with_row_index("vertex")
    return frame.write_csv().encode("utf-8")


EXPORTERS = {"json": export_json, "xyz": export_xyz, "obj": export_obj, "csv": export_csv}


def export(obj: Exportable, fmt: str = "json", **options) -> bytes:
    """Serialize `obj` in one of json, xyz, obj or csv."""
    if fmt not in EXPORTERS:
        raise InvalidInputError(f"Unknown export format {fmt!r}. Valid formats are {sorted(EXPORTERS)}")
    logger.debug("Exporting %s as %s", type(obj).__name__, fmt)
    return EXPORTERS[fmt](obj, **options)
