"""JSON documents for realizations and surfaces, validated with pydantic."""
from pathlib import Path
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from lattice_forge.graphs.multigraph import build_graph
from lattice_forge.realization.verification import energy, verify_standard
from lattice_forge.surface.discrete_surface import DiscreteSurface
from lattice_forge.surface.faces import RotationSystem, trace_faces
from lattice_forge.utils.datatypes import CrystalRealization, PeriodLattice
from lattice_forge.utils.errors import InvalidInputError


class Residuals(BaseModel):
    model_config = ConfigDict(extra="forbid")

    balance: float
    edge_sum: float
    eet: float


class RealizationDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = ""
    method: str = "homology"
    dimension: int = Field(..., ge=1)
    vertex_count: int = Field(..., ge=1)
    edges: list[tuple[int, int]]
    labels: list[list[int]]
    vertex_positions: list[list[float]]
    edge_vectors: list[list[float]]
    lattice: list[list[float]]
    cotree_edges: list[int] = []
    c: float
    normalized_energy: float
    residuals: Residuals


class NeighborRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    vertex: int = Field(..., ge=0)
    label: list[int] = []


class GeometryFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = ""
    vertices: list[list[float]]
    edges: list[tuple[int, int]] = []
    edge_labels: Optional[list[list[int]]] = None
    lattice: Optional[list[list[float]]] = None
    neighbors: Optional[list[list[NeighborRecord]]] = None
    faces: Optional[list[list[int]]] = None


def realization_document(r: CrystalRealization, name: str = "") -> RealizationDocument:
    report = verify_standard(r)
    return RealizationDocument(
        name=name,
        method=r.method,
        dimension=r.dimension,
        vertex_count=r.graph.vertex_count,
        edges=list(r.graph.edges),
        labels=[list(label) for label in r.labels],
        vertex_positions=r.vertex_positions.tolist(),
        edge_vectors=r.edge_vectors.tolist(),
        lattice=r.lattice.rows.tolist(),
        cotree_edges=list(r.cotree_edges),
        c=report.c,
        normalized_energy=energy(r).normalized_energy,
        residuals=Residuals(
            balance=report.balance_residual,
            edge_sum=report.edge_sum_residual,
            eet=report.eet_residual,
        ),
    )


def realization_from_document(doc: RealizationDocument) -> CrystalRealization:
    """Rebuild a realization from its stored coordinates; nothing is re-solved."""
    g = build_graph(doc.vertex_count, doc.edges)
    d = doc.dimension
    arrays = {
        "vertex_positions": np.array(doc.vertex_positions, dtype=float).reshape(-1, d),
        "edge_vectors": np.array(doc.edge_vectors, dtype=float).reshape(-1, d),
        "lattice": np.array(doc.lattice, dtype=float).reshape(-1, d),
    }
    if arrays["vertex_positions"].shape[0] != g.vertex_count or arrays["edge_vectors"].shape[0] != g.edge_count:
        raise InvalidInputError("realization document: positions or edge vectors do not match the graph")
    if arrays["lattice"].shape[0] != d or len(doc.labels) != g.edge_count:
        raise InvalidInputError("realization document: lattice or labels do not match the dimension")
    return CrystalRealization(
        graph=g,
        labels=tuple(tuple(label) for label in doc.labels),
        vertex_positions=arrays["vertex_positions"],
        edge_vectors=arrays["edge_vectors"],
        lattice=PeriodLattice(arrays["lattice"]),
        cotree_edges=tuple(doc.cotree_edges),
        method=doc.method,
    )


def face_vertices(s: DiscreteSurface) -> list[list[int]]:
    """Faces as vertex cycles; each face lists the tails of its half-edges."""
    system = RotationSystem.from_surface(s)
    return [[system.tail(h) for h in face] for face in trace_faces(system)]


def geometry_document(s: DiscreteSurface, name: str = "", with_faces: bool = True) -> GeometryFile:
    edges = s.edges()
    return GeometryFile(
        name=name,
        vertices=s.positions.tolist(),
        edges=[(i, j) for i, j, _ in edges],
        edge_labels=[list(label) for _, _, label in edges] if s.is_periodic else None,
        lattice=s.lattice.tolist() if s.is_periodic else None,
        neighbors=[[NeighborRecord(vertex=j, label=list(label)) for j, label in triple] for triple in s.neighbors],
        faces=face_vertices(s) if with_faces else None,
    )


def _neighbors_from_edges(doc: GeometryFile) -> list[list[tuple[int, tuple[int, ...]]]]:
    period_count = len(doc.lattice or [])
    labels = doc.edge_labels or [[0] * period_count for _ in doc.edges]
    if len(labels) != len(doc.edges):
        raise InvalidInputError(f"{len(labels)} edge labels for {len(doc.edges)} edges")
    neighbors: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in doc.vertices]
    for (i, j), label in zip(doc.edges, labels):
        if not (0 <= i < len(doc.vertices) and 0 <= j < len(doc.vertices)):
            raise InvalidInputError(f"edge ({i}, {j}) references a missing vertex")
        neighbors[i].append((j, tuple(label)))
        neighbors[j].append((i, tuple(-x for x in label)))
    return neighbors


def surface_from_geometry(doc: GeometryFile) -> DiscreteSurface:
    """Surface of a geometry document; without neighbour triples the edge order fixes the orientation."""
    if any(len(v) != 3 for v in doc.vertices):
        raise InvalidInputError("surface documents need 3D vertices")
    if doc.neighbors is not None:
        neighbors = [[(n.vertex, tuple(n.label)) for n in triple] for triple in doc.neighbors]
    else:
        neighbors = _neighbors_from_edges(doc)
    lattice = np.array(doc.lattice, dtype=float) if doc.lattice else None
    return DiscreteSurface(
        positions=np.array(doc.vertices, dtype=float),
        neighbors=tuple(tuple(triple) for triple in neighbors),
        lattice=lattice,
    )


def load_geometry(path: Path | str) -> GeometryFile:
    return GeometryFile.model_validate_json(Path(path).read_text(encoding="utf-8"))


def load_realization(path: Path | str) -> RealizationDocument:
    return RealizationDocument.model_validate_json(Path(path).read_text(encoding="utf-8"))
