from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import TYPE_CHECKING, Optional

import numpy as np

if TYPE_CHECKING:
    from sympy import Matrix

    from lattice_forge.graphs.multigraph import MultiGraph
    from lattice_forge.surface.discrete_surface import DiscreteSurface


@dataclass(frozen=True)
class PeriodLattice:
    """Row i holds the coordinates of the i-th period vector."""

    rows: np.ndarray

    @property
    def dimension(self) -> int:
        return self.rows.shape[0]

    @property
    def volume(self) -> float:
        return float(abs(np.linalg.det(self.rows)))

    def gram(self) -> np.ndarray:
        return self.rows @ self.rows.T

    def is_canonical(self, tol: float = 1e-12) -> bool:
        """Lower-triangular with strictly positive diagonal."""
        upper = np.triu(self.rows, k=1)
        return bool(np.all(np.abs(upper) <= tol) and np.all(np.diag(self.rows) > 0))


@dataclass(frozen=True)
class CrystalRealization:
    """Building block of a periodic realization.

    `edge_vectors[e] = positions[t(e)] - positions[o(e)] + labels[e] @ lattice.rows`
    for every base edge, with vertex 0 at the origin.
    """

    graph: "MultiGraph"
    labels: tuple[tuple[int, ...], ...]
    vertex_positions: np.ndarray
    edge_vectors: np.ndarray
    lattice: PeriodLattice
    cotree_edges: tuple[int, ...] = ()
    method: str = "homology"
    period_gram: Optional["Matrix"] = None
    harmonic_coefficients: Optional["Matrix"] = None

    @property
    def dimension(self) -> int:
        return self.lattice.dimension

    @property
    def standardness_constant(self) -> float:
        return float(np.sum(self.edge_vectors**2)) / self.dimension

    @property
    def cotree_endpoints(self) -> np.ndarray:
        """w_l = position(o(e_l)) + e_l for every cotree edge."""
        if not self.cotree_edges:
            return np.zeros((0, self.dimension))
        origins = [self.graph.origin(e) for e in self.cotree_edges]
        return self.vertex_positions[origins] + self.edge_vectors[list(self.cotree_edges)]

    def with_positions(self, positions: np.ndarray) -> "CrystalRealization":
        """Same lattice and labels, new vertex positions; edge vectors are recomputed."""
        positions = np.asarray(positions, dtype=float)
        edges = np.array(self.graph.edges, dtype=int).reshape(-1, 2)
        translations = np.array(self.labels, dtype=float).reshape(-1, self.dimension) @ self.lattice.rows
        vectors = positions[edges[:, 1]] - positions[edges[:, 0]] + translations
        return replace(self, vertex_positions=positions, edge_vectors=vectors, harmonic_coefficients=None)

    def transformed(self, matrix: np.ndarray) -> "CrystalRealization":
        """Apply the linear map x -> x @ matrix to positions, edge vectors and periods."""
        matrix = np.asarray(matrix, dtype=float)
        return replace(
            self,
            vertex_positions=self.vertex_positions @ matrix,
            edge_vectors=self.edge_vectors @ matrix,
            lattice=PeriodLattice(self.lattice.rows @ matrix),
            period_gram=None,
        )


@dataclass(frozen=True)
class StandardnessReport:
    balance_residual: float
    edge_sum_residual: float
    eet_residual: float
    c: float

    def is_standard(self, tol: float) -> bool:
        return max(self.balance_residual, self.edge_sum_residual, self.eet_residual) < tol

    def is_harmonic(self, tol: float) -> bool:
        return self.balance_residual < tol


@dataclass(frozen=True)
class EnergyReport:
    raw_energy: float
    normalized_energy: float
    volume: float


@dataclass(frozen=True)
class Supercell:
    """Finite patch of a realization: points plus index pairs (with wrap flags)."""

    points: np.ndarray
    edges: tuple[tuple[int, int], ...]
    counts: tuple[int, ...]
    wrapped: tuple[bool, ...] = ()


@dataclass(frozen=True)
class VertexGeometry:
    edge_vectors: np.ndarray
    normal: np.ndarray
    first_form: np.ndarray
    second_form: np.ndarray
    gauss_curvature: float
    mean_curvature: float
    local_area: float


@dataclass(frozen=True)
class CurvatureReport:
    gauss_curvature: np.ndarray
    mean_curvature: np.ndarray
    local_area: np.ndarray

    @property
    def total_area(self) -> float:
        return float(np.sum(self.local_area))

    @property
    def total_mean_area(self) -> float:
        """sum of H(x) A(x)"""
        return float(np.sum(self.mean_curvature * self.local_area))


@dataclass(frozen=True)
class AreaVariationReport:
    t_values: tuple[float, ...]
    derivatives: tuple[float, ...]
    predicted: float
    discrepancies: tuple[float, ...]
    decay_rate: Optional[float] = None


@dataclass(frozen=True)
class MinimalResidual:
    max_mean_curvature: float
    linear_system_residuals: np.ndarray

    @property
    def max_linear_system_residual(self) -> float:
        if self.linear_system_residuals.size == 0:
            return 0.0
        return float(np.max(self.linear_system_residuals))


@dataclass(frozen=True)
class EulerStats:
    face_sizes: dict[int, int]
    vertex_count: int
    edge_count: int
    face_count: int
    chi_from_counts: int
    chi_from_formula: Fraction


@dataclass(frozen=True)
class HuckelResult:
    eigenvalues: np.ndarray
    orbitals: np.ndarray
    occupations: np.ndarray
    density: np.ndarray
    fractional: bool = False
    homo: Optional[float] = None
    lumo: Optional[float] = None

    @property
    def energies(self) -> np.ndarray:
        """Orbital energies in units of |beta| (E = -lambda)."""
        return -self.eigenvalues

    @property
    def gap(self) -> Optional[float]:
        if self.homo is None or self.lumo is None:
            return None
        return self.homo - self.lumo


@dataclass(frozen=True)
class RelaxationResult:
    surface: "DiscreteSurface"
    history: list[float] = field(default_factory=list)
    converged: bool = False
    iterations: int = 0


@dataclass(frozen=True)
class CrystalGraphFile:
    """Parsed .cg document; edges are numbered in file order."""

    vertex_names: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    dimension: Optional[int] = None
    labels: Optional[tuple[tuple[int, ...], ...]] = None
    basis: tuple[tuple[int, ...], ...] = ()
    vanish: tuple[tuple[int, ...], ...] = ()
    name: str = ""

    @property
    def is_labeled(self) -> bool:
        return self.labels is not None
