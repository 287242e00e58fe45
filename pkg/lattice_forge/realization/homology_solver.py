"""Standard realizations by orthogonal projection of edges onto H1.

Every edge e is projected onto the cycle space, written in the cycle basis
as a(e) = A^-1 b(e) with b(e)_i = <e, alpha_i>. Dropping the vanishing
coordinates and sending alpha_i to the i-th period vector gives the realized
edge vector; vertex positions follow by walking the spanning tree from v0.
"""
import logging
from typing import Optional, Sequence

import numpy as np
from scipy import linalg
from sympy import Matrix
from sympy.matrices import MatrixBase

from lattice_forge.graphs.multigraph import MultiGraph
from lattice_forge.graphs.spanning_tree import SpanningTreeDecomposition, spanning_tree
from lattice_forge.homology.cycle_basis import CycleBasis, cycle_basis, gram_matrix
from lattice_forge.homology.labels import (
    Labels,
    check_labeled_basis,
    label_split_basis,
    max_abelian_labels,
    validate_labels,
)
from lattice_forge.utils.datatypes import CrystalRealization, PeriodLattice
from lattice_forge.utils.errors import InvalidInputError, NumericalError, SingularMatrixError
from lattice_forge.utils.exact import schur_complement, to_float_array

logger = logging.getLogger(__name__)


def project_edges(a: Matrix, basis: CycleBasis) -> Matrix:
    """Exact coefficients a(e) = A^-1 b(e), one column per edge (b x |E|)."""
    if a.det() == 0:
        raise SingularMatrixError("Gram matrix is singular")
    return a.inv() * basis.matrix()


def reduce_period_gram(a: Matrix, d: int) -> Matrix:
    """B = A11 - A12 A22^-1 A21 for the leading d x d block."""
    if not 1 <= d <= a.rows:
        raise InvalidInputError(f"period count must be in [1, {a.rows}], got {d}")
    if d < a.rows and a[d:, d:].det() == 0:
        raise SingularMatrixError("vanishing block of the Gram matrix is singular")
    return schur_complement(a, d)


def cholesky_lattice(b: MatrixBase | np.ndarray) -> PeriodLattice:
    """Lower-triangular factor L of B = L L^T; its rows are the period vectors."""
    values = to_float_array(b) if isinstance(b, MatrixBase) else np.asarray(b, dtype=float)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise InvalidInputError(f"period Gram matrix must be square, got shape {values.shape}")
    if not np.allclose(values, values.T, atol=1e-12):
        raise InvalidInputError("period Gram matrix is not symmetric")
    try:
        rows = linalg.cholesky(values, lower=True)
    except linalg.LinAlgError as exc:
        raise NumericalError("period Gram matrix is not positive definite") from exc
    return PeriodLattice(rows=rows)


def tree_positions(
    g: MultiGraph,
    tree: SpanningTreeDecomposition,
    edge_vectors: np.ndarray,
    translations: np.ndarray,
) -> np.ndarray:
    """Place v0 at the origin and every other vertex along its tree path.

    `translations[e]` is labels[e] @ lattice.rows, so that
    edge_vectors[e] = x[t(e)] - x[o(e)] + translations[e].
    """
    positions = np.zeros((g.vertex_count, edge_vectors.shape[1]))
    for vertex in sorted(range(g.vertex_count), key=lambda v: tree.depth[v]):
        half_edge = tree.parent_half_edge[vertex]
        if half_edge == -1:
            continue
        edge = half_edge // 2
        step = edge_vectors[edge] - translations[edge]
        parent = g.half_edge_tail(half_edge)
        positions[vertex] = positions[parent] + (-step if half_edge % 2 else step)
    return positions


def realize_with_basis(
    g: MultiGraph,
    basis: CycleBasis,
    labels: Labels,
    tree: SpanningTreeDecomposition,
    method: str = "homology",
) -> CrystalRealization:
    d = basis.period_count
    a = gram_matrix(basis)
    coefficients = project_edges(a, basis)
    period_gram = reduce_period_gram(a, d)
    lattice = cholesky_lattice(period_gram)

    edge_vectors = to_float_array(coefficients[:d, :]).T @ lattice.rows
    translations = np.array(labels, dtype=float).reshape(g.edge_count, d) @ lattice.rows
    positions = tree_positions(g, tree, edge_vectors, translations)
    logger.info(
        "Realized %s vertices, %s edges: b=%s, d=%s, lattice volume %s",
        g.vertex_count,
        g.edge_count,
        basis.rank,
        d,
        lattice.volume,
    )
    return CrystalRealization(
        graph=g,
        labels=labels,
        vertex_positions=positions,
        edge_vectors=edge_vectors,
        lattice=lattice,
        cotree_edges=tree.cotree_edges,
        method=method,
        period_gram=period_gram,
    )


def realize_max_abelian(
    g: MultiGraph,
    basis: Optional[CycleBasis] = None,
    tree: Optional[SpanningTreeDecomposition] = None,
) -> CrystalRealization:
    """Standard realization of the maximal abelian covering (d = b).

    Args:
        g (MultiGraph): base graph.
        basis (Optional[CycleBasis]): basis override; the fundamental cycles of `tree` by default.
        tree (Optional[SpanningTreeDecomposition]): Kruskal tree in stored edge order by default.

    Returns:
        CrystalRealization: realization in the canonical gauge.
    """
    if g.betti_number == 0:
        raise InvalidInputError("no periodicity")
    tree = tree or spanning_tree(g)
    basis = basis or cycle_basis(g, tree)
    labels = max_abelian_labels(g, basis, tree)
    return realize_with_basis(g, basis, labels, tree)


def realize_periodic(
    g: MultiGraph,
    labels: Sequence[Sequence[int]],
    basis: Optional[CycleBasis] = None,
    tree: Optional[SpanningTreeDecomposition] = None,
) -> CrystalRealization:
    """Standard realization of the Z^d covering defined by `labels`."""
    labels = validate_labels(g, labels)
    tree = tree or spanning_tree(g)
    if basis is None:
        basis = label_split_basis(g, labels, tree)
    else:
        check_labeled_basis(basis, labels)
    return realize_with_basis(g, basis, labels, tree)
