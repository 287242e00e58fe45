import logging
from typing import Optional, Sequence

from sympy import Matrix, zeros

from lattice_forge.graphs.multigraph import MultiGraph
from lattice_forge.graphs.spanning_tree import SpanningTreeDecomposition, spanning_tree
from lattice_forge.homology.labels import label_split_basis, validate_labels
from lattice_forge.realization.homology_solver import cholesky_lattice
from lattice_forge.utils.datatypes import CrystalRealization
from lattice_forge.utils.errors import NumericalError, SingularMatrixError
from lattice_forge.utils.exact import to_float_array

logger = logging.getLogger(__name__)


def harmonic_coefficients(g: MultiGraph, labels: Sequence[Sequence[int]]) -> Matrix:
    """Solve the balance equations with x_v0 = 0.

    Row v of the result expresses x_v as a rational combination of the
    abstract period vectors p_1 ... p_d.
    """
    labels = validate_labels(g, labels)
    n, d = g.vertex_count, len(labels[0])
    laplacian = zeros(n, n)
    rhs = zeros(n, d)
    for (o, t), label in zip(g.edges, labels):
        if o == t:
            continue
        laplacian[o, o] += 1
        laplacian[t, t] += 1
        laplacian[o, t] -= 1
        laplacian[t, o] -= 1
        for j in range(d):
            rhs[o, j] += label[j]
            rhs[t, j] -= label[j]

    coefficients = zeros(n, d)
    if n > 1:
        block = laplacian[1:, 1:]
        if block.det() == 0:
            raise SingularMatrixError("Laplacian block is singular")
        coefficients[1:, :] = block.LUsolve(rhs[1:, :])
    return coefficients


def edge_coefficients(g: MultiGraph, labels: Sequence[Sequence[int]], coefficients: Matrix) -> Matrix:
    """m_e = x_t - x_o + label(e) in period coordinates, one row per edge."""
    rows = []
    for (o, t), label in zip(g.edges, labels):
        rows.append(coefficients.row(t) - coefficients.row(o) + Matrix([list(label)]))
    return Matrix.vstack(*rows)


def realize_harmonic_direct(
    g: MultiGraph,
    labels: Sequence[Sequence[int]],
    tree: Optional[SpanningTreeDecomposition] = None,
) -> CrystalRealization:
    """Harmonic placement first, then the period Gram that makes it standard.

    With M = sum of m_e m_e^T, the standard periods have Gram G proportional to
    M^-1; the scale is fixed by det G = 1.
    """
    labels = validate_labels(g, labels)
    tree = tree or spanning_tree(g)
    label_split_basis(g, labels, tree)
    d = len(labels[0])

    coefficients = harmonic_coefficients(g, labels)
    m = edge_coefficients(g, labels, coefficients)
    moment = m.T * m
    det = moment.det()
    if det == 0:
        raise NumericalError("degenerate harmonic image")

    gram = to_float_array(moment.inv()) * float(det) ** (1.0 / d)
    lattice = cholesky_lattice(gram)
    positions = to_float_array(coefficients) @ lattice.rows
    edge_vectors = to_float_array(m) @ lattice.rows
    logger.info("Direct solver: %s vertices, d=%s, det(M)=%s", g.vertex_count, d, det)
    return CrystalRealization(
        graph=g,
        labels=labels,
        vertex_positions=positions,
        edge_vectors=edge_vectors,
        lattice=lattice,
        cotree_edges=tree.cotree_edges,
        method="direct",
        harmonic_coefficients=coefficients,
    )
