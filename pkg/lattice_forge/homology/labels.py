"""Label maps H1 -> Z^d and the bases adapted to them.

A label assigns every edge a translation in Z^d; summing labels along a cycle
gives its period. The functions here go both ways: from labels to a split
cycle basis, and from a basis (or a set of vanishing cycles) to labels.
"""
import logging
from typing import Optional, Sequence

from sympy import Matrix, eye, zeros

from lattice_forge.graphs.multigraph import MultiGraph
from lattice_forge.graphs.spanning_tree import SpanningTreeDecomposition, spanning_tree
from lattice_forge.homology.chains import ChainVector, is_cycle
from lattice_forge.homology.cycle_basis import (
    CycleBasis,
    cotree_coordinates,
    cycle_basis,
)
from lattice_forge.utils.errors import BasisError, InvalidInputError
from lattice_forge.utils.exact import integer_matrix, is_integral, row_echelon_transform, to_int_rows

logger = logging.getLogger(__name__)

Labels = tuple[tuple[int, ...], ...]


def validate_labels(g: MultiGraph, labels: Sequence[Sequence[int]]) -> Labels:
    if len(labels) != g.edge_count:
        raise InvalidInputError(f"got {len(labels)} labels for {g.edge_count} edges")
    labels = tuple(tuple(int(x) for x in label) for label in labels)
    dims = {len(label) for label in labels}
    if len(dims) > 1:
        raise InvalidInputError(f"labels have mixed dimensions {sorted(dims)}")
    if dims == {0}:
        raise InvalidInputError("labels must have dimension at least 1")
    return labels


def label_of_chain(chain: ChainVector, labels: Labels) -> tuple[int, ...]:
    d = len(labels[0])
    total = [0] * d
    for c, label in zip(chain.coefficients, labels):
        if c:
            for i in range(d):
                total[i] += c * label[i]
    return tuple(total)


def label_map_matrix(chains: Sequence[ChainVector], labels: Labels) -> Matrix:
    """d x k matrix whose column j is the label of chains[j]."""
    d = len(labels[0])
    if not chains:
        return zeros(d, 0)
    return Matrix([label_of_chain(c, labels) for c in chains]).T


def check_labeled_basis(basis: CycleBasis, labels: Labels) -> None:
    """Period cycles must map to the standard generators and the rest to zero."""
    d = len(labels[0])
    if basis.period_count != d:
        raise BasisError(f"basis declares {basis.period_count} periods but labels have dimension {d}")
    expected = eye(d).row_join(zeros(d, basis.rank - d))
    if label_map_matrix(basis.chains, labels) != expected:
        raise BasisError("basis override does not split the label map into periods and vanishing cycles")


def _reduce_against(row: list[int], others: Sequence[list[int]]) -> tuple[list[int], bool]:
    changed = False
    for other in others:
        norm_other = sum(x * x for x in other)
        if norm_other == 0:
            continue
        dot = sum(a * b for a, b in zip(row, other))
        q = round(dot / norm_other)
        if q == 0:
            continue
        candidate = [a - q * b for a, b in zip(row, other)]
        if sum(x * x for x in candidate) < sum(x * x for x in row):
            row, changed = candidate, True
    return row, changed


def _normalize_sign(row: list[int]) -> list[int]:
    for x in row:
        if x != 0:
            return row if x > 0 else [-y for y in row]
    return row


def label_split_basis(
    g: MultiGraph, labels: Sequence[Sequence[int]], tree: Optional[SpanningTreeDecomposition] = None
) -> CycleBasis:
    """Integer basis of H1 whose first d cycles map to the generators of Z^d and the rest to 0.

    Args:
        g (MultiGraph): base graph.
        labels (Sequence[Sequence[int]]): one translation in Z^d per edge.
        tree (Optional[SpanningTreeDecomposition]): tree defining the starting fundamental basis.

    Returns:
        CycleBasis: period cycles first, then the reduced kernel of the label map.
    """
    labels = validate_labels(g, labels)
    tree = tree or spanning_tree(g)
    d = len(labels[0])
    fundamental = cycle_basis(g, tree)
    b = fundamental.rank
    if b < d:
        raise BasisError("labels do not span Z^d")

    phi = label_map_matrix(fundamental.chains, labels)
    h, p, rank = row_echelon_transform(to_int_rows(phi.T))
    if rank < d:
        raise BasisError("labels do not span Z^d")
    h_top = Matrix(h[:d])
    if abs(h_top.det()) != 1:
        raise BasisError("label image is a proper sublattice")

    transform = integer_matrix(p).T * _block_diag(h_top.inv().T, eye(b - d))
    rows = to_int_rows(transform.T * fundamental.matrix())

    periods, kernel = rows[:d], rows[d:]
    changed = True
    while changed:
        changed = False
        for i in range(len(kernel)):
            kernel[i], moved = _reduce_against(kernel[i], kernel[:i] + kernel[i + 1 :])
            changed = changed or moved
    for i in range(d):
        periods[i], _ = _reduce_against(periods[i], kernel)
    kernel = sorted(
        (_normalize_sign(row) for row in kernel),
        key=lambda row: (sum(x * x for x in row), tuple(-x for x in row)),
    )

    chains = tuple(ChainVector(tuple(row)) for row in periods + kernel)
    basis = CycleBasis(chains=chains, period_count=d)
    check_labeled_basis(basis, labels)
    logger.info("Label split: %s periods, %s vanishing cycles", d, b - d)
    return basis


def _block_diag(upper: Matrix, lower: Matrix) -> Matrix:
    n, m = upper.rows, lower.rows
    out = zeros(n + m, n + m)
    out[:n, :n] = upper
    out[n:, n:] = lower
    return out


def max_abelian_labels(
    g: MultiGraph, basis: CycleBasis, tree: Optional[SpanningTreeDecomposition] = None
) -> Labels:
    """Labels of the maximal abelian covering in the coordinates of `basis`.

    Tree edges get 0; cotree edge l gets row l of the inverse of the cotree
    coordinate matrix, so alpha_i is sent to the i-th generator of Z^b.
    """
    tree = tree or spanning_tree(g)
    b = basis.rank
    if b == 0:
        raise InvalidInputError("no periodicity")
    coords = cotree_coordinates(tree, basis.chains)
    if coords.det() == 0:
        raise BasisError("basis cycles are linearly dependent")
    inverse = coords.inv()
    if not is_integral(inverse):
        raise BasisError("basis is not a Z-basis of H1")
    labels = [(0,) * b for _ in range(g.edge_count)]
    for row, edge in enumerate(tree.cotree_edges):
        labels[edge] = tuple(int(x) for x in inverse.row(row))
    return tuple(labels)


def vanishing_labels(
    g: MultiGraph, vanish: Sequence[ChainVector], tree: Optional[SpanningTreeDecomposition] = None
) -> Labels:
    """Labels in Z^(b-k) whose kernel on H1 is exactly the span of the k `vanish` cycles."""
    tree = tree or spanning_tree(g)
    b, k = g.betti_number, len(vanish)
    for index, chain in enumerate(vanish):
        if chain.dimension != g.edge_count or not is_cycle(g, chain):
            raise BasisError(f"vanishing chain {index + 1} is not a cycle")
    if k >= b:
        raise BasisError(f"{k} vanishing cycles leave no periods in H1 of rank {b}")
    if k == 0:
        return max_abelian_labels(g, cycle_basis(g, tree), tree)

    h, p, rank = row_echelon_transform(to_int_rows(cotree_coordinates(tree, vanish).T))
    if rank < k:
        raise BasisError("vanishing cycles are linearly dependent")
    if abs(Matrix(h[:k]).det()) != 1:
        raise BasisError("vanishing cycles do not span a saturated sublattice of H1")

    labels = [(0,) * (b - k) for _ in range(g.edge_count)]
    for column, edge in enumerate(tree.cotree_edges):
        labels[edge] = tuple(p[row][column] for row in range(k, b))
    return tuple(labels)
