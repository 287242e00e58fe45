import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from sympy import Matrix

from lattice_forge.graphs.multigraph import MultiGraph
from lattice_forge.graphs.spanning_tree import SpanningTreeDecomposition, spanning_tree
from lattice_forge.homology.chains import ChainVector, chain_inner_product, is_cycle
from lattice_forge.utils.errors import BasisError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleBasis:
    """Integer basis of H1 split into period cycles and vanishing cycles.

    The first `period_count` chains are sent to the standard generators of
    Z^d by the label map; the remaining ones realize to zero displacement.
    """

    chains: tuple[ChainVector, ...]
    period_count: int

    @property
    def rank(self) -> int:
        return len(self.chains)

    @property
    def period_chains(self) -> tuple[ChainVector, ...]:
        return self.chains[: self.period_count]

    @property
    def vanishing_chains(self) -> tuple[ChainVector, ...]:
        return self.chains[self.period_count :]

    def matrix(self) -> Matrix:
        """b x |E| integer matrix, one row per basis chain."""
        if not self.chains:
            return Matrix.zeros(0, 0)
        return Matrix([list(c.coefficients) for c in self.chains])


def fundamental_cycle(g: MultiGraph, tree: SpanningTreeDecomposition, edge: int) -> ChainVector:
    """Cotree edge o -> t closed by the tree path from t back to o."""
    o, t = g.edges[edge]
    chain = ChainVector.edge(g.edge_count, edge)
    chain = chain + ChainVector.from_half_edges(g.edge_count, tree.root_path(g, o))
    return chain - ChainVector.from_half_edges(g.edge_count, tree.root_path(g, t))


def cycle_basis(g: MultiGraph, tree: Optional[SpanningTreeDecomposition] = None) -> CycleBasis:
    tree = tree or spanning_tree(g)
    chains = tuple(fundamental_cycle(g, tree, edge) for edge in tree.cotree_edges)
    logger.debug("Fundamental cycle basis of rank %s", len(chains))
    return CycleBasis(chains=chains, period_count=len(chains))


def cotree_coordinates(tree: SpanningTreeDecomposition, chains: Sequence[ChainVector]) -> Matrix:
    """Coordinates of cycles in the fundamental basis: their cotree coefficients."""
    if not chains:
        return Matrix.zeros(0, len(tree.cotree_edges))
    return Matrix([[c.coefficients[e] for e in tree.cotree_edges] for c in chains])


def basis_from_chains(
    g: MultiGraph,
    chains: Sequence[ChainVector],
    period_count: Optional[int] = None,
    tree: Optional[SpanningTreeDecomposition] = None,
) -> CycleBasis:
    """Validate an explicit basis: the right number of cycles forming a Z-basis of H1."""
    tree = tree or spanning_tree(g)
    rank = g.betti_number
    if len(chains) != rank:
        raise BasisError(f"basis has {len(chains)} cycles, expected {rank}")
    for index, chain in enumerate(chains):
        if chain.dimension != g.edge_count:
            raise BasisError(f"basis cycle {index + 1} has {chain.dimension} coefficients, expected {g.edge_count}")
        if not is_cycle(g, chain):
            raise BasisError(f"basis cycle {index + 1} has nonzero boundary")
    if rank:
        det = cotree_coordinates(tree, chains).det()
        if det == 0:
            raise BasisError("basis cycles are linearly dependent")
        if abs(det) != 1:
            raise BasisError(f"basis spans a sublattice of index {abs(det)} in H1")
    period_count = rank if period_count is None else period_count
    return CycleBasis(chains=tuple(chains), period_count=period_count)


def gram_matrix(basis: CycleBasis) -> Matrix:
    """A_ij = <alpha_i, alpha_j>, exact."""
    b = basis.rank
    a = Matrix.zeros(b, b)
    for i in range(b):
        for j in range(i, b):
            a[i, j] = a[j, i] = chain_inner_product(basis.chains[i], basis.chains[j])
    if b and a.det() == 0:
        raise BasisError("Gram matrix is singular: basis cycles are dependent")
    return a
