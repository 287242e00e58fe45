import pytest
from sympy import Matrix

from lattice_forge.graphs import MultiGraph
from lattice_forge.homology import (
    ChainVector,
    basis_from_chains,
    boundary,
    chain_inner_product,
    cycle_basis,
    gram_matrix,
    is_cycle,
    label_of_chain,
    label_split_basis,
    max_abelian_labels,
    vanishing_labels,
)
from lattice_forge.realization.allotropes import bouquet, hexagonal_base, k4_base
from lattice_forge.realization.solvers import crystal_graph
from lattice_forge.utils.errors import BasisError, InvalidInputError
from tests.conftest import crystal


def chain(*coefficients):
    return ChainVector(tuple(coefficients))


def test_boundary_of_an_edge():
    g = hexagonal_base()
    assert boundary(g, ChainVector.edge(3, 0)) == (-1, 1)
    assert boundary(g, ChainVector.edge(3, 0, reversed_=True)) == (1, -1)


def test_loops_have_no_boundary():
    assert is_cycle(bouquet(2), chain(3, -1))


def test_boundary_rejects_wrong_dimension():
    with pytest.raises(InvalidInputError):
        boundary(hexagonal_base(), chain(1, 0))


def test_chain_formatting():
    assert str(chain(1, 0, -1)) == "e1 - e3"
    assert str(chain(0, -2, 1)) == "-2e2 + e3"
    assert str(chain(0, 0)) == "0"


def test_fundamental_cycles_of_the_theta_graph():
    basis = cycle_basis(hexagonal_base())
    assert [c.coefficients for c in basis.chains] == [(-1, 1, 0), (-1, 0, 1)]
    assert gram_matrix(basis) == Matrix([[2, 1], [1, 2]])


def test_cycle_basis_rank_is_betti_number():
    g = k4_base()
    basis = cycle_basis(g)
    assert basis.rank == g.betti_number == 3
    assert all(is_cycle(g, c) for c in basis.chains)


def test_inner_product_is_the_dot_product():
    assert chain_inner_product(chain(1, 0, -1), chain(0, 1, -1)) == 1
    with pytest.raises(InvalidInputError):
        chain_inner_product(chain(1, 0), chain(1, 0, 0))


def test_override_basis_must_be_unimodular():
    g = hexagonal_base()
    with pytest.raises(BasisError, match="sublattice of index 2"):
        basis_from_chains(g, [chain(-2, 2, 0), chain(-1, 0, 1)])


@pytest.mark.parametrize(
    "chains, message",
    [
        ([chain(1, 0, -1)], "expected 2"),
        ([chain(1, 0, 0), chain(0, 1, -1)], "nonzero boundary"),
        ([chain(1, 0, -1), chain(-1, 0, 1)], "linearly dependent"),
    ],
)
def test_bad_override_basis(chains, message):
    with pytest.raises(BasisError, match=message):
        basis_from_chains(hexagonal_base(), chains)


def test_max_abelian_labels_of_the_override_basis():
    g = hexagonal_base()
    basis = basis_from_chains(g, [chain(1, 0, -1), chain(0, 1, -1)])
    labels = max_abelian_labels(g, basis)
    assert labels == ((0, 0), (-1, 1), (-1, 0))
    assert label_of_chain(basis.chains[0], labels) == (1, 0)
    assert label_of_chain(basis.chains[1], labels) == (0, 1)


def test_max_abelian_labels_need_cycles():
    tree_graph = MultiGraph(vertex_count=1, edges=())
    with pytest.raises(InvalidInputError, match="no periodicity"):
        max_abelian_labels(tree_graph, cycle_basis(tree_graph))


def test_kagome_label_split_finds_the_triangles():
    cg = crystal("kagome", automatic=True)
    g = crystal_graph(cg)
    basis = label_split_basis(g, cg.labels)
    assert basis.period_count == 2
    kernel = {c.coefficients for c in basis.vanishing_chains}
    assert kernel == {(1, 1, 1, 0, 0, 0), (0, 0, 0, 1, 1, 1)}
    for c in basis.period_chains:
        assert is_cycle(g, c)
    assert [label_of_chain(c, cg.labels) for c in basis.period_chains] == [(1, 0), (0, 1)]


def test_label_split_is_deterministic():
    cg = crystal("cairo")
    g = crystal_graph(cg)
    assert label_split_basis(g, cg.labels) == label_split_basis(g, cg.labels)


def test_labels_spanning_a_proper_sublattice():
    with pytest.raises(BasisError, match="proper sublattice"):
        label_split_basis(bouquet(2), [(2, 0), (0, 1)])


def test_labels_that_do_not_span():
    with pytest.raises(BasisError, match="do not span"):
        label_split_basis(bouquet(1), [(1, 0)])
    with pytest.raises(BasisError, match="do not span"):
        label_split_basis(bouquet(2), [(1, 0), (2, 0)])


def test_vanishing_labels_kill_the_declared_cycle():
    g = k4_base()
    triangle = chain(1, -1, 0, 1, 0, 0)
    assert is_cycle(g, triangle)
    labels = vanishing_labels(g, [triangle])
    assert all(len(label) == 2 for label in labels)
    assert label_of_chain(triangle, labels) == (0, 0)
    basis = label_split_basis(g, labels)
    assert basis.rank - basis.period_count == 1


def test_vanishing_labels_reject_non_saturated_cycles():
    g = hexagonal_base()
    with pytest.raises(BasisError, match="saturated"):
        vanishing_labels(g, [chain(-2, 2, 0)])


def test_vanishing_labels_leave_some_periods():
    g = hexagonal_base()
    with pytest.raises(BasisError, match="no periods"):
        vanishing_labels(g, [chain(-1, 1, 0), chain(-1, 0, 1)])
