import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lattice_forge.graphs import (
    adjacency_matrix,
    adjacency_spectrum,
    build_graph,
    path_count,
    spanning_tree,
    triangle_count,
)
from lattice_forge.realization.allotropes import bouquet, hexagonal_base, k4_base
from lattice_forge.utils.errors import DisconnectedGraphError, InvalidInputError
from tests.conftest import molecule_graph


@st.composite
def loopless_multigraphs(draw):
    """Connected loopless multigraphs: a random tree plus random extra edges."""
    n = draw(st.integers(min_value=2, max_value=5))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    edges += draw(st.lists(st.sampled_from(pairs), max_size=5))
    return build_graph(n, edges)


def brute_force_walks(g, k, i, j):
    neighbors = {v: [] for v in range(g.vertex_count)}
    for o, t in g.edges:
        neighbors[o].append(t)
        neighbors[t].append(o)
    frontier = {i: 1}
    for _ in range(k):
        step = {}
        for v, ways in frontier.items():
            for w in neighbors[v]:
                step[w] = step.get(w, 0) + ways
        frontier = step
    return frontier.get(j, 0)


def test_build_graph_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError, match="graph not connected"):
        build_graph(3, [(0, 1)])


def test_build_graph_rejects_out_of_range_endpoint():
    with pytest.raises(InvalidInputError):
        build_graph(2, [(0, 2)])


def test_betti_numbers():
    assert hexagonal_base().betti_number == 2
    assert k4_base().betti_number == 3
    assert bouquet(4).betti_number == 4


def test_half_edges_reverse_with_xor():
    g = hexagonal_base()
    for h in range(2 * g.edge_count):
        assert g.half_edge_tail(h) == g.half_edge_head(h ^ 1)


def test_loop_counts_once_on_the_diagonal():
    g = bouquet(2)
    a = adjacency_matrix(g)
    assert a.tolist() == [[2]]
    assert g.degree(0) == 4
    assert a[0].sum() + g.loop_count(0) == g.degree(0)


@given(loopless_multigraphs())
@settings(max_examples=50, deadline=None)
def test_adjacency_row_sums_are_degrees(g):
    a = adjacency_matrix(g)
    assert (a == a.T).all()
    for v in range(g.vertex_count):
        assert a[v].sum() + g.loop_count(v) == g.degree(v)


@given(loopless_multigraphs(), st.integers(min_value=0, max_value=4))
@settings(max_examples=50, deadline=None)
def test_path_count_matches_walk_enumeration(g, k):
    for i, j in itertools.product(range(g.vertex_count), repeat=2):
        assert path_count(g, k, i, j) == brute_force_walks(g, k, i, j)


def test_triangle_count():
    assert triangle_count(k4_base()) == 4
    assert triangle_count(molecule_graph("benzene")) == 0


def test_triangle_count_requires_simple_graph():
    with pytest.raises(InvalidInputError):
        triangle_count(hexagonal_base())


def test_spanning_tree_in_stored_order():
    tree = spanning_tree(k4_base())
    assert tree.tree_edges == (0, 1, 2)
    assert tree.cotree_edges == (3, 4, 5)
    assert tree.parent_half_edge[0] == -1
    assert all(tree.depth[v] == 1 for v in (1, 2, 3))


def test_spanning_tree_sizes_on_parallel_edges():
    tree = spanning_tree(hexagonal_base())
    assert tree.tree_edges == (0,)
    assert tree.cotree_edges == (1, 2)


def test_benzene_spectrum():
    spectrum = adjacency_spectrum(molecule_graph("benzene"))
    np.testing.assert_allclose(spectrum, [2, 1, 1, -1, -1, -2], atol=1e-9)
