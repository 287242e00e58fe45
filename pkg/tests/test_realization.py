import numpy as np
import pytest
from sympy import Matrix, Rational

from lattice_forge.realization import (
    carbon_allotrope,
    cholesky_lattice,
    congruent,
    energy,
    harmonic_coefficients,
    hypercubic,
    inner_product_multiset,
    periodic_girth,
    realize_max_abelian,
    reduce_period_gram,
    supercell,
    verify_standard,
)
from lattice_forge.realization.allotropes import hexagonal_base
from lattice_forge.realization.solvers import covering_labels, crystal_graph
from lattice_forge.graphs import spanning_tree
from lattice_forge.utils.errors import InvalidInputError, NumericalError
from tests.conftest import SQRT2, SQRT3, SQRT6, crystal, realize

BUILT_IN = ["square", "hexagonal", "triangular", "kagome", "diamond", "gyroid", "kagome3d_1", "kagome3d_2", "cairo"]
CROSS_SOLVER = ["square", "hexagonal", "triangular", "kagome", "diamond", "gyroid", "cairo"]


def outgoing_vectors(r, v):
    vectors = []
    for (o, t), e in zip(r.graph.edges, r.edge_vectors):
        if o == v:
            vectors.append(e)
        if t == v:
            vectors.append(-e)
    return np.array(vectors)


def test_hexagonal_standard_realization():
    r = realize("hexagonal")
    np.testing.assert_allclose(r.lattice.rows, [[SQRT2, 0], [1 / SQRT2, np.sqrt(1.5)]], atol=1e-9)
    np.testing.assert_allclose(r.vertex_positions[1], [1 / SQRT2, -1 / SQRT6], atol=1e-9)
    np.testing.assert_allclose(r.edge_vectors[0], [1 / SQRT2, -1 / SQRT6], atol=1e-9)
    np.testing.assert_allclose(
        r.cotree_endpoints, [[0, np.sqrt(2 / 3)], [-1 / SQRT2, -1 / SQRT6]], atol=1e-9
    )
    assert r.lattice.is_canonical()


def test_diamond_edge_vectors():
    r = realize("diamond")
    c = -1 / (2 * SQRT3)
    expected = [
        [1 / SQRT2, -1 / SQRT6, c],
        [0, np.sqrt(2 / 3), c],
        [0, 0, 2 / SQRT3],
        [-1 / SQRT2, -1 / SQRT6, c],
    ]
    np.testing.assert_allclose(r.edge_vectors, expected, atol=1e-9)


@pytest.mark.parametrize("name, cosine", [("diamond", -1 / 3), ("hexagonal", -1 / 2)])
def test_bond_angles(name, cosine):
    r = realize(name)
    e = r.edge_vectors
    lengths = np.linalg.norm(e, axis=1)
    for i in range(len(e)):
        for j in range(len(e)):
            if i != j:
                assert e[i] @ e[j] == pytest.approx(cosine * lengths[i] * lengths[j], abs=1e-9)


def test_gyroid_coordinates():
    r = realize("gyroid")
    np.testing.assert_allclose(
        r.vertex_positions[1:],
        [
            [1 / SQRT3, 1 / (2 * SQRT6), -1 / (2 * SQRT2)],
            [-1 / SQRT3, 1 / SQRT6, 0],
            [0, -0.5 * np.sqrt(1.5), 1 / (2 * SQRT2)],
        ],
        atol=1e-9,
    )
    np.testing.assert_allclose(
        r.cotree_endpoints,
        [
            [2 / SQRT3, 1 / SQRT6, 0],
            [-1 / SQRT3, 5 / (2 * SQRT6), 1 / (2 * SQRT2)],
            [0, -0.5 * np.sqrt(1.5), 3 / (2 * SQRT2)],
        ],
        atol=1e-9,
    )


def test_triangular_period_gram_is_exact():
    r = realize("triangular")
    assert r.period_gram == Rational(1, 3) * Matrix([[2, -1], [-1, 2]])
    np.testing.assert_allclose(
        r.edge_vectors,
        [[np.sqrt(2 / 3), 0], [-1 / SQRT6, 1 / SQRT2], [-1 / SQRT6, -1 / SQRT2]],
        atol=1e-9,
    )


def test_kagome_coordinates():
    r = realize("kagome")
    assert r.period_gram == Rational(2, 3) * Matrix([[2, -1], [-1, 2]])
    np.testing.assert_allclose(r.lattice.rows, [[2 / SQRT3, 0], [-1 / SQRT3, 1]], atol=1e-9)
    np.testing.assert_allclose(r.vertex_positions[1], [1 / SQRT3, 0], atol=1e-9)
    np.testing.assert_allclose(r.vertex_positions[2], [1 / (2 * SQRT3), 0.5], atol=1e-9)
    np.testing.assert_allclose(r.cotree_endpoints[r.cotree_edges.index(3)], [-1 / SQRT3, 0], atol=1e-9)


def test_kagome_triangles_are_equilateral():
    lengths = np.linalg.norm(realize("kagome").edge_vectors, axis=1)
    assert np.ptp(lengths) < 1e-9
    assert lengths[0] == pytest.approx(1 / SQRT3, abs=1e-9)


def test_three_dimensional_kagome_lattices():
    first = realize("kagome3d_1")
    np.testing.assert_allclose(first.edge_vectors[0], [0.5, 0, 0], atol=1e-9)
    second = realize("kagome3d_2")
    np.testing.assert_allclose(second.edge_vectors[0], [0.5 * np.sqrt(1.5), 0, 0], atol=1e-9)
    np.testing.assert_allclose(second.edge_vectors[4:7], -second.edge_vectors[:3], atol=1e-9)


def test_cairo_harmonic_coefficients_are_exact():
    r = realize("cairo", method="direct")
    eighths = [(0, 0), (4, 0), (1, 2), (3, 2), (6, 1), (6, 3), (0, 4), (4, 4), (2, 5), (2, 7), (5, 6), (7, 6)]
    assert r.harmonic_coefficients == Matrix(eighths) / 8


def test_cairo_geometry():
    r = realize("cairo", method="direct")
    p1, p2 = r.lattice.rows
    assert np.linalg.norm(p1) == pytest.approx(np.linalg.norm(p2), abs=1e-9)
    assert p1 @ p2 == pytest.approx(0, abs=1e-9)

    lengths = np.linalg.norm(r.edge_vectors, axis=1)
    short, long = lengths.min(), lengths.max()
    assert long / short == pytest.approx(np.sqrt(5) / 2, rel=1e-6)

    for v in range(r.graph.vertex_count):
        vectors = outgoing_vectors(r, v)
        if len(vectors) != 3:
            continue
        unit = vectors / np.linalg.norm(vectors, axis=1)[:, None]
        cosines = sorted(unit[i] @ unit[j] for i in range(3) for j in range(i + 1, 3))
        np.testing.assert_allclose(cosines, [-3 / 5, -1 / np.sqrt(5), -1 / np.sqrt(5)], atol=1e-6)


@pytest.mark.parametrize("name", CROSS_SOLVER)
def test_solvers_agree(name):
    homology, direct = realize(name), realize(name, method="direct")
    assert congruent(homology, direct)
    np.testing.assert_allclose(inner_product_multiset(homology), inner_product_multiset(direct), atol=1e-9)
    assert verify_standard(direct).eet_residual < 1e-9


@pytest.mark.parametrize("name", BUILT_IN)
@pytest.mark.parametrize("automatic", [False, True])
def test_built_in_realizations_are_standard(name, automatic):
    report = verify_standard(realize(name, automatic=automatic))
    assert report.is_standard(1e-9)


@pytest.mark.parametrize("name", ["hexagonal", "kagome", "diamond", "kagome3d_1"])
def test_automatic_basis_gives_the_same_crystal(name):
    assert congruent(realize(name), realize(name, automatic=True))


def test_sheared_hexagonal_is_harmonic_but_not_standard():
    sheared = realize("hexagonal").transformed(np.array([[1.0, 0.5], [0.0, 1.0]]))
    report = verify_standard(sheared)
    assert report.is_harmonic(1e-9)
    assert report.eet_residual > 0.1


def test_edge_sum_vanishes_even_off_balance(rng):
    r = realize("kagome")
    moved = r.with_positions(r.vertex_positions + rng.normal(scale=0.3, size=r.vertex_positions.shape))
    report = verify_standard(moved)
    assert report.balance_residual > 1e-3
    assert report.edge_sum_residual < 1e-12


def test_hexagonal_energy():
    report = energy(realize("hexagonal"))
    assert report.raw_energy == pytest.approx(2.0)
    assert report.volume == pytest.approx(SQRT3)
    assert report.normalized_energy == pytest.approx(2 / SQRT3)


@pytest.mark.parametrize("name", ["hexagonal", "square", "kagome"])
def test_energy_is_minimal(name, rng):
    r = realize(name)
    best = energy(r).normalized_energy
    for _ in range(100):
        moved = r.with_positions(r.vertex_positions + rng.normal(scale=0.2, size=r.vertex_positions.shape))
        assert energy(moved).normalized_energy >= best - 1e-12
    for _ in range(100):
        shear = np.eye(2) + rng.normal(scale=0.3, size=(2, 2))
        if np.linalg.det(shear) <= 0.05:
            continue
        shear /= np.sqrt(np.linalg.det(shear))
        assert energy(r.transformed(shear)).normalized_energy >= best - 1e-12


def test_harmonic_coefficients_follow_relabeling():
    cg = crystal("kagome")
    g = crystal_graph(cg)
    u = Matrix([[1, 1], [0, 1]])
    relabeled = [tuple(Matrix([list(label)]) * u) for label in cg.labels]
    assert harmonic_coefficients(g, relabeled) == harmonic_coefficients(g, cg.labels) * u


def test_reduce_period_gram_checks_the_dimension():
    with pytest.raises(InvalidInputError):
        reduce_period_gram(Matrix([[2, 1], [1, 2]]), 3)


def test_cholesky_rejects_indefinite_input():
    with pytest.raises(NumericalError, match="not positive definite"):
        cholesky_lattice(Matrix([[1, 2], [2, 1]]))


def test_hypercubic_fixture():
    r = hypercubic(4)
    np.testing.assert_allclose(r.lattice.rows, np.eye(4), atol=1e-12)
    np.testing.assert_allclose(r.edge_vectors, np.eye(4), atol=1e-12)
    file_based = realize("hypercubic4")
    np.testing.assert_allclose(file_based.edge_vectors, np.eye(4), atol=1e-12)


def test_supercell_indexing():
    r = realize_max_abelian(hexagonal_base())
    cell = supercell(r, (2, 2), periodic=True)
    assert cell.points.shape == (8, 2)
    assert len(cell.edges) == 12
    index = ((1 * 2) + 1) * 2 + 1
    np.testing.assert_allclose(cell.points[index], r.vertex_positions[1] + r.lattice.rows.sum(axis=0))


def test_open_supercell_drops_boundary_edges():
    r = realize_max_abelian(hexagonal_base())
    cell = supercell(r, (1, 1))
    assert cell.edges == ((0, 1),)
    assert not any(cell.wrapped)


def test_empty_supercell_request():
    with pytest.raises(InvalidInputError):
        supercell(realize("hexagonal"), (0, 1))


@pytest.mark.parametrize("kind", ["graphene", "diamond", "k4"])
def test_carbon_allotropes_have_uniform_bonds(kind):
    cell = carbon_allotrope(kind, (2,) * (2 if kind == "graphene" else 3), bond_length=1.42)
    for i, j in cell.edges:
        assert np.linalg.norm(cell.points[j] - cell.points[i]) == pytest.approx(1.42)


@pytest.mark.parametrize("name, girth", [("hexagonal", 6), ("square", 4), ("gyroid", 10)])
def test_girth(name, girth):
    cg = crystal(name)
    g = crystal_graph(cg)
    assert periodic_girth(g, covering_labels(cg, g, spanning_tree(g))) == girth


def test_girth_cap():
    cg = crystal("gyroid")
    g = crystal_graph(cg)
    with pytest.raises(NumericalError, match="girth exceeds cap"):
        periodic_girth(g, cg.labels, radius_cap=6)
