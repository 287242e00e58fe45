import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lattice_forge.electronic import (
    ChiralIndex,
    band_radicand,
    build_swnt,
    classify_metallic,
    dirac_scan,
    fundamental_region_size,
    graphene_band,
    huckel,
    length_index,
    tube_frame,
)
from lattice_forge.electronic.nanotube import inner_a
from lattice_forge.realization.allotropes import hexagonal_base
from lattice_forge.surface import truncated_icosahedron
from lattice_forge.utils.errors import InvalidInputError
from tests.conftest import molecule_graph

angles = st.floats(min_value=-2 * math.pi, max_value=2 * math.pi, allow_nan=False)
chiral_indices = st.tuples(st.integers(min_value=1, max_value=60), st.integers(min_value=0, max_value=60))

RECTANGLE_INDICES = [
    (1, 1), (2, 0), (2, 1), (3, 0), (3, 2), (4, 1), (4, 4), (5, 0), (5, 3), (6, 2),
    (6, 6), (7, 1), (7, 4), (8, 0), (8, 3), (9, 0), (9, 6), (10, 0), (10, 5), (11, 2),
]


def test_armchair_tube_cell():
    ci = ChiralIndex(6, 6)
    assert fundamental_region_size(ci) == 24
    s = build_swnt(ci)
    assert s.vertex_count == 24
    assert s.edge_count == 36
    np.testing.assert_allclose(np.linalg.norm(s.positions[:, :2], axis=1), 18 / (2 * math.pi))


def test_stacked_periods():
    s = build_swnt(ChiralIndex(6, 6), n_periods=3)
    assert s.vertex_count == 72
    frame = tube_frame(ChiralIndex(6, 6))
    assert s.lattice[0, 2] == pytest.approx(3 * np.linalg.norm(frame.primitive_translation_vector))


@pytest.mark.parametrize("c1, c2", [(6, 6), (9, 0), (10, 0), (5, 3), (7, 2)])
def test_rolled_bonds_are_slightly_shortened(c1, c2):
    s = build_swnt(ChiralIndex(c1, c2))
    for v in range(s.vertex_count):
        lengths = np.linalg.norm(s.edge_vectors(v), axis=1)
        assert np.all(lengths <= 1 + 1e-9)
        assert np.all(lengths > 0.95)


@pytest.mark.parametrize("c1, c2", [(6, 6), (9, 0), (10, 0), (5, 3), (7, 2), (12, 1)])
def test_frame_is_orthogonal(c1, c2):
    frame = tube_frame(ChiralIndex(c1, c2))
    assert inner_a(frame.chiral, frame.translation) == 0
    assert inner_a(frame.chiral, frame.primitive_translation) == 0
    assert frame.chiral_vector @ frame.translation_vector == pytest.approx(0, abs=1e-9)
    assert frame.circumference == pytest.approx(math.sqrt(3) * frame.diameter_parameter)


def test_primitive_cell_size_formula():
    for c1, c2 in [(6, 6), (9, 0), (10, 0), (5, 3), (7, 2)]:
        ci = ChiralIndex(c1, c2)
        d_r = math.gcd(2 * c1 + c2, c1 + 2 * c2)
        assert fundamental_region_size(ci) == 4 * (c1 * c1 + c1 * c2 + c2 * c2) // d_r


@pytest.mark.parametrize("c1, c2", RECTANGLE_INDICES)
def test_rectangle_size_formula(c1, c2):
    expected = 4 * (c1 * c1 + c1 * c2 + c2 * c2) // math.gcd(c1, c2)
    assert fundamental_region_size(ChiralIndex(c1, c2), primitive=False) == expected


@given(chiral_indices)
@settings(max_examples=200, deadline=None)
def test_translation_is_orthogonal_to_the_chiral_vector(index):
    frame = tube_frame(ChiralIndex(*index))
    assert inner_a(frame.chiral, frame.translation) == 0
    assert inner_a(frame.chiral, frame.primitive_translation) == 0


@pytest.mark.parametrize(
    "c1, c2, kind",
    [(6, 6, "metal"), (9, 0, "metal"), (10, 0, "semiconductor"), (5, 2, "metal"), (7, 1, "metal"), (7, 2, "semiconductor")],
)
def test_metallic_rule(c1, c2, kind):
    assert classify_metallic(ChiralIndex(c1, c2)) == kind


def test_chiral_index_validation():
    with pytest.raises(InvalidInputError):
        ChiralIndex(0, 3)
    with pytest.raises(InvalidInputError):
        ChiralIndex(3, -1)
    with pytest.raises(InvalidInputError):
        ChiralIndex(3, 1, scale=0)
    with pytest.raises(InvalidInputError):
        build_swnt(ChiralIndex(3, 3), n_periods=0)


def test_length_index():
    ci = ChiralIndex(6, 6)
    assert length_index(ci, (1, 0), (0, 0)) == pytest.approx(0.5)


@given(angles, angles)
@settings(max_examples=200, deadline=None)
def test_band_matches_radicand(xi1, xi2):
    lower, upper = graphene_band((xi1, xi2))
    assert lower == -upper
    assert upper**2 == pytest.approx(band_radicand(xi1, xi2), abs=1e-9)
    assert 0 <= upper <= 3 + 1e-12


def test_radicand_is_non_negative_on_a_fine_grid():
    steps = np.linspace(-np.pi, np.pi, 999)
    xi1, xi2 = np.meshgrid(steps, steps, indexing="ij")
    radicand = band_radicand(xi1, xi2)
    assert radicand.min() >= -1e-12
    np.testing.assert_allclose(radicand, np.abs(1 + np.exp(1j * xi1) + np.exp(1j * xi2)) ** 2, atol=1e-12)


def test_band_at_the_zone_centre():
    assert graphene_band((0.0, 0.0)) == pytest.approx((-3.0, 3.0))


def test_band_touches_at_the_dirac_point():
    lower, upper = graphene_band((2 * math.pi / 3, -2 * math.pi / 3))
    assert abs(lower) < 1e-12
    assert abs(upper) < 1e-12


def test_dirac_points_on_the_grid():
    assert [(i, j) for i, j, _, _ in dirac_scan(12)] == [(4, 8), (8, 4)]
    hits = dirac_scan(3)
    assert [(i, j) for i, j, _, _ in hits] == [(1, 2), (2, 1)]
    assert hits[0][2] == pytest.approx(2 * math.pi / 3)


def test_grid_without_dirac_points():
    assert dirac_scan(4) == []


def test_dirac_grid_size():
    with pytest.raises(InvalidInputError):
        dirac_scan(2)


def test_benzene_huckel():
    result = huckel(molecule_graph("benzene"), 6)
    np.testing.assert_allclose(result.eigenvalues, [2, 1, 1, -1, -1, -2], atol=1e-9)
    np.testing.assert_allclose(result.occupations, [2, 2, 2, 0, 0, 0])
    np.testing.assert_allclose(result.density, 1.0, atol=1e-9)
    assert not result.fractional
    assert result.homo == pytest.approx(1.0)
    assert result.lumo == pytest.approx(-1.0)
    assert result.gap == pytest.approx(2.0)


def test_benzene_open_shell():
    result = huckel(molecule_graph("benzene"), 5)
    assert result.fractional
    np.testing.assert_allclose(result.occupations, [2, 1.5, 1.5, 0, 0, 0])
    assert result.density.sum() == pytest.approx(5.0)


def test_huckel_electron_count():
    with pytest.raises(InvalidInputError):
        huckel(molecule_graph("benzene"), 13)


def test_huckel_requires_simple_graph():
    with pytest.raises(InvalidInputError, match="simple graph"):
        huckel(hexagonal_base(), 2)


def test_c60_huckel_is_a_closed_shell():
    result = huckel(truncated_icosahedron().to_graph(), 60)
    assert not result.fractional
    assert result.occupations.sum() == pytest.approx(60.0)
    np.testing.assert_allclose(result.density, 1.0, atol=1e-9)
    assert result.gap > 0
