import json

import numpy as np
import polars as pl
import pytest
from pydantic import ValidationError

from lattice_forge.io import (
    GeometryFile,
    RealizationDocument,
    emit_cg,
    export,
    geometry_document,
    load_geometry,
    load_realization,
    parse_cg,
    realization_document,
    realization_from_document,
    surface_from_geometry,
)
from lattice_forge.realization import hypercubic, verify_standard
from lattice_forge.surface import cube, curvature_map, graphene_sheet, truncated_icosahedron
from lattice_forge.utils.errors import CrystalFileError, InvalidInputError
from lattice_forge.utils.settings import CRYSTALS_DIR
from tests.conftest import crystal, realize

THETA = """\
# theta graph
vertex a
vertex b
edge a b
edge a b
edge a b
basis 1  1 0 -1
basis 2  0 1 -1
"""


def test_parse_unlabeled_file():
    cg = parse_cg(THETA, name="theta")
    assert cg.vertex_names == ("a", "b")
    assert cg.edges == ((0, 1), (0, 1), (0, 1))
    assert cg.dimension is None
    assert cg.labels is None
    assert cg.basis == ((1, 0, -1), (0, 1, -1))
    assert not cg.is_labeled


def test_unlabeled_edges_get_zero_labels():
    cg = parse_cg("dim 2\nvertex a\nedge a a 1 0\nedge a a\n")
    assert cg.labels == ((1, 0), (0, 0))


def test_vanish_lines():
    cg = parse_cg("vertex a\nvertex b\nedge a b\nedge a b\nedge a b\nvanish 1 -1 0\n")
    assert cg.vanish == ((1, -1, 0),)


@pytest.mark.parametrize(
    "text, line, message",
    [
        ("vertex a\nfoo a\n", 2, "unknown directive"),
        ("dim 2 3\n", 1, "exactly one integer"),
        ("dim 2\ndim 3\n", 2, "dim declared twice"),
        ("dim x\n", 1, "expected integers"),
        ("dim 0\n", 1, "dim must be positive"),
        ("vertex a\nvertex a\n", 2, "duplicate vertex"),
        ("vertex a\nedge a b\n", 2, "unknown vertex 'b'"),
        ("vertex a\nedge a\n", 2, "two vertex names"),
        ("vertex a\nedge a a 1 0\n", 2, "without a dim"),
        ("dim 2\nvertex a\nedge a a 1\n", 3, "label has 1 entries"),
        ("vertex a\nedge a a\ndim 1\n", 3, "precede the edges"),
        ("vertex a\nedge a a\nbasis 1 1 0\n", 3, "basis needs an index and 1 coefficients"),
        ("vertex a\nedge a a\nbasis 0 1\n", 3, "basis index must be positive"),
        ("vertex a\nedge a a\nbasis 1 1\nbasis 1 1\n", 4, "given twice"),
        ("vertex a\nedge a a\nvanish 1 1\n", 3, "vanish needs 1 coefficients"),
    ],
)
def test_parse_errors_name_the_line(text, line, message):
    with pytest.raises(CrystalFileError, match=message) as info:
        parse_cg(text)
    assert info.value.line_number == line
    assert str(info.value).startswith(f"line {line}: ")


def test_file_without_vertices():
    with pytest.raises(CrystalFileError, match="no vertices declared"):
        parse_cg("# nothing here\n")


def test_basis_indices_must_be_contiguous():
    with pytest.raises(CrystalFileError, match="must run 1..1"):
        parse_cg("vertex a\nedge a a\nbasis 2 1\n")


@pytest.mark.parametrize("path", sorted(CRYSTALS_DIR.glob("*.cg")), ids=lambda p: p.stem)
def test_emitted_text_parses_back(path):
    cg = crystal(path.stem)
    again = parse_cg(emit_cg(cg), name=cg.name)
    assert again == cg


def test_realization_json_round_trip(tmp_path):
    r = realize("diamond")
    path = tmp_path / "diamond.json"
    path.write_bytes(export(r, "json", name="diamond"))
    doc = load_realization(path)
    assert doc.name == "diamond"
    again = realization_from_document(doc)
    np.testing.assert_allclose(again.edge_vectors, r.edge_vectors, atol=1e-12)
    np.testing.assert_allclose(again.lattice.rows, r.lattice.rows, atol=1e-12)
    report = verify_standard(again)
    assert report.eet_residual == pytest.approx(doc.residuals.eet, abs=1e-12)
    assert report.balance_residual == pytest.approx(doc.residuals.balance, abs=1e-12)


def test_realization_json_is_deterministic():
    assert export(realize("kagome"), "json") == export(realize("kagome"), "json")


def test_realization_document_rejects_unknown_fields():
    payload = realization_document(realize("square")).model_dump()
    payload["extra"] = 1
    with pytest.raises(ValidationError):
        RealizationDocument.model_validate(payload)


def test_realization_document_shape_check():
    doc = realization_document(realize("square"))
    broken = doc.model_copy(update={"edge_vectors": doc.edge_vectors[:1]})
    with pytest.raises(InvalidInputError, match="do not match the graph"):
        realization_from_document(broken)


def test_geometry_round_trip(tmp_path):
    s = truncated_icosahedron()
    path = tmp_path / "c60.json"
    path.write_bytes(export(s, "json", name="c60"))
    doc = load_geometry(path)
    assert len(doc.faces) == 32
    again = surface_from_geometry(doc)
    np.testing.assert_allclose(curvature_map(again).mean_curvature, curvature_map(s).mean_curvature)


def test_periodic_geometry_keeps_labels():
    doc = geometry_document(graphene_sheet((2, 2)), with_faces=False)
    assert doc.faces is None
    assert len(doc.edge_labels) == len(doc.edges) == 12
    again = surface_from_geometry(doc)
    assert again.is_periodic
    assert again.neighbors == graphene_sheet((2, 2)).neighbors


def test_geometry_from_edges_only():
    s = cube()
    doc = GeometryFile(vertices=s.positions.tolist(), edges=[(i, j) for i, j, _ in s.edges()])
    again = surface_from_geometry(doc)
    assert again.edge_count == 12


def test_geometry_needs_3d_vertices():
    with pytest.raises(InvalidInputError, match="3D vertices"):
        surface_from_geometry(GeometryFile(vertices=[[0.0, 0.0]]))


def test_xyz_of_diamond_with_edge_ends():
    r = realize("diamond")
    lines = export(r, "xyz", counts=(1, 1, 1), include_edge_ends=True, name="diamond").decode().splitlines()
    assert lines[0] == "6"
    assert lines[1] == "diamond"
    assert len(lines) == 8
    assert all(line.startswith("C ") for line in lines[2:])


def test_xyz_supercell_atom_count():
    lines = export(realize("diamond"), "xyz", counts=(2, 2, 2)).decode().splitlines()
    assert lines[0] == "16"
    assert lines[1] == "lattice_forge"


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_counts_need_a_coordinate_format(fmt):
    with pytest.raises(InvalidInputError, match=f"not {fmt}"):
        export(realize("hexagonal"), fmt, counts=(2, 2))


def test_xyz_refuses_four_dimensions():
    with pytest.raises(InvalidInputError, match="use json"):
        export(hypercubic(4), "xyz")


def test_obj_of_a_closed_surface():
    text = export(cube(), "obj", name="cube").decode().splitlines()
    assert text[0] == "o cube"
    assert sum(line.startswith("v ") for line in text) == 8
    assert sum(line.startswith("l ") for line in text) == 12
    faces = [line for line in text if line.startswith("f ")]
    assert len(faces) == 6
    assert all(len(face.split()) == 5 for face in faces)


def test_obj_of_a_realization():
    text = export(realize("hexagonal"), "obj", counts=(2, 2)).decode().splitlines()
    assert sum(line.startswith("v ") for line in text) == 8
    assert not any(line.startswith("f ") for line in text)


def test_csv_of_a_surface():
    frame = pl.read_csv(export(truncated_icosahedron(), "csv"))
    assert frame.columns == ["vertex", "x", "y", "z", "gauss_curvature", "mean_curvature", "local_area"]
    assert frame.height == 60
    assert frame["vertex"].to_list() == list(range(60))


def test_csv_of_a_realization():
    frame = pl.read_csv(export(realize("gyroid"), "csv"))
    assert frame.columns == ["vertex", "x1", "x2", "x3"]
    assert frame.height == 4


def test_unknown_export_format():
    with pytest.raises(InvalidInputError, match="Valid formats"):
        export(cube(), "pdb")


def test_json_is_plain_json():
    payload = json.loads(export(realize("square"), "json"))
    assert payload["dimension"] == 2
    assert payload["c"] == pytest.approx(1.0)
