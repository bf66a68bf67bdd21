import numpy as np
import pytest

from conftest import quotient_map, sig
from trihex.core.hexlattice import HexCoord
from trihex.export.svg import hex_center, outer_face, render_map_svg, render_tiling_svg, tutte_layout
from trihex.utils.error_handler import SignatureError


def test_outer_face_is_a_hexagon_when_there_is_one():
    m = quotient_map("5,2,2")
    assert len(m.faces[outer_face(m)]) == 6
    assert outer_face(quotient_map("0,0,0")) == 0


@pytest.mark.parametrize("text", ["0,0,0", "3,1,2", "5,2,2"])
def test_tutte_layout_is_barycentric(text):
    m = quotient_map(text)
    layout = tutte_layout(m)
    assert layout.shape == (m.num_vertices, 2)
    boundary = set(m.face_vertices(outer_face(m)))
    for x in boundary:
        assert np.isclose(np.hypot(*layout[x]), 1.0)
    for x in range(m.num_vertices):
        if x in boundary:
            continue
        neighbours = layout[list(m.neighbors(x))]
        assert np.allclose(layout[x], neighbours.mean(axis=0))


def test_map_svg_draws_every_element():
    m = quotient_map("5,2,2")
    svg = render_map_svg(m, title="trihex 5,2,2")
    assert svg.startswith("<?xml") or svg.startswith("<svg")
    assert svg.count('"vertex"') == 72
    assert svg.count('"edge"') == 108
    assert svg.count('"face"') == m.num_faces - 1
    assert "trihex 5,2,2" in svg


@pytest.mark.parametrize("text, columns, rows, expected", [("0,0,0", 6, 6, 36), ("1,0,0", 6, 6, 18), ("1,0,0", 1, 1, 1)])
def test_tiling_marks_rotocenters(text, columns, rows, expected):
    svg = render_tiling_svg(sig(text), columns, rows)
    assert svg.count('"rotocenter"') == expected
    assert svg.count('"domain"') == 1


def test_tiling_rejects_empty_window():
    with pytest.raises(SignatureError):
        render_tiling_svg(sig("0,0,0"), 0, 4)


def test_hex_center_spacing():
    assert hex_center(HexCoord(0, 0), 10.0) == (0.0, 0.0)
    x, y = hex_center(HexCoord(0, 1), 10.0)
    assert x == 0.0
    assert y == pytest.approx(10.0 * np.sqrt(3.0))
