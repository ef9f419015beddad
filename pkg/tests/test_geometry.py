import numpy as np
import pytest

from conftest import fig, tri
from polyslcs.errors import PathKindError, PointOutsidePolyhedron, ValidationFailed
from polyslcs.gen import FIGURE1_VERTICES, cell_id
from polyslcs.geometry import PointLocation, barycentre, build_cell_poset, locate_point, realize_down_path
from polyslcs.core import PolyhedralModel, SimplicialComplex, close_under_faces


def test_cell_poset_triangle(triangle_poset):
    k = triangle_poset
    assert k.elements == ("0", "1", "2", "0-1", "0-2", "1-2", "0-1-2")
    assert k.poset
    # full order, not the Hasse diagram: vertex below the triangle directly
    assert ("0", "0-1-2") in k.relation
    assert len(k.relation) == 7 + 6 + 3 + 3


def test_cell_poset_rejects_bad_complex():
    c = SimplicialComplex(2, [(0, 0), (1, 0), (2, 0)], close_under_faces([{0, 1, 2}]))
    with pytest.raises(ValidationFailed):
        build_cell_poset(PolyhedralModel(c, {}))


def test_locate_examples(triangle):
    assert locate_point(triangle, (0.0, 0.0)).cell == "0"
    assert locate_point(triangle, (0.5, 0.0)).cell == "0-1"
    loc = locate_point(triangle, (0.5, 0.4))
    assert loc.cell == "0-1-2"
    assert sum(loc.coords) == pytest.approx(1.0)
    with pytest.raises(PointOutsidePolyhedron):
        locate_point(triangle, (2.0, 2.0))
    with pytest.raises(PointOutsidePolyhedron):
        locate_point(triangle, (0.0, 0.0, 0.0))


def test_point_location_coords_positive():
    with pytest.raises(ValueError):
        PointLocation("0", (0.0, 1.0))


def test_barycentre(figure1):
    assert np.allclose(barycentre(figure1.complex, cell_id("CDE", FIGURE1_VERTICES)), (4 / 3, 2 / 3))


def test_realize_figure_path(figure1):
    labels = ["AB", "ABC", "BC", "BCD", "D"]
    path = [cell_id(x, FIGURE1_VERTICES) for x in labels]
    line = realize_down_path(figure1, path)
    assert len(line.points) == 5 and len(line.samples) == 9
    # midpoints fall in the higher cell of each step
    mids = [cell for _, cell in line.samples[1::2]]
    assert mids == [cell_id(x, FIGURE1_VERTICES) for x in ("ABC", "ABC", "BCD", "BCD")]
    assert line.cells == tuple(cell_id(x, FIGURE1_VERTICES)
                               for x in ("AB", "ABC", "BC", "BCD", "D"))
    assert line.samples[-1][1] == fig("D").pop()


def test_realize_needs_down_path(triangle):
    with pytest.raises(PathKindError):
        realize_down_path(triangle, ["0", "0-1"])
