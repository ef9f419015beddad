import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyslcs.core import letters_of, validate_complex, validate_kripke
from polyslcs.errors import BadParameter
from polyslcs.gen import (GenSpec, TRIANGLE_VERTICES, cell_id, gen_random, random_formula,
                          rooms_cube)
from polyslcs.geometry import build_cell_poset
from polyslcs.logic import Eta, Gamma, depth
from polyslcs.logic.formula import has_node


def test_triangle(triangle, triangle_poset):
    assert len(triangle.complex.simplexes) == 7
    assert letters_of(triangle_poset, cell_id("AB", TRIANGLE_VERTICES)) == {"red"}
    assert letters_of(triangle_poset, cell_id("ABC", TRIANGLE_VERTICES)) == {"blue"}


def test_figure1(figure1):
    assert len(figure1.complex.simplexes) == 19
    assert figure1.complex.vertices[0] == (0.0, 0.0)   # B
    assert figure1.complex.vertices[5] == (2.0, 1.0)   # E
    sizes = {p: len(ids) for p, ids in figure1.valuation.items()}
    assert sizes == {"red": 9, "green": 1, "gray": 9}


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 20), st.integers(0, 4), st.floats(0, 1))
def test_random_models_are_posets(seed, n, letters, density):
    k = gen_random(seed, n, letters, density)
    assert validate_kripke(k) == []
    assert k == gen_random(seed, n, letters, density)


def test_random_density_zero():
    k = gen_random(3, 6, 2, 0.0)
    assert k.relation == {(w, w) for w in k.elements}


def test_random_bounds():
    with pytest.raises(BadParameter):
        gen_random(0, 65)
    with pytest.raises(BadParameter):
        gen_random(0, 4, density=1.5)
    with pytest.raises(BadParameter):
        GenSpec("sphere").build()


def test_random_formula_depth():
    rng = random.Random(0)
    for _ in range(200):
        f = random_formula(rng, ["p", "q"], 3)
        assert depth(f) <= 3
        g = random_formula(rng, ["p"], 2, gamma=False)
        assert not has_node(g, Gamma)


def test_genspec():
    assert GenSpec("triangle").build().complex.counts() == {0: 3, 1: 3, 2: 1}
    assert GenSpec("random", seed=4, elements=5).build() == gen_random(4, 5, 2, 0.3)


def test_rooms_small_grid():
    rc = rooms_cube(2)
    assert rc.report()["rooms"] == 8 and rc.report()["corridors"] == 12
    assert "white" not in rc.model.valuation  # no centre room for even n
    assert validate_complex(rc.model.complex) == []
    with pytest.raises(BadParameter):
        rooms_cube(1)


@pytest.fixture(scope="module")
def cube():
    return rooms_cube(3)


def test_rooms_counts(cube):
    rep = cube.report()
    assert rep["rooms"] == 27 and rep["corridors"] == 54
    assert rep["cells_per_room"] == 365 and rep["own_cells_per_corridor"] == 25
    assert rep["cells"] == 27 * 365 + 54 * 25 == 11205
    assert rep["counts_by_dimension"] == {0: 891, 1: 3726, 2: 4698, 3: 1890}


def test_rooms_room_mesh(cube):
    first = (0, 0, 0)
    cells = [sid for sid, room in cube.room_of.items() if room == first]
    by_dim = {}
    for sid in cells:
        d = sid.count("-")
        by_dim[d] = by_dim.get(d, 0) + 1
    assert by_dim == {0: 33, 1: 122, 2: 150, 3: 60}


def test_rooms_corridor_mesh(cube):
    pair = next(iter(set(cube.corridor_of.values())))
    cells = [sid for sid, p in cube.corridor_of.items() if p == pair]
    by_dim = {}
    for sid in cells:
        d = sid.count("-")
        by_dim[d] = by_dim.get(d, 0) + 1
    assert by_dim == {1: 8, 2: 12, 3: 5}


def test_rooms_valid_and_coloured(cube):
    assert validate_complex(cube.model.complex) == []
    val = cube.model.valuation
    assert len(val["white"]) == 365
    assert len(val["green"]) == 26 * 365
    assert len(val["grey"]) == 54 * 25
    k = build_cell_poset(cube.model)
    assert len(k.elements) == 11205
