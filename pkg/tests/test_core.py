import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fig
from polyslcs.core import (KripkeModel, PolyhedralModel, SimplicialComplex, check_kripke,
                           close_under_faces, hasse_edges, is_letter, letters_of,
                           reflexive_transitive_closure, simplex_id, validate_complex,
                           validate_kripke)
from polyslcs.errors import BadIndex, InvalidSimplex, NoSuchElement, NoSuchSimplex, ValidationFailed


def fs(*sets):
    return {frozenset(s) for s in sets}


def test_close_under_faces_triangle():
    assert close_under_faces([{0, 1, 2}]) == fs({0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2})


def test_close_under_faces_fixed_point():
    assert close_under_faces([{0}]) == fs({0})


def test_close_under_faces_two_edges():
    assert close_under_faces([{0, 1}, {1, 2}]) == fs({0}, {1}, {2}, {0, 1}, {1, 2})


def test_close_under_faces_errors():
    with pytest.raises(InvalidSimplex):
        close_under_faces([set()])
    with pytest.raises(BadIndex):
        close_under_faces([{0, 5}], n_vertices=3)
    with pytest.raises(BadIndex):
        close_under_faces([{-1}])


@given(st.lists(st.frozensets(st.integers(0, 6), min_size=1, max_size=4), max_size=6))
def test_close_under_faces_idempotent(raw):
    once = close_under_faces(raw)
    assert close_under_faces(once) == once
    assert all(s in once for s in raw)
    for s in once:
        for r in range(1, len(s)):
            assert all(frozenset(c) in once for c in itertools.combinations(s, r))


def test_letters():
    assert is_letter("red") and is_letter("a1_b")
    for bad in ("", "1a", "true", "eta", "tau", "diamond", "a-b", None):
        assert not is_letter(bad)


def test_figure1_complex_valid(figure1):
    c = figure1.complex
    assert validate_complex(c) == []
    assert c.counts() == {0: 6, 1: 9, 2: 4}


def test_collinear_triangle_reported():
    c = SimplicialComplex(2, [(0, 0), (1, 0), (2, 0)], close_under_faces([{0, 1, 2}]))
    kinds = {v.kind for v in validate_complex(c)}
    assert "affine" in kinds


def test_missing_face_reported():
    simps = close_under_faces([{0, 1, 2}]) - {frozenset({0, 1})}
    c = SimplicialComplex(2, [(0, 0), (1, 0), (0, 1)], simps)
    assert "closure" in {v.kind for v in validate_complex(c)}


def test_polyhedral_valuation_checked(triangle):
    with pytest.raises(NoSuchSimplex):
        PolyhedralModel(triangle.complex, {"red": {"0-9"}})
    with pytest.raises(ValueError):
        PolyhedralModel(triangle.complex, {"true": {"0"}})


def test_cell_poset_valid(triangle_poset, figure1_poset):
    assert validate_kripke(triangle_poset) == []
    assert len(triangle_poset.elements) == 7
    assert validate_kripke(figure1_poset) == []
    assert len(figure1_poset.elements) == 19


def test_kripke_violations():
    k = KripkeModel(("a", "b"), {("a", "a")})
    assert [v.kind for v in validate_kripke(k)] == ["reflexivity"]
    k = KripkeModel(("a", "b"), {("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")}, poset=True)
    assert "antisymmetry" in {v.kind for v in validate_kripke(k)}
    k = KripkeModel(("a", "b", "c"), {(x, x) for x in "abc"} | {("a", "b"), ("b", "c")}, poset=True)
    assert "transitivity" in {v.kind for v in validate_kripke(k)}
    with pytest.raises(ValidationFailed):
        check_kripke(k)
    k = KripkeModel(("a",), {("a", "a")}, {"p": {"z"}})
    assert "valuation" in {v.kind for v in validate_kripke(k)}


def test_letters_of(figure1_poset):
    assert letters_of(figure1_poset, simplex_id([2, 3, 5])) == {"green"}
    assert letters_of(figure1_poset, fig("A").pop()) == {"gray"}
    with pytest.raises(NoSuchElement):
        letters_of(figure1_poset, "nope")


def test_closure_and_hasse(figure1_poset):
    rel = reflexive_transitive_closure("abc", [("a", "b"), ("b", "c")])
    assert rel == {(x, x) for x in "abc"} | {("a", "b"), ("b", "c"), ("a", "c")}
    # 18 vertex-edge covers plus 12 edge-triangle covers
    assert len(hasse_edges(figure1_poset)) == 30


def test_neighbourhoods(triangle_poset):
    k = triangle_poset
    a = k.idx("0")
    assert {k.elements[j] for j in k.succ[a]} == {"0", "0-1", "0-2", "0-1-2"}
    assert k.pred[a] == (a,)
    assert k.bits[2][a] == sum(1 << j for j in k.sym[a])
