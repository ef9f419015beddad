import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus_model, fig
from polyslcs import io
from polyslcs.bisim import Lts, encode_ltsC, weak_pm_relation
from polyslcs.core import KripkeModel, letters_of
from polyslcs.errors import LabelClash, RefError, SchemaError, UniverseMismatch
from polyslcs.geometry import build_cell_poset
from polyslcs.logic import parse, sat_list


def figure1_doc():
    return {
        "type": "polyhedral", "dimension": 2,
        "vertices": [[0, 0], [0, 1], [1, 0], [1, 1], [2, 0], [2, 1]],
        "simplexes": [[0, 1, 3], [0, 2, 3], [2, 3, 5], [2, 4, 5], [2, 3], [1], [0]],
        "close_faces": True,
        "valuation": {"green": [2], "gray": [3, 5], "red": [0, 1, 4, 6]},
    }


def test_load_closes_faces():
    m = io.load_model(json.dumps(figure1_doc()).encode())
    assert len(m.complex.simplexes) == 19
    # letters attach to the listed simplexes only
    assert m.valuation["red"] == {"0-1-3", "0-2-3", "2-3", "0"}
    assert m.valuation["green"] == {"2-3-5"}


def test_polyhedral_roundtrip(figure1):
    data = io.save_model(figure1)
    back = io.load_model(data)
    assert back == figure1
    assert io.save_model(back) == data


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_kripke_roundtrip(seed):
    k = corpus_model(seed)
    data = io.save_model(k)
    back = io.load_model(data)
    assert back == k
    assert io.save_model(back) == data


def test_kripke_closure_flag():
    doc = {"type": "kripke", "elements": ["a", "b", "c"], "order": [["a", "b"], ["b", "c"]],
           "reflexive_transitive_close": True, "poset": True}
    k = io.load_model(doc)
    assert ("a", "c") in k.relation and ("b", "b") in k.relation
    assert all(letters_of(k, w) == set() for w in k.elements)


@pytest.mark.parametrize("doc,path", [
    ({"type": "kripke", "elements": ["a"]}, "$"),
    ({"type": "kripke", "elements": ["a"], "order": [["a"]]}, "$.order[0]"),
    ({"type": "polyhedral", "dimension": 2, "vertices": [[0, 0]], "simplexes": [[]]}, "$.simplexes[0]"),
    ({"type": "polyhedral", "dimension": 2, "vertices": [[0]], "simplexes": [[0]]}, "$.vertices[0]"),
    ({"type": "kripke", "elements": ["a"], "order": [], "valuation": {"eta": ["a"]}}, "$.valuation.eta"),
    ({"type": "mesh"}, "$.type"),
])
def test_schema_errors(doc, path):
    with pytest.raises(SchemaError) as info:
        io.load_model(doc)
    assert info.value.path == path


def test_invalid_json():
    with pytest.raises(SchemaError):
        io.load_model(b"{not json")


def test_ref_errors():
    doc = figure1_doc()
    doc["valuation"]["red"] = [99]
    with pytest.raises(RefError) as info:
        io.load_model(doc)
    assert info.value.path == "$.valuation.red[0]"
    with pytest.raises(RefError):
        io.load_model({"type": "kripke", "elements": ["a"], "order": [["a", "z"]]})
    with pytest.raises(RefError):
        io.load_model({"type": "polyhedral", "dimension": 1, "vertices": [[0]], "simplexes": [[0, 3]]})


def test_aut_smallest():
    lts = Lts.build(["s"], [("s", "tau", "s")])
    assert io.export_aut(lts) == b'des (0,1,1)\n(0,"tau",0)\n'


def test_aut_triangle(triangle_poset):
    data = io.export_aut(encode_ltsC(triangle_poset))
    lines = data.decode().splitlines()
    assert lines[0] == "des (0,57,7)"
    assert len(lines) == 58
    assert data == io.export_aut(encode_ltsC(triangle_poset))


def test_aut_rejects_quotes():
    with pytest.raises(LabelClash):
        io.export_aut(Lts.build(["s"], [("s", 'a"b', "s")]))


def test_dot_hasse(figure1_poset):
    text = io.export_dot(figure1_poset).decode()
    assert text.count(" -> ") == 30
    assert text.count("[label=") == 19


def test_dot_lts():
    text = io.export_dot(Lts.build(["s", "t"], [("s", "a", "t")])).decode()
    assert '"s" -> "t" [label="a"];' in text


def test_coloring(figure1, figure1_poset):
    data = json.loads(io.export_coloring(figure1, sat_list(figure1_poset, parse("gamma(gray, true)"))))
    assert data[fig("C").pop()] is True and data[fig("CD").pop()] is False
    data = json.loads(io.export_coloring(figure1, weak_pm_relation(figure1_poset)))
    assert set(data.values()) == {"B0", "B1", "B2", "B3"}
    with pytest.raises(UniverseMismatch):
        io.export_coloring(figure1, ["9-9"])


def test_empty_documents():
    k = io.load_model({"type": "kripke", "elements": [], "order": []})
    assert io.export_dot(k) == b"digraph {\n}\n"
    m = io.load_model({"type": "polyhedral", "dimension": 2, "vertices": [], "simplexes": []})
    assert json.loads(io.export_coloring(m, [])) == {}
    assert build_cell_poset(m).elements == ()
    assert io.load_model(io.save_model(m)) == m
