"""Model JSON, Aldebaran .aut, DOT and per-cell colouring exports."""
from __future__ import annotations

import json

import jsonschema

from .bisim.lts import Lts
from .bisim.partition import Partition
from .core import (RESERVED, KripkeModel, PolyhedralModel, SimplicialComplex,
                   close_under_faces, hasse_edges, reflexive_transitive_closure,
                   simplex_id)
from .errors import LabelClash, RefError, SchemaError, UniverseMismatch

_LETTER = {"type": "string", "pattern": r"^[A-Za-z][A-Za-z0-9_]*$"}

POLYHEDRAL_SCHEMA = {
    "type": "object",
    "required": ["type", "dimension", "vertices", "simplexes"],
    "additionalProperties": False,
    "properties": {
        "type": {"const": "polyhedral"},
        "dimension": {"type": "integer", "minimum": 1},
        "vertices": {"type": "array", "items": {"type": "array", "items": {"type": "number"}}},
        "simplexes": {"type": "array",
                      "items": {"type": "array", "minItems": 1, "uniqueItems": True,
                                "items": {"type": "integer", "minimum": 0}}},
        "close_faces": {"type": "boolean"},
        "valuation": {"type": "object", "propertyNames": _LETTER,
                      "additionalProperties": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
    },
}

KRIPKE_SCHEMA = {
    "type": "object",
    "required": ["type", "elements", "order"],
    "additionalProperties": False,
    "properties": {
        "type": {"const": "kripke"},
        "elements": {"type": "array", "items": {"type": "string", "minLength": 1}, "uniqueItems": True},
        "order": {"type": "array",
                  "items": {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "string"}}},
        "reflexive_transitive_close": {"type": "boolean"},
        "poset": {"type": "boolean"},
        "valuation": {"type": "object", "propertyNames": _LETTER,
                      "additionalProperties": {"type": "array", "items": {"type": "string"}}},
    },
}


def _json_path(parts) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def _validate(doc, schema):
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        raise SchemaError(e.message, _json_path(e.absolute_path)) from None


def load_model(data) -> PolyhedralModel | KripkeModel:
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data) if isinstance(data, str) else data
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from None
    if not isinstance(doc, dict) or doc.get("type") not in ("polyhedral", "kripke"):
        raise SchemaError('document must be an object with "type" polyhedral or kripke', "$.type")
    for name in doc.get("valuation", {}) or {}:
        if name in RESERVED:
            raise SchemaError(f"{name!r} is a reserved word", f"$.valuation.{name}")
    if doc["type"] == "polyhedral":
        _validate(doc, POLYHEDRAL_SCHEMA)
        return _load_polyhedral(doc)
    _validate(doc, KRIPKE_SCHEMA)
    return _load_kripke(doc)


def _load_polyhedral(doc) -> PolyhedralModel:
    m = doc["dimension"]
    verts = doc["vertices"]
    for i, v in enumerate(verts):
        if len(v) != m:
            raise SchemaError(f"expected {m} coordinates, got {len(v)}", f"$.vertices[{i}]")
    listed = [frozenset(s) for s in doc["simplexes"]]
    for i, s in enumerate(doc["simplexes"]):
        for j, v in enumerate(s):
            if v >= len(verts):
                raise RefError(f"vertex index {v} of {len(verts)}", f"$.simplexes[{i}][{j}]")
    if doc.get("close_faces", False):
        simplexes = sorted(close_under_faces(listed), key=lambda s: (len(s), sorted(s)))
    else:
        simplexes = listed
    cx = SimplicialComplex(m, verts, simplexes)
    ids = [simplex_id(s) for s in listed]
    val = {}
    for name, positions in (doc.get("valuation") or {}).items():
        cells = set()
        for j, pos in enumerate(positions):
            if pos >= len(listed):
                raise RefError(f"simplex index {pos} of {len(listed)}", f"$.valuation.{name}[{j}]")
            cells.add(ids[pos])
        val[name] = cells
    return PolyhedralModel(cx, val)


def _load_kripke(doc) -> KripkeModel:
    elements = doc["elements"]
    known = set(elements)
    for i, (a, b) in enumerate(doc["order"]):
        for j, w in enumerate((a, b)):
            if w not in known:
                raise RefError(f"unknown element {w!r}", f"$.order[{i}][{j}]")
    val = {}
    for name, ws in (doc.get("valuation") or {}).items():
        for j, w in enumerate(ws):
            if w not in known:
                raise RefError(f"unknown element {w!r}", f"$.valuation.{name}[{j}]")
        val[name] = set(ws)
    pairs = [tuple(p) for p in doc["order"]]
    if doc.get("reflexive_transitive_close", False):
        rel = reflexive_transitive_closure(elements, pairs)
    else:
        rel = frozenset(pairs)
    return KripkeModel(tuple(elements), rel, val, poset=bool(doc.get("poset", False)))


def model_to_dict(model) -> dict:
    if isinstance(model, PolyhedralModel):
        cx = model.complex
        return {
            "type": "polyhedral",
            "dimension": cx.dimension,
            "vertices": [list(v) for v in cx.vertices],
            "simplexes": [sorted(s) for s in cx.simplexes],
            "close_faces": False,
            "valuation": {p: sorted(cx.index[s] for s in ids) for p, ids in model.valuation.items()},
        }
    if isinstance(model, KripkeModel):
        pos = model.index
        return {
            "type": "kripke",
            "elements": list(model.elements),
            "order": [list(p) for p in sorted(model.relation, key=lambda ab: (pos[ab[0]], pos[ab[1]]))],
            "reflexive_transitive_close": False,
            "poset": model.poset,
            "valuation": {p: sorted(ws, key=pos.__getitem__) for p, ws in model.valuation.items()},
        }
    raise TypeError(f"cannot serialise {type(model).__name__}")


def save_model(model) -> bytes:
    return (json.dumps(model_to_dict(model), indent=1) + "\n").encode("utf-8")


def export_aut(lts: Lts) -> bytes:
    lines = [f"des (0,{len(lts.transitions)},{len(lts.states)})"]
    for a, lab, b in lts.transitions:
        label = lts.labels[lab]
        if '"' in label or "\n" in label:
            raise LabelClash(f"label {label!r} cannot be written in .aut")
        lines.append(f'({a},"{label}",{b})')
    return ("\n".join(lines) + "\n").encode("utf-8")


def _dot_id(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(obj) -> bytes:
    lines = ["digraph {"]
    if isinstance(obj, Lts):
        for s in obj.states:
            lines.append(f"  {_dot_id(s)};")
        for a, lab, b in obj.transitions:
            lines.append(f"  {_dot_id(obj.states[a])} -> {_dot_id(obj.states[b])} [label={_dot_id(obj.labels[lab])}];")
    elif isinstance(obj, KripkeModel):
        for i, w in enumerate(obj.elements):
            lets = ",".join(sorted(obj.letter_sets[i]))
            lines.append(f"  {_dot_id(w)} [label={_dot_id(f'{w} {{{lets}}}')}];")
        if obj.poset:
            edges = hasse_edges(obj)
        else:
            pos = obj.index
            edges = sorted(obj.relation, key=lambda ab: (pos[ab[0]], pos[ab[1]]))
        for a, b in edges:
            lines.append(f"  {_dot_id(a)} -> {_dot_id(b)};")
    else:
        raise TypeError(f"cannot draw {type(obj).__name__}")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def export_coloring(model: PolyhedralModel, what) -> bytes:
    """Map every simplex id to its block name (partition) or to membership
    (a set of cell ids)."""
    ids = model.complex.ids
    if isinstance(what, Partition):
        if set(what.universe) != set(ids) or len(what.universe) != len(ids):
            raise UniverseMismatch("partition universe is not the model's cells")
        names = what.names()
        out = {sid: names[what.block_of(sid)] for sid in ids}
    else:
        chosen = set(what)
        extra = chosen - set(ids)
        if extra:
            raise UniverseMismatch(f"unknown cells {sorted(extra)[:3]}")
        out = {sid: sid in chosen for sid in ids}
    return (json.dumps(out, indent=1) + "\n").encode("utf-8")
