"""Domain types for polyhedral models and (poset) Kripke models."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np
from scipy import sparse

from .errors import (BadIndex, InvalidSimplex, NoSuchElement, NoSuchSimplex,
                     ReflexivityRequired, ValidationFailed)

RESERVED = frozenset({"true", "false", "eta", "gamma", "diamond", "tau"})
_LETTER_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
AFFINE_TOL = 1e-9

# Letters are plain strings; equality of names is equality of letters.
Letter = str


def is_letter(name) -> bool:
    return isinstance(name, str) and bool(_LETTER_RE.match(name)) and name not in RESERVED


def check_letter(name) -> str:
    if not is_letter(name):
        raise ValueError(f"not a valid proposition letter: {name!r}")
    return name


def simplex_id(vertices: Iterable[int]) -> str:
    return "-".join(str(v) for v in sorted(vertices))


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


def close_under_faces(raw, n_vertices: int | None = None) -> set[frozenset]:
    """Smallest superset of ``raw`` closed under non-empty subsets."""
    out: set[frozenset] = set()
    for s in raw:
        s = frozenset(s)
        if not s:
            raise InvalidSimplex("empty simplex")
        for v in s:
            if not isinstance(v, (int, np.integer)) or v < 0 or (n_vertices is not None and v >= n_vertices):
                raise BadIndex(f"vertex index {v!r} out of range")
        if s in out:
            continue
        items = sorted(s)
        for r in range(1, len(items) + 1):
            out.update(frozenset(c) for c in combinations(items, r))
    return out


@dataclass(frozen=True, eq=True)
class SimplicialComplex:
    """Vertices in R^m plus simplexes given as vertex-index sets.

    Simplex order is the input order (duplicates dropped); the id of a simplex
    is its sorted vertex tuple joined by ``-``.
    """
    dimension: int
    vertices: tuple
    simplexes: tuple

    def __init__(self, dimension: int, vertices, simplexes):
        verts = tuple(tuple(float(x) for x in v) for v in vertices)
        seen, simps = set(), []
        for s in simplexes:
            fs = frozenset(int(i) for i in s)
            if fs not in seen:
                seen.add(fs)
                simps.append(fs)
        object.__setattr__(self, "dimension", int(dimension))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "simplexes", tuple(simps))

    @cached_property
    def ids(self) -> tuple[str, ...]:
        return tuple(simplex_id(s) for s in self.simplexes)

    @cached_property
    def index(self) -> dict[str, int]:
        return {sid: i for i, sid in enumerate(self.ids)}

    def simplex(self, sid: str) -> frozenset:
        try:
            return self.simplexes[self.index[sid]]
        except KeyError:
            raise NoSuchSimplex(sid) from None

    def coords(self, sid: str) -> np.ndarray:
        return np.array([self.vertices[v] for v in sorted(self.simplex(sid))], dtype=float)

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s in self.simplexes:
            out[len(s) - 1] = out.get(len(s) - 1, 0) + 1
        return dict(sorted(out.items()))


def validate_complex(c: SimplicialComplex) -> list[Violation]:
    report = []
    n = len(c.vertices)
    if c.dimension < 1:
        report.append(Violation("dimension", f"dimension must be positive, got {c.dimension}"))
    for i, v in enumerate(c.vertices):
        if len(v) != c.dimension:
            report.append(Violation("vertex", f"vertex {i} has {len(v)} coordinates, expected {c.dimension}"))
    present = set(c.simplexes)
    for s in c.simplexes:
        sid = simplex_id(s)
        if not s:
            report.append(Violation("empty", "empty simplex"))
            continue
        bad = [v for v in s if v < 0 or v >= n]
        if bad:
            report.append(Violation("index", f"simplex {sid} references missing vertices {sorted(bad)}"))
            continue
        if len(s) > 1 and all(len(c.vertices[v]) == c.dimension for v in s):
            pts = np.array([c.vertices[v] for v in sorted(s)], dtype=float)
            diffs = pts[1:] - pts[0]
            sv = np.linalg.svd(diffs, compute_uv=False)
            rank = int(np.sum(sv > AFFINE_TOL))
            if rank != len(s) - 1:
                report.append(Violation("affine", f"simplex {sid} is not affinely independent"))
        for r in range(1, len(s)):
            for face in combinations(sorted(s), r):
                if frozenset(face) not in present:
                    report.append(Violation("closure", f"face {simplex_id(face)} of {sid} is missing"))
    # With face closure in place, every non-empty intersection is a face and
    # therefore present; the check only reports something on open inputs.
    if not any(v.kind == "closure" for v in report):
        return report
    simps = list(c.simplexes)
    for i, a in enumerate(simps):
        for b in simps[i + 1:]:
            inter = a & b
            if inter and inter not in present:
                report.append(Violation("intersection",
                                        f"{simplex_id(a)} and {simplex_id(b)} meet in missing {simplex_id(inter)}"))
    return report


@dataclass(frozen=True)
class PolyhedralModel:
    complex: SimplicialComplex
    valuation: Mapping[str, frozenset] = field(default_factory=dict)

    def __post_init__(self):
        val = {p: frozenset(ids) for p, ids in sorted(self.valuation.items())}
        for p, ids in val.items():
            check_letter(p)
            for sid in ids:
                if sid not in self.complex.index:
                    raise NoSuchSimplex(f"valuation of {p!r} names unknown simplex {sid}")
        object.__setattr__(self, "valuation", val)

    def letters_of_simplex(self, sid: str) -> frozenset:
        return frozenset(p for p, ids in self.valuation.items() if sid in ids)


@dataclass(frozen=True)
class KripkeModel:
    """Finite Kripke model; ``relation`` is the full relation, never a Hasse diagram."""
    elements: tuple
    relation: frozenset
    valuation: Mapping[str, frozenset] = field(default_factory=dict)
    poset: bool = False

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "relation", frozenset((a, b) for a, b in self.relation))
        object.__setattr__(self, "valuation",
                           {p: frozenset(ws) for p, ws in sorted(self.valuation.items())})

    def __hash__(self):
        return hash((self.elements, self.relation, tuple(self.valuation.items()), self.poset))

    @cached_property
    def index(self) -> dict:
        return {w: i for i, w in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def idx(self, w) -> int:
        try:
            return self.index[w]
        except KeyError:
            raise NoSuchElement(w) from None

    @cached_property
    def succ(self) -> tuple[tuple[int, ...], ...]:
        """succ[i] = indices j with (w_i, w_j) in R, ascending."""
        out = [[] for _ in self.elements]
        ix = self.index
        for a, b in self.relation:
            out[ix[a]].append(ix[b])
        return tuple(tuple(sorted(s)) for s in out)

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in self.elements]
        for i, ss in enumerate(self.succ):
            for j in ss:
                out[j].append(i)
        return tuple(tuple(s) for s in out)

    @cached_property
    def sym(self) -> tuple[tuple[int, ...], ...]:
        """Neighbours over R and its converse."""
        return tuple(tuple(sorted(set(s) | set(p))) for s, p in zip(self.succ, self.pred))

    @cached_property
    def letter_sets(self) -> tuple[frozenset, ...]:
        sets = [set() for _ in self.elements]
        ix = self.index
        for p, ws in self.valuation.items():
            for w in ws:
                if w in ix:
                    sets[ix[w]].add(p)
        return tuple(frozenset(s) for s in sets)

    @cached_property
    def rel_matrix(self) -> sparse.csr_matrix:
        """R as a sparse 0/1 matrix, rows are sources."""
        n = len(self.elements)
        rows = [i for i, ss in enumerate(self.succ) for _ in ss]
        cols = [j for ss in self.succ for j in ss]
        return sparse.csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))

    @cached_property
    def sym_matrix(self) -> sparse.csr_matrix:
        m = self.rel_matrix
        return ((m + m.T) > 0).astype(np.int8).tocsr()

    @cached_property
    def bits(self) -> tuple:
        """(succ, pred, sym) neighbourhoods as Python int bitsets."""
        to = lambda idxs: sum(1 << j for j in idxs)
        return (tuple(map(to, self.succ)), tuple(map(to, self.pred)), tuple(map(to, self.sym)))

    def mask(self, ids) -> np.ndarray:
        out = np.zeros(len(self.elements), dtype=bool)
        ix = self.index
        for w in ids:
            if w in ix:
                out[ix[w]] = True
        return out

    def is_reflexive(self) -> bool:
        return all((w, w) in self.relation for w in self.elements)

    def require_reflexive(self):
        if not self.is_reflexive():
            raise ReflexivityRequired("model relation is not reflexive")

    def ids(self, indices) -> list:
        return [self.elements[i] for i in sorted(indices)]


def letters_of(k: KripkeModel, w) -> frozenset:
    return k.letter_sets[k.idx(w)]


def validate_kripke(k: KripkeModel) -> list[Violation]:
    report = []
    elems = set(k.elements)
    if len(elems) != len(k.elements):
        report.append(Violation("elements", "duplicate element ids"))
    for a, b in sorted(k.relation, key=str):
        if a not in elems or b not in elems:
            report.append(Violation("relation", f"pair ({a}, {b}) mentions an unknown element"))
    for w in k.elements:
        if (w, w) not in k.relation:
            report.append(Violation("reflexivity", f"missing ({w}, {w})"))
    for p, ws in k.valuation.items():
        if not is_letter(p):
            report.append(Violation("letter", f"invalid letter {p!r}"))
        for w in sorted(ws, key=str):
            if w not in elems:
                report.append(Violation("valuation", f"{p} names unknown element {w}"))
    if k.poset and not report:
        for a, b in k.relation:
            if a != b and (b, a) in k.relation:
                if k.index[a] < k.index[b]:
                    report.append(Violation("antisymmetry", f"{a} and {b} are mutually related"))
        succ = k.succ
        for i, ss in enumerate(succ):
            for j in ss:
                missing = set(succ[j]) - set(ss)
                for m in sorted(missing):
                    report.append(Violation("transitivity",
                                            f"({k.elements[i]}, {k.elements[j]}) and "
                                            f"({k.elements[j]}, {k.elements[m]}) without "
                                            f"({k.elements[i]}, {k.elements[m]})"))
    return report


def check_kripke(k: KripkeModel) -> KripkeModel:
    report = validate_kripke(k)
    if report:
        raise ValidationFailed(report)
    return k


def check_complex(c: SimplicialComplex) -> SimplicialComplex:
    report = validate_complex(c)
    if report:
        raise ValidationFailed(report)
    return c


def reflexive_transitive_closure(elements, pairs) -> frozenset:
    """Closure of ``pairs`` over ``elements`` (bitset Warshall)."""
    elements = list(elements)
    ix = {w: i for i, w in enumerate(elements)}
    n = len(elements)
    rows = [1 << i for i in range(n)]
    for a, b in pairs:
        rows[ix[a]] |= 1 << ix[b]
    for m in range(n):
        bit = 1 << m
        rm = rows[m]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rm
    return frozenset((elements[i], elements[j]) for i in range(n) for j in _bits(rows[i]))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def hasse_edges(k: KripkeModel) -> list[tuple]:
    """Covering pairs of a partial order, in element order. Display only."""
    strict = [set(s) - {i} for i, s in enumerate(k.succ)]
    out = []
    for i, ss in enumerate(strict):
        covered = set()
        for j in ss:
            covered |= strict[j]
        for j in sorted(ss - covered):
            out.append((k.elements[i], k.elements[j]))
    return out
