"""Deterministic generators for the worked examples and random test models."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .core import (KripkeModel, PolyhedralModel, SimplicialComplex,
                   close_under_faces, reflexive_transitive_closure, simplex_id)
from .errors import BadParameter

TRIANGLE_VERTICES = {"A": 0, "B": 1, "C": 2}
FIGURE1_VERTICES = {"B": 0, "A": 1, "D": 2, "C": 3, "F": 4, "E": 5}


def cell_id(label: str, vertices: dict) -> str:
    """``cell_id("AB", FIGURE1_VERTICES)`` -> ``"0-1"``."""
    return simplex_id(vertices[ch] for ch in label)


def _canonical(simplexes):
    return sorted(simplexes, key=lambda s: (len(s), sorted(s)))


def gen_triangle() -> PolyhedralModel:
    """One triangle: red edges, blue vertices and interior."""
    verts = [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0)]
    cx = SimplicialComplex(2, verts, _canonical(close_under_faces([{0, 1, 2}])))
    ids = lambda labels: {cell_id(x, TRIANGLE_VERTICES) for x in labels}
    return PolyhedralModel(cx, {"red": ids(["AB", "AC", "BC"]), "blue": ids(["A", "B", "C", "ABC"])})


def gen_figure1() -> PolyhedralModel:
    v = FIGURE1_VERTICES
    coords = {"B": (0, 0), "A": (0, 1), "D": (1, 0), "C": (1, 1), "F": (2, 0), "E": (2, 1)}
    verts = [None] * 6
    for name, i in v.items():
        verts[i] = coords[name]
    tris = [{v[a] for a in t} for t in ("ABC", "BCD", "CDE", "DEF")]
    cx = SimplicialComplex(2, verts, _canonical(close_under_faces(tris)))
    ids = lambda labels: {cell_id(x, v) for x in labels}
    return PolyhedralModel(cx, {
        "red": ids(["B", "C", "AB", "AC", "BC", "BD", "CD", "ABC", "BCD"]),
        "green": ids(["CDE"]),
        "gray": ids(["A", "D", "E", "F", "CE", "DE", "DF", "EF", "DEF"]),
    })


# -- rooms and corridors ---------------------------------------------------

ROOM_SIZE = 3.0
ROOM_PITCH = 4.0


def _room_boundary(lo):
    """Triangles of the boundary of the cube [lo, lo+3]^3 as coordinate triples.

    Each face carries an inner square [1, 2]^2 (relative); the annulus between
    outer and inner square is cut into 4 trapezoids of 2 triangles, the inner
    square into 2 triangles. The inner diagonal joins the (low, low) and
    (high, high) corners on faces at the high end of an axis and the
    (high, low), (low, high) corners on faces at the low end, so that it
    matches the corridor tetrahedra.
    """
    tris = []
    for axis in range(3):
        a, b = [x for x in range(3) if x != axis]
        for side in (0, 1):
            fixed = lo[axis] + side * ROOM_SIZE

            def pt(u, v):
                p = [0.0, 0.0, 0.0]
                p[axis] = fixed
                p[a] = lo[a] + u
                p[b] = lo[b] + v
                return tuple(p)

            outer = [(0, 0), (3, 0), (3, 3), (0, 3)]
            inner = [(1, 1), (2, 1), (2, 2), (1, 2)]
            for i in range(4):
                j = (i + 1) % 4
                tris.append((pt(*outer[i]), pt(*outer[j]), pt(*inner[j])))
                tris.append((pt(*outer[i]), pt(*inner[j]), pt(*inner[i])))
            if side == 1:
                tris.append((pt(1, 1), pt(2, 1), pt(2, 2)))
                tris.append((pt(1, 1), pt(2, 2), pt(1, 2)))
            else:
                tris.append((pt(2, 1), pt(2, 2), pt(1, 2)))
                tris.append((pt(2, 1), pt(1, 2), pt(1, 1)))
    return tris


def _corridor_tets(lo, axis):
    """Five tetrahedra filling the unit box between two facing inner squares.

    ``lo`` is the box's low corner; the central tetrahedron uses the four
    even-parity corners and each odd corner gets a corner tetrahedron.
    """
    a, b = [x for x in range(3) if x != axis]

    def pt(t, u, v):
        p = list(lo)
        p[axis] += t
        p[a] += u
        p[b] += v
        return tuple(p)

    even = [c for c in product((0, 1), repeat=3) if sum(c) % 2 == 0]
    odd = [c for c in product((0, 1), repeat=3) if sum(c) % 2 == 1]
    tets = [tuple(pt(*c) for c in even)]
    for c in odd:
        nbrs = [tuple(c[i] ^ (i == k) for i in range(3)) for k in range(3)]
        tets.append(tuple(pt(*x) for x in [c] + nbrs))
    return tets


@dataclass
class RoomsCube:
    model: PolyhedralModel
    n: int
    room_of: dict = field(default_factory=dict)       # cell id -> room grid position
    corridor_of: dict = field(default_factory=dict)   # own cell id -> (room, room)
    room_cells: int = 0
    corridor_cells: int = 0

    def report(self) -> dict:
        return {
            "rooms": self.n ** 3,
            "corridors": 3 * self.n ** 2 * (self.n - 1),
            "cells_per_room": self.room_cells,
            "own_cells_per_corridor": self.corridor_cells,
            "cells": len(self.model.complex.simplexes),
            "counts_by_dimension": self.model.complex.counts(),
        }


def rooms_cube(n: int = 3) -> RoomsCube:
    """n^3 cube rooms on a grid, neighbouring rooms joined by corridors.

    Each room is the cone from its centre over the boundary triangulation
    above (33 vertices, 122 edges, 150 triangles, 60 tetrahedra). The centre
    room (odd n) is white, the others green; corridor cells not shared with a
    room are grey.
    """
    if not isinstance(n, int) or n < 2:
        raise BadParameter(f"grid size must be an integer >= 2, got {n!r}")
    index: dict = {}
    verts: list = []

    def vid(p):
        if p not in index:
            index[p] = len(verts)
            verts.append(p)
        return index[p]

    room_tets = {}
    for cell in product(range(n), repeat=3):
        lo = tuple(ROOM_PITCH * c for c in cell)
        centre = tuple(x + ROOM_SIZE / 2 for x in lo)
        room_tets[cell] = [frozenset(map(vid, (centre,) + t)) for t in _room_boundary(lo)]
    corr_tets = {}
    for cell in product(range(n), repeat=3):
        for axis in range(3):
            if cell[axis] + 1 >= n:
                continue
            other = tuple(c + (i == axis) for i, c in enumerate(cell))
            lo = [ROOM_PITCH * c + 1 for c in cell]
            lo[axis] = ROOM_PITCH * cell[axis] + ROOM_SIZE
            corr_tets[(cell, other)] = [frozenset(map(vid, t)) for t in _corridor_tets(tuple(lo), axis)]

    room_of = {}
    for cell, tets in room_tets.items():
        for s in close_under_faces(tets):
            room_of[s] = cell
    corridor_of = {}
    for pair, tets in corr_tets.items():
        for s in close_under_faces(tets):
            if s not in room_of:
                corridor_of[s] = pair
    simplexes = _canonical(list(room_of) + list(corridor_of))
    cx = SimplicialComplex(3, verts, simplexes)

    centre_room = (n // 2,) * 3 if n % 2 else None
    val = {"white": set(), "green": set(), "grey": set()}
    for s, cell in room_of.items():
        val["white" if cell == centre_room else "green"].add(simplex_id(s))
    val["grey"] = {simplex_id(s) for s in corridor_of}
    model = PolyhedralModel(cx, {k: v for k, v in val.items() if v})
    first = next(iter(room_tets))
    first_pair = next(iter(corr_tets))
    return RoomsCube(
        model, n,
        room_of={simplex_id(s): c for s, c in room_of.items()},
        corridor_of={simplex_id(s): p for s, p in corridor_of.items()},
        room_cells=sum(1 for c in room_of.values() if c == first),
        corridor_cells=sum(1 for p in corridor_of.values() if p == first_pair),
    )


def gen_rooms_cube(n: int = 3) -> PolyhedralModel:
    return rooms_cube(n).model


# -- random poset models ---------------------------------------------------

LETTER_POOL = ("p", "q", "r", "s", "u", "v", "x", "y", "z")


def gen_random(seed: int, element_count: int = 8, letter_count: int = 2,
               density: float = 0.3, extra_letter: float = 0.2) -> KripkeModel:
    """Random poset: coin-flip edges from lower to higher position, then the
    reflexive-transitive closure. Every element gets one random letter and,
    with probability ``extra_letter``, a second one."""
    if not 1 <= element_count <= 64:
        raise BadParameter("element_count must be in [1, 64]")
    if not 0 <= letter_count <= len(LETTER_POOL):
        raise BadParameter(f"letter_count must be in [0, {len(LETTER_POOL)}]")
    if not 0.0 <= density <= 1.0 or not 0.0 <= extra_letter <= 1.0:
        raise BadParameter("probabilities must be in [0, 1]")
    rng = random.Random(seed)
    els = [f"w{i}" for i in range(element_count)]
    pairs = [(els[i], els[j]) for i in range(element_count)
             for j in range(i + 1, element_count) if rng.random() < density]
    rel = reflexive_transitive_closure(els, pairs)
    letters = LETTER_POOL[:letter_count]
    val = {p: set() for p in letters}
    if letters:
        for w in els:
            val[rng.choice(letters)].add(w)
            if rng.random() < extra_letter:
                val[rng.choice(letters)].add(w)
    return KripkeModel(tuple(els), rel, val, poset=True)


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int = 3
    seed: int = 0
    elements: int = 8
    letters: int = 2
    density: float = 0.3

    def build(self):
        if self.kind == "triangle":
            return gen_triangle()
        if self.kind == "figure1":
            return gen_figure1()
        if self.kind in ("rooms", "rooms_cube"):
            return gen_rooms_cube(self.n)
        if self.kind == "random":
            return gen_random(self.seed, self.elements, self.letters, self.density)
        raise BadParameter(f"unknown generator {self.kind!r}")


def random_formula(rng: random.Random, letters, depth: int, size: int = 3, gamma: bool = True):
    """Random formula over ``letters`` with modal depth at most ``depth``.

    ``size`` bounds the Boolean nesting at each modal level, which keeps the
    trees small enough for the path-enumerating oracles. With ``gamma=False``
    only eta is used.
    """
    from .logic.formula import TRUE, And, Atom, Eta, Gamma, Not, Or

    letters = list(letters)

    def leaf():
        if not letters or rng.random() < 0.15:
            return TRUE
        return Atom(rng.choice(letters))

    def go(d, s):
        r = rng.random()
        if s <= 0 or r < (0.1 if s == size else 0.3):
            return leaf()
        if d > 0 and r < 0.6:
            mod = Eta if not gamma or rng.random() < 0.5 else Gamma
            return mod(go(d - 1, size), go(d - 1, size))
        if r < 0.72:
            return Not(go(d, s - 1))
        op = And if rng.random() < 0.5 else Or
        return op(go(d, s - 1), go(d, s - 1))

    return go(depth, size)
