"""Cell posets of polyhedral models, point location, and polyline realisation."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .core import KripkeModel, PolyhedralModel, check_complex, simplex_id
from .errors import PathKindError, PointOutsidePolyhedron
from .paths import Path, PathKind, classify

BARY_TOL = 1e-9


def build_cell_poset(p: PolyhedralModel) -> KripkeModel:
    """One element per simplex, ordered by the face relation (full order)."""
    c = check_complex(p.complex)
    present = set(c.simplexes)
    pairs = []
    for s in c.simplexes:
        sid = simplex_id(s)
        items = sorted(s)
        for r in range(1, len(items) + 1):
            for face in combinations(items, r):
                if frozenset(face) in present:
                    pairs.append((simplex_id(face), sid))
    return KripkeModel(c.ids, frozenset(pairs), dict(p.valuation), poset=True)


def barycentre(c, sid: str) -> np.ndarray:
    return c.coords(sid).mean(axis=0)


@dataclass(frozen=True)
class PointLocation:
    cell: str
    coords: tuple

    def __post_init__(self):
        lam = np.asarray(self.coords)
        if np.any(lam <= 0) or abs(lam.sum() - 1) > 1e-9:
            raise ValueError("barycentric coordinates must be positive and sum to 1")


def _barycentric(pts: np.ndarray, x: np.ndarray):
    """Barycentric coordinates of x w.r.t. the rows of pts, plus residual."""
    if len(pts) == 1:
        return np.ones(1), float(np.linalg.norm(x - pts[0]))
    a = (pts[1:] - pts[0]).T
    sol, *_ = np.linalg.lstsq(a, x - pts[0], rcond=None)
    resid = float(np.linalg.norm(a @ sol - (x - pts[0])))
    return np.concatenate([[1 - sol.sum()], sol]), resid


def locate_point(p: PolyhedralModel, x, tol: float = BARY_TOL) -> PointLocation:
    c = p.complex
    x = np.asarray(x, dtype=float)
    if x.shape != (c.dimension,):
        raise PointOutsidePolyhedron(f"point has {x.size} coordinates, expected {c.dimension}")
    order = sorted(range(len(c.simplexes)), key=lambda i: -len(c.simplexes[i]))
    scale = 1.0 + float(np.abs(x).max(initial=0.0))
    for i in order:
        sid = c.ids[i]
        lam, resid = _barycentric(c.coords(sid), x)
        if resid <= tol * scale and np.all(lam > tol) and np.all(lam <= 1 + tol):
            lam = np.clip(lam, tol, None)
            lam = lam / lam.sum()
            return PointLocation(sid, tuple(float(v) for v in lam))
    raise PointOutsidePolyhedron(f"{tuple(x)} is not in the polyhedron")


@dataclass(frozen=True)
class Polyline:
    """Barycentre polyline; ``samples`` are (point, located cell) pairs at
    every vertex and every segment midpoint, ``cells`` the located cells with
    consecutive repeats collapsed."""
    points: tuple
    samples: tuple
    cells: tuple


def realize_down_path(p: PolyhedralModel, path, frame: KripkeModel | None = None) -> Polyline:
    if not isinstance(path, Path):
        path = Path(frame if frame is not None else build_cell_poset(p), path)
    if classify(path) < PathKind.DOWN:
        raise PathKindError("realisation needs a down path")
    c = p.complex
    pts = [barycentre(c, sid) for sid in path.elements]
    samples = []
    for k, pt in enumerate(pts):
        if k:
            mid = (pts[k - 1] + pt) / 2
            samples.append((tuple(mid), locate_point(p, mid).cell))
        samples.append((tuple(pt), locate_point(p, pt).cell))
    cells = []
    for _, cell in samples:
        if not cells or cells[-1] != cell:
            cells.append(cell)
    return Polyline(tuple(tuple(q) for q in pts), tuple(samples), tuple(cells))
