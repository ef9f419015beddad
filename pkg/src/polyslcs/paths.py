"""Paths over Kripke frames, the path algebra, and the path conversions.

Kinds, strongest last:
    undirected  every step is in R or its converse
    down        length >= 1 and the last step is a converse step
    pm          down, length >= 2, and the first step is an R step
    updown      even length, steps alternate R step / converse step
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .core import KripkeModel
from .errors import (BadIndex, NoSuchElement, PathKindError,
                     ReflexivityRequired, SeqMismatch)


class PathKind(IntEnum):
    UNDIRECTED = 0
    DOWN = 1
    PM = 2
    UPDOWN = 3

    def __str__(self):
        return self.name.lower()


class Path:
    __slots__ = ("frame", "elements")

    def __init__(self, frame: KripkeModel, elements):
        elements = tuple(elements)
        if not elements:
            raise PathKindError("a path has at least one element")
        for w in elements:
            if w not in frame.index:
                raise NoSuchElement(w)
        rel = frame.relation
        for a, b in zip(elements, elements[1:]):
            if (a, b) not in rel and (b, a) not in rel:
                raise PathKindError(f"step ({a}, {b}) is not in R or its converse")
        self.frame = frame
        self.elements = elements

    @property
    def length(self) -> int:
        return len(self.elements) - 1

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return isinstance(other, Path) and self.frame is other.frame and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Path({', '.join(map(str, self.elements))})"

    def up(self, i) -> bool:
        """Step i (from position i to i+1) is an R step."""
        return (self.elements[i], self.elements[i + 1]) in self.frame.relation

    def down(self, i) -> bool:
        return (self.elements[i + 1], self.elements[i]) in self.frame.relation


def classify(p: Path) -> PathKind:
    n = p.length
    if n < 1 or not p.down(n - 1):
        return PathKind.UNDIRECTED
    if n < 2 or not p.up(0):
        return PathKind.DOWN
    if n % 2 == 0 and all(p.up(i) if i % 2 == 0 else p.down(i) for i in range(n)):
        return PathKind.UPDOWN
    return PathKind.PM


def _same_frame(p1: Path, p2: Path):
    if p1.frame is not p2.frame and p1.frame != p2.frame:
        raise SeqMismatch("paths live on different frames")


def sequentialize(p1: Path, p2: Path) -> Path:
    _same_frame(p1, p2)
    if p1.elements[-1] != p2.elements[0]:
        raise SeqMismatch(f"{p1.elements[-1]} != {p2.elements[0]}")
    return Path(p1.frame, p1.elements + p2.elements[1:])


def shift(p: Path, k: int) -> Path:
    if not 0 <= k <= p.length:
        raise BadIndex(f"shift {k} outside [0;{p.length}]")
    return Path(p.frame, p.elements[k:])


def prefix(p: Path, k: int) -> Path:
    if not 0 <= k <= p.length:
        raise BadIndex(f"prefix {k} outside [0;{p.length}]")
    return Path(p.frame, p.elements[:k + 1])


def insert_dup(p: Path, m: int) -> Path:
    if not 0 < m <= p.length:
        raise BadIndex(f"insertion point {m} outside (0;{p.length}]")
    w = p.elements[m]
    if (w, w) not in p.frame.relation:
        raise ReflexivityRequired(f"({w}, {w}) is not in R")
    return Path(p.frame, p.elements[:m] + (w,) + p.elements[m:])


@dataclass(frozen=True)
class Reindexing:
    """f: [0;source_len] -> [0;target_len] given as a tuple of images."""
    source_len: int
    target_len: int
    mapping: tuple

    def problems(self) -> list[str]:
        f = self.mapping
        out = []
        if len(f) != self.source_len + 1:
            out.append("not total")
            return out
        if f[0] != 0:
            out.append("f(0) != 0")
        if f[-1] != self.target_len:
            out.append("f(end) != end")
        if any(b < a for a, b in zip(f, f[1:])):
            out.append("not monotone")
        if set(f) != set(range(self.target_len + 1)):
            out.append("not surjective")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def witnesses(self, q: Path, p: Path) -> bool:
        """q(j) = p(f(j)) for all j, with matching lengths."""
        return (self.is_valid() and q.length == self.source_len and p.length == self.target_len
                and all(q[j] == p[fj] for j, fj in enumerate(self.mapping)))


def _require(p: Path, kind: PathKind):
    if not p.frame.is_reflexive():
        raise ReflexivityRequired("path conversions need a reflexive frame")
    got = classify(p)
    if got < kind:
        raise PathKindError(f"expected a {kind} path, got {got}")


def down_to_updown(p: Path) -> tuple[Path, Reindexing]:
    _require(p, PathKind.DOWN)
    w = p.elements
    n = p.length
    # base case on the last step, then prepend one step at a time
    seq = [w[n - 1], w[n - 1], w[n]]
    f = [n - 1, n - 1, n]
    for k in range(n - 2, -1, -1):
        if (w[k], w[k + 1]) in p.frame.relation:
            seq[:0] = [w[k], w[k + 1]]
            f[:0] = [k, k + 1]
        else:
            seq[:0] = [w[k], w[k]]
            f[:0] = [k, k]
    return Path(p.frame, seq), Reindexing(len(seq) - 1, n, tuple(f))


def down_to_pm(p: Path) -> tuple[Path, Reindexing]:
    # every up-down path is already a pm path
    return down_to_updown(p)


def pm_to_updown(p: Path) -> tuple[Path, Reindexing]:
    _require(p, PathKind.PM)
    seq, f = _pm_to_updown(p.frame, list(p.elements))
    return Path(p.frame, seq), Reindexing(len(seq) - 1, p.length, tuple(f))


def _pm_to_updown(frame, w):
    n = len(w) - 1
    if n == 2:
        return list(w), [0, 1, 2]
    rel = frame.relation
    last = n - 1  # the proof's l, with the path ending at l+1
    if (w[last], w[last - 1]) in rel:
        # Case A: the last two steps both go down
        seq, g = _pm_to_updown(frame, w[:last + 1])
        return seq + [w[last], w[last + 1]], g + [last, last + 1]
    # Case B: an up step followed by the final down step
    shortened = w[:last] + [w[last - 1]]
    seq, g = _pm_to_updown(frame, shortened)
    h = [min(j, last - 1) for j in g]
    return seq + [w[last], w[last + 1]], h + [last, last + 1]
