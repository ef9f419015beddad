"""Labelled transition systems and the two encodings of Kripke models."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..core import KripkeModel
from ..errors import LabelClash
from .partition import Partition
from .weak import lcc_classes

TAU = "tau"
CHANGE = "c"
DOWN = "d"
STEP = "s"


@dataclass(frozen=True)
class Lts:
    """States and labels are ordered; ``transitions`` holds (src, label, dst)
    index triples sorted by source, label text, target."""
    states: tuple
    labels: tuple
    transitions: tuple

    @classmethod
    def build(cls, states, triples) -> "Lts":
        """From (src id, label, dst id) triples; duplicates collapse."""
        states = tuple(states)
        ix = {s: i for i, s in enumerate(states)}
        trans = {(ix[a], lab, ix[b]) for a, lab, b in triples}
        labels = tuple(sorted({lab for _, lab, _ in trans}))
        lab_ix = {lab: i for i, lab in enumerate(labels)}
        ordered = sorted(trans, key=lambda t: (t[0], t[1], t[2]))
        return cls(states, labels, tuple((a, lab_ix[lab], b) for a, lab, b in ordered))

    def __post_init__(self):
        n, m = len(self.states), len(self.labels)
        for a, lab, b in self.transitions:
            if not (0 <= a < n and 0 <= b < n and 0 <= lab < m):
                raise ValueError(f"transition {(a, lab, b)} out of range")

    def triples(self):
        """Transitions as (src id, label, dst id)."""
        return [(self.states[a], self.labels[lab], self.states[b]) for a, lab, b in self.transitions]

    @cached_property
    def out(self) -> tuple:
        adj = [[] for _ in self.states]
        for a, lab, b in self.transitions:
            adj[a].append((lab, b))
        return tuple(tuple(x) for x in adj)

    def label_index(self, name) -> int | None:
        try:
            return self.labels.index(name)
        except ValueError:
            return None


def _check_letters(k: KripkeModel):
    for p in k.valuation:
        if p in (TAU, CHANGE, DOWN):
            raise LabelClash(f"letter {p!r} collides with a reserved transition label")


def encode_ltsC(k: KripkeModel) -> Lts:
    """One state per element; letters as loops, tau/c over R and its
    converse (same or different letters), d along converse steps."""
    k.require_reflexive()
    _check_letters(k)
    els, lets = k.elements, k.letter_sets
    triples = []
    for i, w in enumerate(els):
        for p in lets[i]:
            triples.append((w, p, w))
        for j in k.sym[i]:
            triples.append((w, TAU if lets[i] == lets[j] else CHANGE, els[j]))
        for j in k.pred[i]:
            triples.append((w, DOWN, els[j]))
    return Lts.build(els, triples)


def set_label(letters) -> str:
    return "{" + ",".join(sorted(letters)) + "}"


def encode_ltsA(k: KripkeModel) -> tuple[Lts, Partition]:
    """One state per lcc class, named after its first member."""
    k.require_reflexive()
    _check_letters(k)
    classes = lcc_classes(k)
    rep = [None] * len(k.elements)
    for b in classes.blocks:
        for w in b:
            rep[k.index[w]] = b[0]
    lets = k.letter_sets
    triples = set()
    for i in range(len(k.elements)):
        r = rep[i]
        triples.add((r, set_label(lets[i]), r))
        for j in k.sym[i]:
            triples.add((r, STEP, rep[j]))
        for j in k.pred[i]:
            triples.add((r, DOWN, rep[j]))
    return Lts.build([b[0] for b in classes.blocks], triples), classes
