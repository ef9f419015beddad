"""Characteristic and distinguishing formulas for weak pm-bisimilarity classes.

Synthesis mirrors the refinement: blocks start as letter-set classes with a
literal conjunction, and each round tests every block-level challenge
(block of w, block of u, block of d) with w ~ u >= d using

    psi = eta(chi(Bw) | chi(Bu), chi(Bd)).

A block cut by psi splits into chi & psi and chi & !psi. The formulas form a
DAG with heavy sharing; never hash or print them whole.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import KripkeModel
from ..errors import ChiSynthesisFailed
from ..logic.checker import eta_mask, sat_mask
from ..logic.formula import And, Atom, Eta, Formula, Not, Or, conj
from .partition import Partition
from .weak import weak_pm_relation


@dataclass
class ChiTable:
    partition: Partition
    chi: list            # per block
    conjuncts: list      # per block, the conjuncts of chi in order
    masks: list          # per block, satisfaction vector of each conjunct
    model: KripkeModel

    def formula(self, block: int) -> Formula:
        return self.chi[block]

    def delta(self, b1: int, b2: int) -> Formula | None:
        """First conjunct of chi(b1) that fails on b2; None when b1 == b2."""
        if b1 == b2:
            return None
        w2 = self.model.idx(self.partition.blocks[b2][0])
        for c, m in zip(self.conjuncts[b1], self.masks[b1]):
            if not m[w2]:
                return c
        raise ChiSynthesisFailed(f"no conjunct of chi(B{b1}) separates B{b2}")

    def deltas(self) -> dict:
        n = len(self.chi)
        return {(a, b): self.delta(a, b) for a in range(n) for b in range(n) if a != b}


def _flatten(f: Formula) -> list:
    out, stack = [], [f]
    while stack:
        node = stack.pop()
        if isinstance(node, And):
            stack.append(node.right)
            stack.append(node.left)
        else:
            out.append(node)
    return out


def _literals(letters, present) -> Formula:
    return conj(Atom(p) if p in present else Not(Atom(p)) for p in letters)


def characteristic_formulas(k: KripkeModel, p: Partition) -> ChiTable:
    k.require_reflexive()
    n = len(k.elements)
    letters = sorted(k.valuation)
    lets = k.letter_sets

    # current blocks as (mask, chi); invariant: sat(chi) == mask
    groups: dict = {}
    for i in range(n):
        groups.setdefault(lets[i], []).append(i)
    blocks = []
    for members in sorted(groups.values()):
        m = np.zeros(n, dtype=bool)
        m[members] = True
        blocks.append((m, _literals(letters, lets[members[0]])))

    while True:
        label = np.empty(n, dtype=np.int64)
        for bi, (m, _) in enumerate(blocks):
            label[m] = bi
        challenges = []
        seen = set()
        for w in range(n):
            for u in k.sym[w]:
                for d in k.pred[u]:
                    key = (label[w], label[u], label[d])
                    if key not in seen:
                        seen.add(key)
                        challenges.append(key)
        prev = list(blocks)
        split_any = False
        for bw, bu, bd in challenges:
            mw, cw = prev[bw]
            mu, cu = prev[bu]
            md, cd = prev[bd]
            ext = eta_mask(k, mw | mu, md)
            if not (mw & ~ext).any():
                continue
            psi = Eta(Or(cw, cu), cd)
            refined = []
            for m, c in blocks:
                inside = m & ext
                if inside.any() and (m & ~ext).any():
                    refined.append((inside, And(c, psi)))
                    refined.append((m & ~ext, And(c, Not(psi))))
                    split_any = True
                else:
                    refined.append((m, c))
            blocks = refined
        if not split_any:
            break

    # canonical order: by first member
    blocks.sort(key=lambda mc: int(np.flatnonzero(mc[0])[0]))
    got = Partition.from_labels(k.elements, _labels(blocks, n))
    if got.as_sets() != p.as_sets():
        raise ChiSynthesisFailed("synthesised classes differ from the given partition")
    memo: dict = {}
    chi, conjuncts, masks = [], [], []
    for m, c in blocks:
        if not np.array_equal(sat_mask(k, c, memo), m):
            raise ChiSynthesisFailed("a characteristic formula has the wrong extension")
        chi.append(c)
        parts = _flatten(c)
        conjuncts.append(parts)
        masks.append([sat_mask(k, q, memo) for q in parts])
    return ChiTable(got, chi, conjuncts, masks, k)


def _labels(blocks, n):
    label = [0] * n
    for bi, (m, _) in enumerate(blocks):
        for i in np.flatnonzero(m):
            label[i] = bi
    return label


def distinguishing_formula(k: KripkeModel, w1, w2, table: ChiTable | None = None) -> Formula | None:
    """A formula true at w1 and false at w2, or None when they are equivalent."""
    if table is None:
        table = characteristic_formulas(k, weak_pm_relation(k))
    k.idx(w1), k.idx(w2)
    return table.delta(table.partition.block_of(w1), table.partition.block_of(w2))
