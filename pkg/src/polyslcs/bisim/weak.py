"""Weak pm-bisimilarity computed directly, and lcc classes."""
from __future__ import annotations

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from ..core import KripkeModel
from ..errors import InternalError
from .partition import Partition


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def weak_pm_relation(k: KripkeModel) -> Partition:
    """Greatest weak pm-bisimulation by pair deletion.

    ``E[i]`` is the bitmask of elements still related to i. A pair (i, j)
    survives when every challenge i ~ u >= d (u a neighbour of i over R or its
    converse, d an R-predecessor of u) is answered from j by a path through
    E[i] | E[u] whose last step goes down into E[d].
    """
    k.require_reflexive()
    n = len(k.elements)
    lets = k.letter_sets
    sym = [sum(1 << j for j in s) for s in k.sym]
    pred = [sum(1 << j for j in p) for p in k.pred]
    E = [sum(1 << j for j in range(n) if lets[j] == lets[i]) for i in range(n)]

    # reach-below sets depend only on (start, allowed mask); masks repeat a
    # lot, so each component of an allowed set is explored once
    below_of: dict = {}

    def below(start: int, allowed: int) -> int:
        comp = below_of.setdefault(allowed, {})
        if start not in comp:
            reach, frontier = 1 << start, 1 << start
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= sym[v]
                frontier = nxt & allowed & ~reach
                reach |= frontier
            out = 0
            for v in _bits(reach):
                out |= pred[v]
            for v in _bits(reach):
                comp[v] = out
        return comp[start]

    def challenges(i: int) -> set:
        return {(E[i] | E[u], E[d]) for u in k.sym[i] for d in k.pred[u]}

    def answered(j: int, chal) -> bool:
        return all(E_d & below(j, allowed) for allowed, E_d in chal)

    changed = True
    while changed:
        changed = False
        chal = [challenges(i) for i in range(n)]
        for i in range(n):
            for j in list(_bits(E[i])):
                if j <= i:
                    continue
                if not (answered(j, chal[i]) and answered(i, chal[j])):
                    E[i] &= ~(1 << j)
                    E[j] &= ~(1 << i)
                    changed = True

    for i in range(n):
        for j in _bits(E[i]):
            if E[j] != E[i]:
                raise InternalError("weak pm-bisimilarity came out non-transitive")
    return Partition.from_labels(k.elements, E)


def lcc_classes(k: KripkeModel) -> Partition:
    """Components over R and its converse using only equal-letter edges."""
    n = len(k.elements)
    lets = k.letter_sets
    rows, cols = [], []
    for i, ss in enumerate(k.succ):
        for j in ss:
            if i != j and lets[i] == lets[j]:
                rows.append(i)
                cols.append(j)
    g = sparse.csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = csgraph.connected_components(g, directed=True, connection="weak")
    return Partition.from_labels(k.elements, labels.tolist())
