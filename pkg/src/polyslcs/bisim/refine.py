"""Partition refinement for strong and branching bisimilarity on an Lts."""
from __future__ import annotations

from collections import deque
from graphlib import TopologicalSorter

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .lts import TAU, Lts
from .partition import Partition


def strong_bisim(lts: Lts) -> Partition:
    """Coarsest strong bisimulation (naive splitter-queue refinement)."""
    n = len(lts.states)
    pre = [dict() for _ in lts.labels]  # label -> target -> sources
    for a, lab, b in lts.transitions:
        pre[lab].setdefault(b, []).append(a)
    block_of = [0] * n
    blocks = {0: set(range(n))} if n else {}
    queue = deque(blocks)
    queued = set(blocks)
    next_id = 1
    while queue:
        splitter = queue.popleft()
        queued.discard(splitter)
        members = sorted(blocks.get(splitter, ()))
        for lab in range(len(lts.labels)):
            hit = set()
            for t in members:
                hit.update(pre[lab].get(t, ()))
            touched: dict[int, set] = {}
            for s in hit:
                touched.setdefault(block_of[s], set()).add(s)
            for bid in sorted(touched):
                inside = touched[bid]
                if len(inside) == len(blocks[bid]):
                    continue
                blocks[bid] -= inside
                new = next_id
                next_id += 1
                blocks[new] = inside
                for s in inside:
                    block_of[s] = new
                for b in (bid, new):
                    if b not in queued:
                        queue.append(b)
                        queued.add(b)
            members = sorted(blocks.get(splitter, ()))
    return Partition.from_labels(lts.states, block_of)


def branching_bisim(lts: Lts, silent: str = TAU) -> Partition:
    """Coarsest (divergence-blind) branching bisimulation by signature
    refinement. The signature of s collects (label, target block) for every
    visible step reachable from s through inert silent steps; a silent step
    is inert when it stays inside the current block."""
    n = len(lts.states)
    tau = lts.label_index(silent)
    block_of = np.zeros(n, dtype=np.int64)
    n_blocks = 1 if n else 0
    src = np.array([t[0] for t in lts.transitions], dtype=np.int64)
    lab = np.array([t[1] for t in lts.transitions], dtype=np.int64)
    dst = np.array([t[2] for t in lts.transitions], dtype=np.int64)
    while True:
        inert = (lab == tau) & (block_of[src] == block_of[dst]) if tau is not None else np.zeros(len(src), bool)
        direct = [set() for _ in range(n)]
        for a, l, b in zip(src[~inert].tolist(), lab[~inert].tolist(), block_of[dst[~inert]].tolist()):
            direct[a].add((l, b))
        sigs = _close_over(n, src[inert], dst[inert], direct)
        keys: dict = {}
        new = np.empty(n, dtype=np.int64)
        for s in range(n):
            key = (int(block_of[s]), sigs[s])
            new[s] = keys.setdefault(key, len(keys))
        if len(keys) == n_blocks:
            break
        block_of, n_blocks = new, len(keys)
    return Partition.from_labels(lts.states, block_of.tolist())


def _close_over(n, src, dst, direct):
    """Union of ``direct`` over everything reachable along src->dst edges,
    computed per strongly connected component in reverse topological order."""
    g = sparse.csr_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    n_comp, comp = csgraph.connected_components(g, directed=True, connection="strong")
    comp_sig = [set() for _ in range(n_comp)]
    for s in range(n):
        comp_sig[comp[s]] |= direct[s]
    succ = [set() for _ in range(n_comp)]
    for a, b in zip(comp[src].tolist(), comp[dst].tolist()):
        if a != b:
            succ[a].add(b)
    # successors are listed as dependencies, so they are finished first
    for c in TopologicalSorter({c: succ[c] for c in range(n_comp)}).static_order():
        for d in succ[c]:
            comp_sig[c] |= comp_sig[d]
    frozen = [frozenset(s) for s in comp_sig]
    return [frozen[comp[s]] for s in range(n)]
