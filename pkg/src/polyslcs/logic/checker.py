"""Satisfaction sets on reflexive Kripke models.

Both modalities share one reachability step. With S1, S2 the argument sets:

    D = elements of S1 with an R-predecessor in S2
    Y = elements of S1 connected to D inside S1 (steps over R and its converse)

eta(f1, f2) holds exactly on Y, gamma(f1, f2) on the R-predecessors of Y.
"""
from __future__ import annotations

import numpy as np
from scipy.sparse import csgraph

from ..core import KripkeModel
from ..errors import NotEtaFragment
from .formula import And, Atom, Eta, Formula, Gamma, Not, Or, Top, walk


SMALL = 128  # models up to this size use the bitset backend


def _bit_iter(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_bits(m: np.ndarray) -> int:
    return int.from_bytes(np.packbits(m, bitorder="little").tobytes(), "little")


def from_bits(x: int, n: int) -> np.ndarray:
    raw = np.frombuffer(x.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def eta_bits(k: KripkeModel, s1: int, s2: int) -> int:
    succ, _, sym = k.bits
    up = 0
    for z in _bit_iter(s2):
        up |= succ[z]
    y = frontier = s1 & up
    while frontier:
        nxt = 0
        for v in _bit_iter(frontier):
            nxt |= sym[v]
        frontier = nxt & s1 & ~y
        y |= frontier
    return y


def gamma_bits(k: KripkeModel, s1: int, s2: int) -> int:
    pred = k.bits[1]
    out = 0
    for u in _bit_iter(eta_bits(k, s1, s2)):
        out |= pred[u]
    return out


def eta_mask(k: KripkeModel, s1: np.ndarray, s2: np.ndarray) -> np.ndarray:
    n = len(k.elements)
    if n <= SMALL:
        return from_bits(eta_bits(k, to_bits(s1), to_bits(s2)), n)
    return _eta_sparse(k, s1, s2)


def _eta_sparse(k: KripkeModel, s1: np.ndarray, s2: np.ndarray) -> np.ndarray:
    rel = k.rel_matrix
    # (R^T s2)[u] counts predecessors of u lying in S2
    d = s1 & (rel.T @ s2.astype(np.int32) > 0)
    if not d.any():
        return np.zeros_like(s1)
    idx = np.flatnonzero(s1)
    sub = k.sym_matrix[idx][:, idx]
    _, labels = csgraph.connected_components(sub, directed=False)
    hit = np.unique(labels[d[idx]])
    out = np.zeros_like(s1)
    out[idx[np.isin(labels, hit)]] = True
    return out


def gamma_mask(k: KripkeModel, s1: np.ndarray, s2: np.ndarray) -> np.ndarray:
    n = len(k.elements)
    if n <= SMALL:
        return from_bits(gamma_bits(k, to_bits(s1), to_bits(s2)), n)
    y = _eta_sparse(k, s1, s2)
    return k.rel_matrix @ y.astype(np.int32) > 0


def sat_mask(k: KripkeModel, f: Formula, memo: dict | None = None) -> np.ndarray:
    """Boolean vector over ``k.elements``; subformulas are memoised by identity."""
    k.require_reflexive()
    memo = {} if memo is None else memo
    n = len(k.elements)
    for node in walk(f):
        key = id(node)
        if key in memo:
            continue
        if isinstance(node, Top):
            v = np.ones(n, dtype=bool)
        elif isinstance(node, Atom):
            v = k.mask(k.valuation.get(node.name, ()))
        elif isinstance(node, Not):
            v = ~memo[id(node.arg)]
        elif isinstance(node, And):
            v = memo[id(node.left)] & memo[id(node.right)]
        elif isinstance(node, Or):
            v = memo[id(node.left)] | memo[id(node.right)]
        elif isinstance(node, Eta):
            v = eta_mask(k, memo[id(node.left)], memo[id(node.right)])
        elif isinstance(node, Gamma):
            v = gamma_mask(k, memo[id(node.left)], memo[id(node.right)])
        else:
            raise TypeError(f"not a formula node: {type(node).__name__}")
        memo[key] = v
    return memo[id(f)]


def sat(k: KripkeModel, f: Formula) -> frozenset:
    m = sat_mask(k, f)
    return frozenset(k.elements[i] for i in np.flatnonzero(m))


def sat_list(k: KripkeModel, f: Formula) -> list:
    """Satisfaction set in element order."""
    m = sat_mask(k, f)
    return [k.elements[i] for i in np.flatnonzero(m)]


def encode_E(f: Formula) -> Formula:
    """Translate an eta formula into gamma: eta(a, b) becomes a & gamma(a, b)."""
    memo = {}
    for node in walk(f):
        if isinstance(node, Gamma):
            raise NotEtaFragment("input contains gamma")
        if isinstance(node, (Top, Atom)):
            out = node
        elif isinstance(node, Not):
            out = Not(memo[id(node.arg)])
        elif isinstance(node, Eta):
            a = memo[id(node.left)]
            out = And(a, Gamma(a, memo[id(node.right)]))
        else:
            out = type(node)(memo[id(node.left)], memo[id(node.right)])
        memo[id(node)] = out
    return memo[id(f)]
