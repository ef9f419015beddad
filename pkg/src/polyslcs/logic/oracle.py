"""Test oracles that evaluate the path clauses directly.

``sat_oracle`` unrolls pm-paths one position at a time for every start
element at once: row s of the frontier holds the elements that can sit at
some position >= 1 of a pm-path prefix from s whose positions so far satisfy
the "through" formula. A start is accepted once some frontier element has a
converse step into the target set. Nothing here shares code with the checker.

``sat_enumerate`` is the literal version: it enumerates paths element by
element with a cap on repeated visits, and is only usable on tiny models.
"""
from __future__ import annotations

import numpy as np

from ..core import KripkeModel
from ..errors import OracleBoundExceeded
from .formula import And, Atom, Eta, Formula, Gamma, Not, Or, Top, walk

DEFAULT_BOUND = 12


MAX_ELEMENTS = 64  # one uint64 word per set


def _relation(k: KripkeModel) -> np.ndarray:
    n = len(k.elements)
    r = np.zeros((n, n), dtype=bool)
    for a, b in k.relation:
        r[k.index[a], k.index[b]] = True
    return r


def _words(r: np.ndarray) -> np.ndarray:
    """Row i of a boolean matrix as a uint64 bitset."""
    n = r.shape[1]
    weights = np.uint64(1) << np.arange(n, dtype=np.uint64)
    return (r.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


def _spread(sets: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """OR of rows[v] over the members v of each set (uint64 array)."""
    out = np.zeros_like(sets)
    one = np.uint64(1)
    for v in range(len(rows)):
        hit = (sets >> np.uint64(v)) & one
        out |= hit * rows[v]
    return out


def _unroll(r: np.ndarray, s1: np.ndarray, s2: np.ndarray, need_start: bool) -> np.ndarray:
    """Accepting starts, as bitsets, for a batch of (S1, S2) bitset pairs.

    ``front[b, s]`` is the set of elements that occupy some position >= 1 of
    a pm-path prefix from start s whose positions (start included for eta)
    all lie in S1.
    """
    n = r.shape[0]
    succ = _words(r)
    sym = _words(r | r.T)
    s1 = np.asarray(s1, dtype=np.uint64).reshape(-1)
    s2 = np.asarray(s2, dtype=np.uint64).reshape(-1)
    # end[b]: elements v with some z in S2 and R(z, v) (a converse step v -> z)
    end = _spread(s2, succ)
    # position 1 follows an R step from the start and is an intermediate position
    front = succ[None, :] & s1[:, None]
    if need_start:
        starts = (s1[:, None] >> np.arange(n, dtype=np.uint64)[None, :]) & np.uint64(1)
        front = front * starts
    acc = (front & end[:, None]) != 0
    for _ in range(2 * n + 2):
        nxt = front | (_spread(front, sym) & s1[:, None])
        if np.array_equal(nxt, front):
            break
        front = nxt
        acc |= (front & end[:, None]) != 0
    weights = np.uint64(1) << np.arange(n, dtype=np.uint64)
    return (acc.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


def modal_oracle(k: KripkeModel, s1, s2, is_eta: bool) -> np.ndarray:
    """Batched eta (``is_eta``) or gamma extension; arguments and result are
    arrays of uint64 bitsets over ``k.elements``."""
    if len(k.elements) > MAX_ELEMENTS:
        raise OracleBoundExceeded(f"the oracle handles at most {MAX_ELEMENTS} elements")
    r = _relation(k)
    s1 = np.asarray(s1, dtype=np.uint64).reshape(-1)
    s2 = np.asarray(s2, dtype=np.uint64).reshape(-1)
    s1, s2 = np.broadcast_arrays(s1, s2)
    chunk = 4096
    return np.concatenate([_unroll(r, s1[i:i + chunk], s2[i:i + chunk], is_eta)
                           for i in range(0, len(s1), chunk)] or [np.zeros(0, np.uint64)])


def _pack(m: np.ndarray) -> np.uint64:
    return np.uint64(sum(1 << int(i) for i in np.flatnonzero(m)))


def _unpack(x, n) -> np.ndarray:
    x = int(x)
    return np.array([(x >> i) & 1 for i in range(n)], dtype=bool)


def _evaluate(k: KripkeModel, f: Formula, modal, bound) -> frozenset:
    n = len(k.elements)
    if bound is not None and n > bound:
        raise OracleBoundExceeded(f"model has {n} elements, oracle bound is {bound}")
    memo = {}
    for node in walk(f):
        if isinstance(node, Top):
            v = np.ones(n, dtype=bool)
        elif isinstance(node, Atom):
            v = np.array([w in k.valuation.get(node.name, ()) for w in k.elements], dtype=bool)
        elif isinstance(node, Not):
            v = ~memo[id(node.arg)]
        elif isinstance(node, And):
            v = memo[id(node.left)] & memo[id(node.right)]
        elif isinstance(node, Or):
            v = memo[id(node.left)] | memo[id(node.right)]
        elif isinstance(node, (Eta, Gamma)):
            v = modal(memo[id(node.left)], memo[id(node.right)], isinstance(node, Eta))
        else:
            raise TypeError(type(node).__name__)
        memo[id(node)] = v
    return frozenset(k.elements[i] for i in np.flatnonzero(memo[id(f)]))


def sat_oracle(k: KripkeModel, f: Formula, bound: int | None = DEFAULT_BOUND) -> frozenset:
    n = len(k.elements)
    if n > MAX_ELEMENTS:
        raise OracleBoundExceeded(f"the oracle handles at most {MAX_ELEMENTS} elements")
    r = _relation(k)

    def modal(s1, s2, is_eta):
        return _unpack(_unroll(r, _pack(s1), _pack(s2), is_eta)[0], n)

    return _evaluate(k, f, modal, bound)


def sat_enumerate(k: KripkeModel, f: Formula, cap: int = 2, bound: int | None = 8) -> frozenset:
    """Eta via down-paths, gamma via pm-paths, no element visited more than
    ``cap`` times (for gamma the start position is not counted)."""
    r = _relation(k)
    n = len(k.elements)
    sym = r | r.T

    def modal(s1, s2, is_eta):
        out = np.zeros(n, dtype=bool)
        for s in range(n):
            out[s] = _search_eta(s, r, sym, s1, s2, cap) if is_eta else _search_gamma(s, r, sym, s1, s2, cap)
        return out

    return _evaluate(k, f, modal, bound)


def _extend(v, visits, r, sym, s1, s2, cap):
    """Can the path ending at v (in S1) be finished by a converse step into S2?"""
    n = len(s1)
    for z in range(n):
        if s2[z] and r[z, v] and visits[z] < cap:
            return True
    for u in range(n):
        if sym[v, u] and s1[u] and visits[u] < cap:
            visits[u] += 1
            if _extend(u, visits, r, sym, s1, s2, cap):
                return True
            visits[u] -= 1
    return False


def _search_eta(s, r, sym, s1, s2, cap):
    # down-path s = p0 .. pl with p0..p(l-1) in S1, pl in S2, R(pl, p(l-1)), l >= 1
    if not s1[s]:
        return False
    visits = [0] * len(s1)
    visits[s] = 1
    return _extend(s, visits, r, sym, s1, s2, cap)


def _search_gamma(s, r, sym, s1, s2, cap):
    # pm-path s = p0 .. pl, l >= 2, R(p0, p1), p1..p(l-1) in S1, pl in S2, R(pl, p(l-1))
    n = len(s1)
    for p1 in range(n):
        if r[s, p1] and s1[p1]:
            visits = [0] * n
            visits[p1] = 1
            if _extend(p1, visits, r, sym, s1, s2, cap):
                return True
    return False
