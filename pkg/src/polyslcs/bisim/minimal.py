from __future__ import annotations

from ..core import KripkeModel
from ..errors import UniverseMismatch
from .partition import Partition


def minimal_model(k: KripkeModel, p: Partition) -> KripkeModel:
    """Quotient of k by p: blocks become states named B0, B1, ...; relation
    and valuation hold on a block pair / block when they hold for some member."""
    if set(p.universe) != set(k.elements) or len(p.universe) != len(k.elements):
        raise UniverseMismatch("partition universe differs from the model's elements")
    names = p.names()
    of = [names[p.block_of(w)] for w in k.elements]
    rel = {(of[i], of[j]) for i, ss in enumerate(k.succ) for j in ss}
    val = {q: {of[k.index[w]] for w in ws} for q, ws in k.valuation.items()}
    return KripkeModel(tuple(names), frozenset(rel), val, poset=False)
