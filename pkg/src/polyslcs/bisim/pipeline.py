"""The three routes to the weak pm-bisimilarity partition."""
from __future__ import annotations

from ..core import KripkeModel
from .lts import encode_ltsA, encode_ltsC
from .partition import Partition, lift
from .refine import branching_bisim, strong_bisim
from .weak import weak_pm_relation

METHODS = ("direct", "ltsC", "ltsA")


def minimize(k: KripkeModel, method: str = "ltsA") -> Partition:
    if method == "direct":
        return weak_pm_relation(k)
    if method == "ltsC":
        return branching_bisim(encode_ltsC(k))
    if method == "ltsA":
        lts, classes = encode_ltsA(k)
        return lift(strong_bisim(lts), classes)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def minimize_all(k: KripkeModel, methods=METHODS) -> dict[str, Partition]:
    return {m: minimize(k, m) for m in methods}
