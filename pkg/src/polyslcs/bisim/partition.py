from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from ..errors import UniverseMismatch


@dataclass(frozen=True)
class Partition:
    """Blocks over an ordered universe, kept in canonical form: members in
    universe order, blocks ordered by their first member."""
    universe: tuple
    blocks: tuple

    def __post_init__(self):
        universe = tuple(self.universe)
        pos = {w: i for i, w in enumerate(universe)}
        if len(pos) != len(universe):
            raise UniverseMismatch("universe has duplicate elements")
        seen = set()
        blocks = []
        for b in self.blocks:
            b = sorted(b, key=lambda w: pos[w] if w in pos else -1)
            if not b:
                raise UniverseMismatch("empty block")
            for w in b:
                if w not in pos:
                    raise UniverseMismatch(f"{w!r} is not in the universe")
                if w in seen:
                    raise UniverseMismatch(f"{w!r} is in two blocks")
                seen.add(w)
            blocks.append(tuple(b))
        if len(seen) != len(universe):
            missing = [w for w in universe if w not in seen][:3]
            raise UniverseMismatch(f"blocks do not cover the universe, e.g. {missing}")
        blocks.sort(key=lambda b: pos[b[0]])
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "blocks", tuple(blocks))

    @classmethod
    def from_labels(cls, universe, labels) -> "Partition":
        """Group ``universe[i]`` by ``labels[i]`` (any hashable)."""
        groups: dict = {}
        for w, lab in zip(universe, labels):
            groups.setdefault(lab, []).append(w)
        return cls(tuple(universe), tuple(groups.values()))

    @cached_property
    def block_index(self) -> dict:
        return {w: i for i, b in enumerate(self.blocks) for w in b}

    def block_of(self, w) -> int:
        return self.block_index[w]

    def names(self) -> list[str]:
        return [f"B{i}" for i in range(len(self.blocks))]

    def __len__(self):
        return len(self.blocks)

    def as_sets(self) -> set[frozenset]:
        return {frozenset(b) for b in self.blocks}

    def refines(self, other: "Partition") -> bool:
        """Every block of self lies inside a block of other."""
        return all(len({other.block_of(w) for w in b}) == 1 for b in self.blocks)

    def to_dict(self) -> dict:
        return {"blocks": [{"name": n, "members": list(b)} for n, b in zip(self.names(), self.blocks)]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def lift(p: Partition, classes: Partition) -> Partition:
    """A partition of class representatives (first members of ``classes``
    blocks) pulled back to the universe of ``classes``."""
    rep_block = {}
    for bi, b in enumerate(p.blocks):
        for rep in b:
            rep_block[rep] = bi
    labels = [rep_block[classes.blocks[classes.block_of(w)][0]] for w in classes.universe]
    return Partition.from_labels(classes.universe, labels)
