"""Set partitions of ``range(n)`` and the refinement order."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError, GraphError

DEFAULT_PARTITION_CAP = 10


class Partition:
    """A partition of ``{0, ..., n-1}``.

    Blocks are stored as sorted tuples, and the blocks themselves are sorted
    by their minimum element, so two equal partitions always compare and
    hash equal.
    """

    __slots__ = ("blocks", "n", "_label")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        normalized = [tuple(sorted(set(b))) for b in blocks]
        if any(not b for b in normalized):
            raise GraphError("partition blocks must be nonempty")
        normalized.sort(key=lambda b: b[0])
        n = sum(len(b) for b in normalized)
        label = [-1] * n
        for k, block in enumerate(normalized):
            for x in block:
                if not 0 <= x < n or label[x] != -1:
                    raise GraphError(f"blocks do not partition range({n})")
                label[x] = k
        self.blocks = tuple(normalized)
        self.n = n
        self._label = tuple(label)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Partition:
        groups: dict[int, list[int]] = {}
        for i, lab in enumerate(labels):
            groups.setdefault(lab, []).append(i)
        return cls(groups.values())

    @classmethod
    def discrete(cls, n: int) -> Partition:
        return cls([i] for i in range(n))

    @classmethod
    def indiscrete(cls, n: int) -> Partition:
        return cls([range(n)] if n else [])

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        inner = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return f"Partition({inner})"

    def block_of(self, x: int) -> int:
        """Index of the block containing ``x``."""
        return self._label[x]

    @property
    def labels(self) -> tuple[int, ...]:
        return self._label

    def same_block(self, x: int, y: int) -> bool:
        return self._label[x] == self._label[y]

    def is_discrete(self) -> bool:
        return len(self.blocks) == self.n

    def is_indiscrete(self) -> bool:
        return len(self.blocks) <= 1

    def block_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << x for x in b) for b in self.blocks)

    def collapses_mask(self, vertex_mask: int) -> bool:
        """True iff every vertex in the bitmask lies in a single block."""
        if vertex_mask == 0:
            return True
        return any(vertex_mask & ~bm == 0 for bm in self.block_masks())


def refines(a: Partition, b: Partition) -> bool:
    """``a`` refines ``b``: every block of ``a`` sits inside a block of ``b``."""
    if a.n != b.n:
        raise GraphError(f"partitions of different sets ({a.n} vs {b.n} elements)")
    return all(len({b.block_of(x) for x in block}) == 1 for block in a.blocks)


def quotient_partition(a: Partition, b: Partition) -> Partition:
    """The partition ``b/a`` on the blocks of ``a`` (block k of ``a`` is element k)."""
    if not refines(a, b):
        raise GraphError("quotient_partition requires a to refine b")
    return Partition.from_labels([b.block_of(block[0]) for block in a.blocks])


def _restricted_growth(n: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    labels = [0] * n
    maxes = [0] * n  # maxes[i] = max(labels[:i+1])

    def rec(i):
        if i == n:
            yield list(labels)
            return
        for lab in range(maxes[i - 1] + 2):
            labels[i] = lab
            maxes[i] = max(maxes[i - 1], lab)
            yield from rec(i + 1)

    yield from rec(1)


def all_partitions(n: int, cap: int = DEFAULT_PARTITION_CAP) -> Iterator[Partition]:
    """Every partition of ``range(n)``, in restricted-growth-string order."""
    if n > cap:
        raise CapExceededError("partition enumeration", n, cap)
    for labels in _restricted_growth(n):
        yield Partition.from_labels(labels)


def refinements(a: Partition) -> Iterator[Partition]:
    """All partitions finer than or equal to ``a``."""
    per_block = []
    for block in a.blocks:
        subs = []
        for labels in _restricted_growth(len(block)):
            groups: dict[int, list[int]] = {}
            for x, lab in zip(block, labels):
                groups.setdefault(lab, []).append(x)
            subs.append(list(groups.values()))
        per_block.append(subs)
    for choice in product(*per_block):
        yield Partition(blk for sub in choice for blk in sub)
