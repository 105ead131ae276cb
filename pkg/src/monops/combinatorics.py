"""Labels, label sets and deterministic set enumeration.

A label is either an atom (a Python ``int``) or a :class:`Block`, a set of
labels.  Blocks let structures live over the blocks of a partition, and over
partitions of partitions, with the same machinery as over plain atoms.

Labels are totally ordered by :func:`label_key`: atoms by value and before
every block, blocks lexicographically by their sorted members.  Two disjoint
blocks therefore compare by their minima.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

Label = Union[int, "Block"]
LabelSet = tuple  # sorted, duplicate-free tuple of labels
SetPartition = tuple  # tuple of LabelSets sorted by their minima


def label_key(label) -> tuple:
    if type(label) is int:
        return (0, label)
    return label.key


class Block(frozenset):
    """An immutable set of labels usable as a label itself."""

    __slots__ = ("key", "labels")

    def __new__(cls, members: Iterable = ()):
        self = super().__new__(cls, members)
        labels = tuple(sorted(self, key=label_key))
        self.labels = labels
        self.key = (1, tuple(label_key(x) for x in labels))
        return self

    # order as labels, not by inclusion; ints compare against blocks through
    # the reflected operators
    def __lt__(self, other):
        return self.key < label_key(other)

    def __le__(self, other):
        return self.key <= label_key(other)

    def __gt__(self, other):
        return self.key > label_key(other)

    def __ge__(self, other):
        return self.key >= label_key(other)

    __hash__ = frozenset.__hash__

    def __repr__(self) -> str:
        return "{%s}" % ",".join(repr(x) for x in self.labels)

    def __reduce__(self):
        return (Block, (tuple(self.labels),))


def labelset(labels: Iterable) -> LabelSet:
    return tuple(sorted(set(labels)))


def ground(n: int) -> LabelSet:
    """The standard label set [n] = (1, ..., n)."""
    return tuple(range(1, n + 1))


def flatten(label) -> "Block":
    """Union of a block of blocks, as a block of the underlying labels."""
    members = []
    for b in label:
        members.extend(b)
    return Block(members)


def min_label(labels: Sequence):
    return min(labels, key=label_key)


def subsets(v: Sequence) -> list[tuple[LabelSet, LabelSet]]:
    """All ordered decompositions ``(V1, V2)`` of ``v``, binary-counter order.

    Bit ``i`` of the counter puts ``v[i]`` in ``V1``.
    """
    v = labelset(v)
    n = len(v)
    out = []
    for mask in range(1 << n):
        v1 = tuple(v[i] for i in range(n) if mask >> i & 1)
        v2 = tuple(v[i] for i in range(n) if not mask >> i & 1)
        out.append((v1, v2))
    return out


def _rgs(n: int):
    """Restricted growth strings of length n in lexicographic order."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i, m):
        if i == n:
            yield tuple(a)
            return
        for j in range(m + 2):
            a[i] = j
            yield from rec(i + 1, max(m, j))

    a[0] = 0
    yield from rec(1, 0)


def set_partitions(v: Sequence) -> list[SetPartition]:
    """All partitions of ``v`` in restricted-growth-string order."""
    v = labelset(v)
    out = []
    for rgs in _rgs(len(v)):
        blocks: list[list] = []
        for x, b in zip(v, rgs):
            if b == len(blocks):
                blocks.append([])
            blocks[b].append(x)
        # RGS order already sorts blocks by their minima
        out.append(tuple(tuple(b) for b in blocks))
    return out


def partition_ground(p: SetPartition) -> LabelSet:
    return labelset(x for b in p for x in b)


def refine_order(p1: SetPartition, p2: SetPartition) -> bool:
    """True iff every block of ``p1`` lies inside a block of ``p2``."""
    if partition_ground(p1) != partition_ground(p2):
        raise ValueError("partitions of different ground sets")
    where = {x: i for i, b in enumerate(p2) for x in b}
    return all(len({where[x] for x in b}) == 1 for b in p1)

