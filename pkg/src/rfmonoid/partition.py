"""Equivalence relations on the elements ``0..n-1`` of a finite structure."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"

    def __str__(self):
        return self.value

    @property
    def right(self) -> bool:
        return self is not Side.LEFT

    @property
    def left(self) -> bool:
        return self is not Side.RIGHT


def _canonical(keys: Iterable) -> tuple[int, ...]:
    seen: dict = {}
    out = []
    for k in keys:
        if k not in seen:
            seen[k] = len(seen)
        out.append(seen[k])
    return tuple(out)


@dataclass(frozen=True)
class Partition:
    """A partition stored as one class label per element.

    Labels are canonical: classes are numbered in order of their minimal
    element, so two equal partitions compare equal and hash alike.
    """

    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", _canonical(int(v) for v in self.labels))

    @classmethod
    def from_keys(cls, keys: Iterable) -> Partition:
        """Group positions by arbitrary hashable keys."""
        return cls(_canonical(keys))

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> Partition:
        """Elements not covered by ``classes`` become singletons."""
        lab = [-1] * n
        for c, block in enumerate(classes):
            for x in block:
                if lab[x] != -1:
                    raise ValueError(f"element {x} listed in two classes")
                lab[x] = c
        nxt = max(lab, default=-1) + 1
        for x in range(n):
            if lab[x] == -1:
                lab[x] = nxt
                nxt += 1
        return cls(lab)

    @classmethod
    def identity(cls, n: int) -> Partition:
        return cls(range(n))

    @classmethod
    def universal(cls, n: int) -> Partition:
        return cls((0,) * n)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def n_classes(self) -> int:
        return max(self.labels, default=-1) + 1

    index = n_classes

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.labels, dtype=np.int64)

    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n_classes)]
        for x, c in enumerate(self.labels):
            out[c].append(x)
        return tuple(tuple(c) for c in out)

    def class_of(self, x: int) -> tuple[int, ...]:
        c = self.labels[x]
        return tuple(y for y, d in enumerate(self.labels) if d == c)

    def representatives(self) -> tuple[int, ...]:
        """Minimal element of each class, in class order."""
        reps = [-1] * self.n_classes
        for x, c in enumerate(self.labels):
            if reps[c] == -1:
                reps[c] = x
        return tuple(reps)

    def same(self, x: int, y: int) -> bool:
        return self.labels[x] == self.labels[y]

    def __contains__(self, pair) -> bool:
        x, y = pair
        return self.labels[x] == self.labels[y]

    def refines(self, other: Partition) -> bool:
        """True iff self is contained in other as a relation."""
        mapping: dict[int, int] = {}
        for a, b in zip(self.labels, other.labels):
            if mapping.setdefault(a, b) != b:
                return False
        return True

    def meet(self, other: Partition) -> Partition:
        return Partition.from_keys(zip(self.labels, other.labels))

    def join(self, other: Partition) -> Partition:
        ds = DisjointSet(range(self.size))
        for p in (self, other):
            for block in p.classes():
                for y in block[1:]:
                    ds.merge(block[0], y)
        return Partition.from_keys(ds[x] for x in range(self.size))

    def is_identity(self) -> bool:
        return self.n_classes == self.size

    def pairs(self):
        """All ordered pairs (x, y), x != y, in one class."""
        for block in self.classes():
            for x in block:
                for y in block:
                    if x != y:
                        yield x, y

    def __str__(self):
        return " | ".join(" ".join(map(str, c)) for c in self.classes())


def stability_violation(
    table: np.ndarray,
    labels: Sequence[int],
    side: Side,
    multipliers: Iterable[int] | None = None,
):
    """First (x, y, m, side) with x, y related but x*m, y*m (or m*x, m*y) not.

    ``x`` is always the minimal element of its class.  Returns None when the
    labelling is stable under every multiplier on the requested side(s).
    """
    side = Side(side)
    lab = np.asarray(labels)
    n = len(lab)
    first = np.full(lab.max() + 1 if n else 0, n, dtype=np.int64)
    np.minimum.at(first, lab, np.arange(n))
    rep = first[lab]
    ms = range(table.shape[1]) if multipliers is None else multipliers
    for m in ms:
        for s, column in ((Side.RIGHT, table[:, m]), (Side.LEFT, table[m, :])):
            if (s is Side.RIGHT and not side.right) or (s is Side.LEFT and not side.left):
                continue
            img = lab[column]
            bad = np.flatnonzero(img != img[rep])
            if bad.size:
                x = int(bad[0])
                return int(rep[x]), x, int(m), s
    return None
