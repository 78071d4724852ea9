"""One- and two-sided congruences on finite monoids.

Covers verification, principal congruences, the largest congruence inside a
partition (by Hopcroft-style partition refinement), Q-sets, the
correspondence between right congruences and actions with a source, brute
force enumeration for tiny monoids and rf-compatibility of ideals.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet
from sympy.utilities.iterables import multiset_partitions

from . import config
from .errors import NoSource, NotACongruence, NotAnIdeal, OrderBoundExceeded
from .green import _generators
from .monoid import FiniteMonoid, FiniteSemigroup
from .partition import Partition, Side, stability_violation


@dataclass(frozen=True)
class Congruence:
    partition: Partition
    side: Side
    verified: bool = False

    @property
    def index(self) -> int:
        return self.partition.n_classes

    def __contains__(self, pair) -> bool:
        return pair in self.partition

    def separates(self, x: int, y: int) -> bool:
        return not self.partition.same(x, y)

    def classes(self):
        return self.partition.classes()


class Violation(NamedTuple):
    x: int
    y: int
    m: int
    side: Side


class CongruenceCheck(NamedTuple):
    ok: bool
    witness: Violation | None

    def __bool__(self):
        return self.ok


def _as_partition(pi) -> Partition:
    return getattr(pi, "partition", pi)


def is_congruence(M: FiniteSemigroup, pi, side, multipliers: Iterable[int] | None = None) -> CongruenceCheck:
    """Stability check; on failure the witness (x, y, m, side) has x the class minimum."""
    part = _as_partition(pi)
    if part.size != M.size:
        raise ValueError("partition is over a different number of elements")
    bad = stability_violation(M.table, part.labels, Side(side), multipliers)
    if bad is None:
        return CongruenceCheck(True, None)
    return CongruenceCheck(False, Violation(*bad))


def verify_congruence(M: FiniteSemigroup, pi, side) -> Congruence:
    part = _as_partition(pi)
    check = is_congruence(M, part, side)
    if not check:
        raise NotACongruence(*check.witness)
    return Congruence(part, Side(side), True)


def _letters(M: FiniteSemigroup, side: Side) -> list[np.ndarray]:
    """The maps x -> x*g and/or x -> g*x for each generator g."""
    gens = _generators(M)
    out = []
    if side.right:
        out += [np.asarray(M.table[:, g]) for g in gens]
    if side.left:
        out += [np.asarray(M.table[g, :]) for g in gens]
    return out


def principal_congruence(M: FiniteSemigroup, pairs: Iterable[tuple[int, int]], side) -> Congruence:
    """Smallest congruence of the given side containing ``pairs``."""
    side = Side(side)
    n = M.size
    ds = DisjointSet(range(n))
    queue = []
    for x, y in pairs:
        M.check_index(x)
        M.check_index(y)
        if ds.merge(x, y):
            queue.append((x, y))
    letters = _letters(M, side)
    while queue:
        x, y = queue.pop()
        for f in letters:
            a, b = int(f[x]), int(f[y])
            if ds.merge(a, b):
                queue.append((a, b))
    part = Partition.from_keys(ds[x] for x in range(n))
    return verify_congruence(M, part, side)


def _refine(n: int, start: Partition, letters: Sequence[np.ndarray]) -> Partition:
    """Coarsest refinement of ``start`` stable under every map in ``letters``.

    Hopcroft's scheme: blocks are splitters, popped in ascending block id;
    after a split the new half joins the worklist if its parent is waiting,
    otherwise the smaller half does.
    """
    preimage = []
    for f in letters:
        pre: list[list[int]] = [[] for _ in range(n)]
        for x, fx in enumerate(f.tolist()):
            pre[fx].append(x)
        preimage.append(pre)
    block_of = list(start.labels)
    blocks: list[set[int]] = [set(c) for c in start.classes()]
    waiting = list(range(len(blocks)))
    heapq.heapify(waiting)
    in_wait = set(waiting)
    while waiting:
        s = heapq.heappop(waiting)
        in_wait.discard(s)
        splitter = list(blocks[s])
        for pre in preimage:
            hit: dict[int, list[int]] = {}
            for t in splitter:
                for x in pre[t]:
                    hit.setdefault(block_of[x], []).append(x)
            for b in sorted(hit):
                xs = hit[b]
                if len(xs) == len(blocks[b]):
                    continue
                moved = set(xs)
                new = len(blocks)
                blocks[b] -= moved
                blocks.append(moved)
                for x in moved:
                    block_of[x] = new
                if b in in_wait:
                    heapq.heappush(waiting, new)
                    in_wait.add(new)
                else:
                    pick = new if len(moved) <= len(blocks[b]) else b
                    heapq.heappush(waiting, pick)
                    in_wait.add(pick)
    return Partition(block_of)


def largest_contained(M: FiniteMonoid, pi, side) -> Congruence:
    """Sigma_side(pi): the largest congruence of that side contained in pi."""
    side = Side(side)
    part = _as_partition(pi)
    res = _refine(M.size, part, _letters(M, side))
    return verify_congruence(M, res, side)


def largest_contained_by_definition(M: FiniteMonoid, pi, side) -> Partition:
    """Oracle: x ~ y iff x*m, y*m (resp. m*x, u*x*v) are pi-related for all m."""
    side = Side(side)
    lab = _as_partition(pi).array
    t = M.table
    if side is Side.RIGHT:
        keys = [tuple(lab[t[x, :]].tolist()) for x in M.elements]
    elif side is Side.LEFT:
        keys = [tuple(lab[t[:, x]].tolist()) for x in M.elements]
    else:
        keys = [lab[t[t[:, x], :]].tobytes() for x in M.elements]
    return Partition.from_keys(keys)


def q_set(M: FiniteSemigroup, s: int, X: Iterable[int]) -> frozenset[int]:
    """Q_M(s, X) = {x : s*x in X}."""
    inside = np.zeros(M.size, dtype=bool)
    inside[list(M.check_set(X))] = True
    return frozenset(int(x) for x in np.flatnonzero(inside[M.table[s, :]]))


def q_fingerprint_partition(M: FiniteMonoid, pi) -> Partition:
    """Group x by the tuple of sets Q_M(x, C_i) over the classes C_i of pi."""
    classes = _as_partition(pi).classes()
    return Partition.from_keys(tuple(q_set(M, x, c) for c in classes) for x in M.elements)


# -- actions --------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FiniteAction:
    """A right action: ``table[p, m]`` is the point p*m."""

    monoid: FiniteMonoid
    table: np.ndarray
    source: int | None = None

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        M = self.monoid
        if t.ndim != 2 or t.shape[1] != M.size:
            raise ValueError("action table must have one column per monoid element")
        if np.any((t < 0) | (t >= t.shape[0])):
            raise ValueError("action table entry out of range")
        if np.any(t[:, M.identity] != np.arange(t.shape[0])):
            raise ValueError("identity does not act trivially")
        if np.any(t[t, :] != t[:, M.table]):  # (p m) n == p (m n)
            raise ValueError("action is not compatible with multiplication")
        if self.source is not None and len(np.unique(t[self.source, :])) != t.shape[0]:
            raise ValueError(f"point {self.source} is not a source")

    @property
    def n_points(self) -> int:
        return self.table.shape[0]

    def act(self, p: int, m: int) -> int:
        return int(self.table[p, m])


def action_from_congruence(M: FiniteMonoid, rho) -> FiniteAction:
    """M acting on the classes of a right congruence, with source 1/rho."""
    part = verify_congruence(M, rho, Side.RIGHT).partition
    lab = part.array
    reps = list(part.representatives())
    return FiniteAction(M, lab[M.table[reps, :]], int(lab[M.identity]))


def congruence_from_action(A: FiniteAction) -> Congruence:
    """The right congruence {(m, n) : x0*m = x0*n} determined by the source x0."""
    if A.source is None:
        raise NoSource("action has no source point")
    return verify_congruence(A.monoid, Partition(A.table[A.source, :]), Side.RIGHT)


def kernel_of_action(A: FiniteAction) -> Congruence:
    part = Partition.from_keys(A.table[:, m].tobytes() for m in A.monoid.elements)
    return verify_congruence(A.monoid, part, Side.TWO_SIDED)


# -- enumeration and rf-compatibility ---------------------------------------------

def enumerate_congruences(
    M: FiniteSemigroup,
    side,
    elements: Iterable[int] | None = None,
    bound: int = config.ENUMERATION_BOUND,
) -> list[Congruence]:
    """Every congruence, by filtering all set partitions.

    With ``elements`` given (a subsemigroup such as an ideal), partitions of
    that subset are tried, extended by singletons outside it, and stability
    is required only under multiplication by the subset itself.  Results are
    sorted by class count, then by labels.
    """
    side = Side(side)
    elems = sorted(M.elements if elements is None else M.check_set(elements))
    if len(elems) > bound:
        raise OrderBoundExceeded(len(elems), bound)
    mults = None if elements is None else elems
    out = []
    for blocks in multiset_partitions(elems):
        part = Partition.from_classes(M.size, blocks)
        if stability_violation(M.table, part.labels, side, mults) is None:
            out.append(Congruence(part, side, True))
    out.sort(key=lambda c: (c.index, c.partition.labels))
    return out


def check_ideal(M: FiniteSemigroup, I: Iterable[int]) -> frozenset[int]:
    I = M.check_set(I)
    inside = np.zeros(M.size, dtype=bool)
    inside[list(I)] = True
    for x in sorted(I):
        out = np.flatnonzero(~inside[M.table[x, :]])
        if out.size:
            raise NotAnIdeal(x, int(out[0]), "right")
        out = np.flatnonzero(~inside[M.table[:, x]])
        if out.size:
            raise NotAnIdeal(x, int(out[0]), "left")
    return I


@dataclass(frozen=True)
class RfCompatibilityReport:
    ideal: tuple[int, ...]
    witnesses: dict[tuple[int, int], Partition | None]

    @property
    def compatible(self) -> bool:
        return all(w is not None for w in self.witnesses.values())

    @property
    def failures(self) -> list[tuple[int, int]]:
        return [p for p, w in self.witnesses.items() if w is None]


def rf_compatible_check(M: FiniteMonoid, I: Iterable[int], bound: int = config.ENUMERATION_BOUND) -> RfCompatibilityReport:
    """For each pair s < t in I, the first congruence rho on I (fewest classes
    first) separating them with rho u Delta_M a congruence on M."""
    I = check_ideal(M, I)
    congs = enumerate_congruences(M, Side.TWO_SIDED, I, bound)
    good = [c.partition for c in congs if stability_violation(M.table, c.partition.labels, Side.TWO_SIDED) is None]
    elems = sorted(I)
    wit = {}
    for i, s in enumerate(elems):
        for t in elems[i + 1:]:
            wit[(s, t)] = next((p for p in good if not p.same(s, t)), None)
    return RfCompatibilityReport(tuple(elems), wit)
