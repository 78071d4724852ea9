"""Finite monoids as multiplication tables, and the basic constructions on them."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import config
from .errors import (
    AssociativityViolation,
    GeneratorsNotGenerating,
    IdentityNotPreserved,
    IdentityViolation,
    IndexOutOfRange,
    NotACongruence,
    NotAnIdeal,
    NotHomomorphism,
    OrderBoundExceeded,
)
from .partition import Partition, Side, stability_violation


def _frozen_table(table) -> np.ndarray:
    t = np.array(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValueError(f"table must be square, got shape {t.shape}")
    t.setflags(write=False)
    return t


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """A finite semigroup given by its multiplication table.

    ``table[x, y]`` is the index of ``x*y``.  Instances are treated as
    immutable; the table array is read-only.
    """

    table: np.ndarray
    names: tuple[str, ...] | None = None
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.size

    @property
    def elements(self) -> range:
        return range(self.size)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def product(self, *xs: int) -> int:
        acc = xs[0]
        for x in xs[1:]:
            acc = int(self.table[acc, x])
        return acc

    def name(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    def index_of(self, token: str) -> int:
        """Resolve a decimal index or an element name."""
        if self.names and token in self.names:
            return self.names.index(token)
        try:
            x = int(token)
        except ValueError:
            raise KeyError(f"unknown element {token!r}") from None
        self.check_index(x)
        return x

    def check_index(self, x: int) -> int:
        if not (0 <= x < self.size):
            raise IndexOutOfRange(x, self.size)
        return x

    def check_set(self, xs: Iterable[int]) -> frozenset[int]:
        s = frozenset(int(x) for x in xs)
        for x in s:
            self.check_index(x)
        return s

    def idempotents(self) -> tuple[int, ...]:
        d = np.diagonal(self.table)
        return tuple(int(x) for x in np.flatnonzero(d == np.arange(self.size)))

    def memo(self, key, compute):
        try:
            return self._memo[key]
        except KeyError:
            val = self._memo[key] = compute()
            return val

    def __repr__(self):
        return f"{type(self).__name__}(order={self.size})"


@dataclass(frozen=True, eq=False, repr=False)
class FiniteMonoid(FiniteSemigroup):
    identity: int = 0
    generators: tuple[int, ...] = ()
    zero: int | None = None


@dataclass(frozen=True, eq=False)
class Homomorphism:
    source: FiniteMonoid
    target: FiniteMonoid
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def kernel(self) -> Partition:
        return Partition.from_keys(self.map)


# -- validation ---------------------------------------------------------------

def _check_range(table: np.ndarray) -> None:
    n = table.shape[0]
    bad = np.argwhere((table < 0) | (table >= n))
    if bad.size:
        x, y = bad[0]
        raise IndexOutOfRange(int(table[x, y]), n)


def _associativity_violation(table: np.ndarray, middles: Iterable[int] | None = None):
    """First (x, y, z) with (xy)z != x(yz); y ranges over ``middles``.

    With ``middles`` a generating set this is Light's test, which is complete
    for a table whose elements are all products of the middles.
    """
    ys = range(table.shape[0]) if middles is None else middles
    for y in ys:
        lhs = table[table[:, y], :]            # (x*y)*z  indexed [x, z]
        rhs = table[:, table[y, :]]            # x*(y*z)  indexed [x, z]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            x, z = bad[0]
            return int(x), int(y), int(z)
    return None


def closure(table: np.ndarray, start: Iterable[int], gens: Sequence[int]) -> set[int]:
    """Elements reachable from ``start`` by right multiplication by ``gens``."""
    seen = set(int(s) for s in start)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = int(table[x, g])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def generating_set(table: np.ndarray, identity: int | None = None) -> tuple[int, ...]:
    """A small generating set, chosen greedily in index order.

    Elements outside S*S (indecomposables) are forced; the rest are added
    only when not yet reached.
    """
    n = table.shape[0]
    start = [] if identity is None else [identity]
    nontrivial = [x for x in range(n) if x != identity]
    squares = set(int(v) for v in table[np.ix_(nontrivial, nontrivial)].ravel()) if nontrivial else set()
    gens = [x for x in nontrivial if x not in squares]
    reached = closure(table, start + gens, gens)
    for x in nontrivial:
        if x not in reached:
            gens.append(x)
            reached = closure(table, start + gens, gens)
    return tuple(sorted(gens))


def _find_zero(table: np.ndarray) -> int | None:
    n = table.shape[0]
    for z in range(n):
        if np.all(table[z, :] == z) and np.all(table[:, z] == z):
            return z
    return None


def build_semigroup(table, names: Sequence[str] | None = None) -> FiniteSemigroup:
    t = _frozen_table(table)
    config.check_size(t.shape[0])
    _check_range(t)
    bad = _associativity_violation(t)
    if bad:
        raise AssociativityViolation(*bad)
    return FiniteSemigroup(t, tuple(names) if names is not None else None)


def build_monoid(
    size: int,
    table,
    identity: int,
    generators: Iterable[int],
    names: Sequence[str] | None = None,
    zero: int | None = None,
) -> FiniteMonoid:
    """Validate a multiplication table and wrap it as a monoid.

    Checks, in order: entry range, identity law, generator closure, and
    associativity (Light's test over the generators).  A zero is detected
    automatically when not supplied.
    """
    t = _frozen_table(table)
    if t.shape[0] != size:
        raise ValueError(f"table has {t.shape[0]} rows, size says {size}")
    config.check_size(size)
    _check_range(t)
    if not (0 <= identity < size):
        raise IndexOutOfRange(identity, size)
    idx = np.arange(size)
    bad = np.flatnonzero((t[identity, :] != idx) | (t[:, identity] != idx))
    if bad.size:
        raise IdentityViolation(int(bad[0]), identity)
    gens = tuple(sorted({int(g) for g in generators}))
    for g in gens:
        if not (0 <= g < size):
            raise IndexOutOfRange(g, size)
    reached = closure(t, [identity], gens)
    if len(reached) < size:
        missing = min(set(range(size)) - reached)
        raise GeneratorsNotGenerating(missing)
    bad3 = _associativity_violation(t, gens)
    if bad3:
        raise AssociativityViolation(*bad3)
    if names is not None:
        names = tuple(str(s) for s in names)
        if len(names) != size:
            raise ValueError("names must list one string per element")
        if len(set(names)) != size:
            raise ValueError("element names must be distinct")
    if zero is None:
        zero = _find_zero(t)
    elif np.any(t[zero, :] != zero) or np.any(t[:, zero] != zero):
        raise ValueError(f"element {zero} is not a zero")
    return FiniteMonoid(t, names, identity=identity, generators=gens, zero=zero)


def as_monoid(S: FiniteSemigroup) -> FiniteMonoid:
    """View a semigroup that happens to have an identity as a monoid."""
    if isinstance(S, FiniteMonoid):
        return S
    n = S.size
    idx = np.arange(n)
    for e in range(n):
        if np.all(S.table[e, :] == idx) and np.all(S.table[:, e] == idx):
            return build_monoid(n, S.table, e, generating_set(S.table, e), S.names)
    raise IdentityViolation(None)


def monoid_from_function(elements: Sequence, mul, identity, names=None, generators=None) -> FiniteMonoid:
    """Tabulate ``mul`` over a finite list of hashable elements."""
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    config.check_size(n)
    table = [[index[mul(x, y)] for y in elements] for x in elements]
    e = index[identity]
    if generators is None:
        gens = generating_set(np.array(table), e)
    else:
        gens = [index[g] for g in generators]
    return build_monoid(n, table, e, gens, names)


# -- constructions ------------------------------------------------------------

def _names_or_indices(M: FiniteSemigroup) -> list[str]:
    return list(M.names) if M.names else [str(x) for x in M.elements]


def direct_product(M: FiniteMonoid, N: FiniteMonoid) -> FiniteMonoid:
    m, n = M.size, N.size
    config.check_size(m * n)
    # element (a, b) has index a*n + b
    table = (M.table[:, None, :, None] * n + N.table[None, :, None, :]).reshape(m * n, m * n)
    gens = {g * n + N.identity for g in M.generators} | {M.identity * n + h for h in N.generators}
    names = None
    if M.names or N.names:
        mn, nn = _names_or_indices(M), _names_or_indices(N)
        names = [f"({a},{b})" for a in mn for b in nn]
    return build_monoid(m * n, table, M.identity * n + N.identity, gens, names)


def _fresh_name(names: list[str], base: str) -> str:
    cand = base
    while cand in names:
        cand += "'"
    return cand


def adjoin(M: FiniteSemigroup, kind: str = "identity") -> FiniteMonoid:
    """Append a fresh identity or a fresh zero as element ``size``."""
    if kind not in ("identity", "zero"):
        raise ValueError("kind must be 'identity' or 'zero'")
    n = M.size
    config.check_size(n + 1)
    t = np.empty((n + 1, n + 1), dtype=np.int64)
    t[:n, :n] = M.table
    new = n
    if kind == "identity":
        t[new, :] = np.arange(n + 1)
        t[:, new] = np.arange(n + 1)
        identity = new
    else:
        t[new, :] = new
        t[:, new] = new
        if not isinstance(M, FiniteMonoid):
            raise ValueError("adjoining a zero needs a monoid; adjoin an identity first")
        identity = M.identity
    names = None
    if M.names:
        names = list(M.names) + [_fresh_name(list(M.names), "1" if kind == "identity" else "0")]
    if kind == "zero":
        gens = (*M.generators, new)
    else:
        gens = generating_set(t, identity)
    return build_monoid(n + 1, t, identity, gens, names)


def check_homomorphism(M: FiniteMonoid, N: FiniteMonoid, mapping: Sequence[int]) -> Homomorphism:
    f = np.asarray([int(v) for v in mapping], dtype=np.int64)
    if f.shape != (M.size,):
        raise ValueError("map must assign one image to every source element")
    if np.any((f < 0) | (f >= N.size)):
        raise IndexOutOfRange(int(f[(f < 0) | (f >= N.size)][0]), N.size)
    if f[M.identity] != N.identity:
        raise IdentityNotPreserved(f"identity {M.identity} maps to {int(f[M.identity])}, not {N.identity}")
    lhs = f[M.table]
    rhs = N.table[f[:, None], f[None, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        raise NotHomomorphism(int(bad[0][0]), int(bad[0][1]))
    return Homomorphism(M, N, tuple(int(v) for v in f))


def rees_quotient(M: FiniteMonoid, ideal: Iterable[int]) -> tuple[FiniteMonoid, Homomorphism]:
    """Collapse a two-sided ideal to a single zero, appended last."""
    I = M.check_set(ideal)
    if not I:
        raise ValueError("ideal must be nonempty")
    inside = np.zeros(M.size, dtype=bool)
    inside[list(I)] = True
    for x in sorted(I):
        out_r = np.flatnonzero(~inside[M.table[x, :]])
        if out_r.size:
            raise NotAnIdeal(x, int(out_r[0]), "right")
        out_l = np.flatnonzero(~inside[M.table[:, x]])
        if out_l.size:
            raise NotAnIdeal(x, int(out_l[0]), "left")
    # outside elements keep their order; the zero class is renumbered last
    keep = [x for x in M.elements if not inside[x]]
    new_index = {x: i for i, x in enumerate(keep)}
    z = len(keep)
    f = [z if inside[x] else new_index[x] for x in M.elements]
    f_arr = np.asarray(f)
    reps = keep + [min(I)]
    table = f_arr[M.table[np.ix_(reps, reps)]]
    names = None
    if M.names:
        names = [M.names[x] for x in keep]
        names.append(_fresh_name(names, "0"))
    Q = build_monoid(z + 1, table, f[M.identity], {f[g] for g in M.generators}, names, zero=z)
    return Q, Homomorphism(M, Q, tuple(f))


def quotient_by(M: FiniteMonoid, pi) -> tuple[FiniteMonoid, Homomorphism]:
    """Quotient by a two-sided congruence (a Partition or a Congruence)."""
    part: Partition = getattr(pi, "partition", pi)
    if part.size != M.size:
        raise ValueError("partition is over a different number of elements")
    bad = stability_violation(M.table, part.labels, Side.TWO_SIDED)
    if bad:
        raise NotACongruence(*bad)
    lab = part.array
    reps = list(part.representatives())
    table = lab[M.table[np.ix_(reps, reps)]]
    names = [M.name(r) for r in reps] if M.names else None
    Q = build_monoid(len(reps), table, int(lab[M.identity]), {int(lab[g]) for g in M.generators}, names)
    return Q, Homomorphism(M, Q, part.labels)


@dataclass(frozen=True)
class RegularityReport:
    idempotents: tuple[int, ...]
    regular: bool
    witnesses: tuple[int | None, ...]

    @property
    def irregular(self) -> tuple[int, ...]:
        return tuple(x for x, w in enumerate(self.witnesses) if w is None)


def regularity_report(M: FiniteSemigroup) -> RegularityReport:
    t = M.table
    wit: list[int | None] = []
    for x in M.elements:
        xyx = t[t[x, :], x]
        hits = np.flatnonzero(xyx == x)
        wit.append(int(hits[0]) if hits.size else None)
    return RegularityReport(M.idempotents(), all(w is not None for w in wit), tuple(wit))


def opposite(M: FiniteSemigroup) -> FiniteSemigroup:
    t = M.table.T.copy()
    t.setflags(write=False)
    if isinstance(M, FiniteMonoid):
        return FiniteMonoid(t, M.names, identity=M.identity, generators=M.generators, zero=M.zero)
    return FiniteSemigroup(t, M.names)


# -- isomorphism --------------------------------------------------------------

def _index_period(table: np.ndarray, x: int) -> tuple[int, int]:
    seen: dict[int, int] = {}
    p, k = x, 1
    while p not in seen:
        seen[p] = k
        p = int(table[p, x])
        k += 1
    return seen[p], k - seen[p]


def element_invariants(M: FiniteSemigroup) -> list[tuple]:
    """Per-element isomorphism invariants used to prune the search."""
    t = M.table
    out = []
    for x in M.elements:
        right = len(np.unique(t[x, :]))
        left = len(np.unique(t[:, x]))
        two = len(np.unique(t[t[:, x], :]))
        out.append((bool(t[x, x] == x), right, left, two) + _index_period(t, x))
    return out


def find_isomorphism(M: FiniteMonoid, N: FiniteMonoid, bound: int = config.BRUTE_FORCE_ORDER):
    """An isomorphism M -> N as a tuple of images, or None.

    Backtracks over images of a small generating set of M, pruning by
    element invariants and extending each partial assignment to the
    submonoid it generates.
    """
    if M.size != N.size:
        return None
    if M.size > bound:
        raise OrderBoundExceeded(M.size, bound)
    inv_m, inv_n = element_invariants(M), element_invariants(N)
    if sorted(inv_m) != sorted(inv_n):
        return None
    gens = list(generating_set(M.table, M.identity))
    cands = [[y for y in N.elements if inv_n[y] == inv_m[g] and y != N.identity] for g in gens]
    order = sorted(range(len(gens)), key=lambda k: len(cands[k]))
    gens = [gens[k] for k in order]
    cands = [cands[k] for k in order]
    tm, tn = M.table, N.table

    def extend(images: list[int]):
        f = {M.identity: N.identity}
        used = {N.identity: M.identity}
        for g, y in zip(gens, images):
            if g in f:
                if f[g] != y:
                    return None
                continue
            if y in used:
                return None
            f[g] = y
            used[y] = g
        active = list(zip(gens, images))
        queue = deque(f)
        while queue:
            x = queue.popleft()
            for g, y in active:
                xg = int(tm[x, g])
                img = int(tn[f[x], y])
                if xg in f:
                    if f[xg] != img:
                        return None
                elif img in used or inv_m[xg] != inv_n[img]:
                    return None
                else:
                    f[xg] = img
                    used[img] = xg
                    queue.append(xg)
        return f

    def search(k: int, images: list[int]):
        if k == len(gens):
            f = extend(images)
            if f is None or len(f) != M.size:
                return None
            res = tuple(f[x] for x in M.elements)
            try:
                check_homomorphism(M, N, res)
            except (NotHomomorphism, IdentityNotPreserved):
                return None
            return res
        for y in cands[k]:
            images.append(y)
            if extend(images) is not None:
                res = search(k + 1, images)
                if res is not None:
                    return res
            images.pop()
        return None

    return search(0, [])


def are_isomorphic(M: FiniteMonoid, N: FiniteMonoid, bound: int = config.BRUTE_FORCE_ORDER) -> bool:
    return find_isomorphism(M, N, bound) is not None


def submonoid_closure(M: FiniteMonoid, xs: Iterable[int]) -> frozenset[int]:
    xs = list(xs)
    return frozenset(closure(M.table, [M.identity, *xs], xs))
