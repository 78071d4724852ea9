"""Stabilizers and Schützenberger groups of H-classes, plus small-group tools.

Permutations are tuples acting on the right: ``p[i]`` is the image of point
``i`` and the product ``p*q`` applies ``p`` first.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import config
from .errors import NotAGroup, NotAnHClass, OrderBoundExceeded
from .green import green_structure
from .monoid import FiniteMonoid, FiniteSemigroup, Homomorphism
from .partition import Partition

Perm = tuple[int, ...]


def pmul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def pinv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


@dataclass(frozen=True)
class PermGroup:
    degree: int
    elements: tuple[Perm, ...]

    def __post_init__(self):
        elems = tuple(sorted(set(tuple(p) for p in self.elements)))
        object.__setattr__(self, "elements", elems)
        ident = self.identity
        s = set(elems)
        if ident not in s:
            raise NotAGroup("identity permutation missing")
        for p in elems:
            if len(p) != self.degree or sorted(p) != list(range(self.degree)):
                raise NotAGroup(f"{p} is not a permutation of degree {self.degree}")
            if pinv(p) not in s:
                raise NotAGroup(f"inverse of {p} missing")
            for q in elems:
                if pmul(p, q) not in s:
                    raise NotAGroup(f"product of {p} and {q} missing")

    @classmethod
    def generated(cls, gens: Iterable[Perm], degree: int) -> PermGroup:
        gens = [tuple(g) for g in gens]
        ident = tuple(range(degree))
        seen = {ident}
        queue = deque([ident])
        while queue:
            p = queue.popleft()
            for g in gens:
                q = pmul(p, g)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return cls(degree, tuple(seen))

    @property
    def identity(self) -> Perm:
        return tuple(range(self.degree))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.elements)

    def element_order(self, p: Perm) -> int:
        k, q = 1, p
        while q != self.identity:
            q = pmul(q, p)
            k += 1
        return k

    def order_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_order(p) for p in self.elements))

    def conjugacy_classes(self) -> list[frozenset[Perm]]:
        seen: set[Perm] = set()
        out = []
        for p in self.elements:
            if p in seen:
                continue
            cls_ = frozenset(pmul(pmul(pinv(g), p), g) for g in self.elements)
            seen |= cls_
            out.append(cls_)
        return out

    def small_generating_set(self) -> list[Perm]:
        gens: list[Perm] = []
        reached = {self.identity}
        for p in sorted(self.elements, key=lambda q: (-self.element_order(q), q)):
            if p not in reached:
                gens.append(p)
                reached = set(PermGroup.generated(gens, self.degree).elements)
        return gens


@dataclass(frozen=True)
class GroupHom:
    source: PermGroup
    target: PermGroup
    mapping: dict

    def __post_init__(self):
        if self.mapping[self.source.identity] != self.target.identity:
            raise AssertionError("group map does not preserve the identity")
        for p in self.source.elements:
            for q in self.source.elements:
                if self.mapping[pmul(p, q)] != pmul(self.mapping[p], self.mapping[q]):
                    raise AssertionError(f"group map not multiplicative at {p}, {q}")

    def __call__(self, p: Perm) -> Perm:
        return self.mapping[tuple(p)]

    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == self.source.order

    def is_surjective(self) -> bool:
        return set(self.mapping.values()) == set(self.target.elements)


def is_group(M: FiniteSemigroup) -> bool:
    t = M.table
    n = M.size
    return all(len(np.unique(t[x, :])) == n and len(np.unique(t[:, x])) == n for x in range(n))


def group_as_perms(M: FiniteMonoid, elements: Iterable[int] | None = None):
    """Right regular representation of a group (or group H-class) in M.

    Returns the PermGroup and the dict element -> permutation.
    """
    H = sorted(M.elements if elements is None else elements)
    loc = {h: i for i, h in enumerate(H)}
    rep = {}
    for x in H:
        try:
            rep[x] = tuple(loc[int(M.table[h, x])] for h in H)
        except KeyError:
            raise NotAGroup(f"set not closed under multiplication by {x}") from None
    G = PermGroup(len(H), tuple(rep.values()))
    if len(set(rep.values())) != len(H):
        raise NotAGroup("right regular representation is not faithful")
    return G, rep


def group_iso(G1: PermGroup, G2: PermGroup, bound: int = config.BRUTE_FORCE_ORDER) -> GroupHom | None:
    """Brute-force isomorphism search over images of a small generating set."""
    for G in (G1, G2):
        if G.order > bound:
            raise OrderBoundExceeded(G.order, bound)
    if G1.order != G2.order or G1.order_profile() != G2.order_profile():
        return None
    gens = G1.small_generating_set()
    cands = [[q for q in G2.elements if G2.element_order(q) == G1.element_order(g)] for g in gens]

    def extend(images):
        f = {G1.identity: G2.identity}
        used = {G2.identity}
        pairs = list(zip(gens, images))
        for g, y in pairs:
            if g in f:
                if f[g] != y:
                    return None
            elif y in used:
                return None
            else:
                f[g] = y
                used.add(y)
        queue = deque(f)
        while queue:
            p = queue.popleft()
            for g, y in pairs:
                pg, img = pmul(p, g), pmul(f[p], y)
                if pg in f:
                    if f[pg] != img:
                        return None
                elif img in used:
                    return None
                else:
                    f[pg] = img
                    used.add(img)
                    queue.append(pg)
        return f

    def search(k, images):
        if k == len(gens):
            f = extend(images)
            if f is None or len(f) != G1.order:
                return None
            try:
                return GroupHom(G1, G2, f)
            except AssertionError:
                return None
        for y in cands[k]:
            images.append(y)
            if extend(images) is not None:
                res = search(k + 1, images)
                if res is not None:
                    return res
            images.pop()
        return None

    return search(0, [])


def normal_subgroups(G, bound: int = config.BRUTE_FORCE_ORDER) -> list[frozenset]:
    """All normal subgroups, found as closures of unions of conjugacy classes.

    ``G`` may be a PermGroup (subgroups returned as sets of permutations) or a
    FiniteMonoid that is a group (subgroups returned as sets of indices).
    Sorted by order, then lexicographically.
    """
    if isinstance(G, FiniteSemigroup):
        if not is_group(G):
            raise NotAGroup("monoid is not a group")
        P, rep = group_as_perms(G)
        back = {p: x for x, p in rep.items()}
        subs = normal_subgroups(P, bound)
        return sorted((frozenset(back[p] for p in N) for N in subs), key=lambda s: (len(s), sorted(s)))
    if G.order > bound:
        raise OrderBoundExceeded(G.order, bound)
    classes = G.conjugacy_classes()
    start = frozenset([G.identity])
    found = {start}
    queue = deque([start])
    while queue:
        N = queue.popleft()
        for c in classes:
            if c <= N:
                continue
            bigger = frozenset(PermGroup.generated(list(N | c), G.degree).elements)
            if bigger not in found:
                found.add(bigger)
                queue.append(bigger)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def is_normal_subgroup(M: FiniteMonoid, N: Iterable[int]) -> bool:
    N = frozenset(N)
    if M.identity not in N:
        return False
    t = M.table
    inv = {x: int(np.flatnonzero(t[x, :] == M.identity)[0]) for x in M.elements}
    if any(int(t[a, b]) not in N for a in N for b in N):
        return False
    return all(int(t[t[inv[g], n], g]) in N for g in M.elements for n in N)


# -- Schützenberger groups ----------------------------------------------------

def _check_h_class(M: FiniteSemigroup, H: Iterable[int]) -> tuple[int, ...]:
    Hs = tuple(sorted(M.check_set(H)))
    if not Hs:
        raise NotAnHClass("empty set")
    if green_structure(M).h_class(Hs[0]) != Hs:
        raise NotAnHClass(f"{Hs} is not an H-class")
    return Hs


def stabilizer(M: FiniteMonoid, H: Iterable[int]) -> frozenset[int]:
    """Stab(H) = {s : Hs = H}, cross-checked against {s : hs in H} for every h."""
    Hs = _check_h_class(M, H)
    Hset = set(Hs)
    t = M.table
    stab = frozenset(s for s in M.elements if set(int(v) for v in t[list(Hs), s]) == Hset)
    inside = np.zeros(M.size, dtype=bool)
    inside[list(Hs)] = True
    for h in Hs:
        one_point = frozenset(int(s) for s in np.flatnonzero(inside[t[h, :]]))
        if one_point != stab:
            raise AssertionError(f"stabilizer differs from {{s : {h}s in H}}")
    if isinstance(M, FiniteMonoid) and M.identity not in stab:
        raise AssertionError("stabilizer misses the identity")
    if any(int(t[a, b]) not in stab for a in stab for b in stab):
        raise AssertionError("stabilizer is not closed")
    return stab


@dataclass(frozen=True)
class SchutzGroup:
    h_class: tuple[int, ...]
    base_point: int
    stabilizer: frozenset[int]
    sigma_classes: tuple[tuple[int, ...], ...]
    class_perms: tuple[Perm, ...]
    group: PermGroup

    @property
    def order(self) -> int:
        return self.group.order

    def perm_of(self, s: int) -> Perm:
        for block, p in zip(self.sigma_classes, self.class_perms):
            if s in block:
                return p
        raise KeyError(f"{s} is not in the stabilizer")

    def class_of_perm(self, p: Perm) -> tuple[int, ...]:
        return self.sigma_classes[self.class_perms.index(tuple(p))]

    def act(self, h: int, p: Perm) -> int:
        return self.h_class[p[self.h_class.index(h)]]


def schutzenberger_group(M: FiniteMonoid, H: Iterable[int]) -> SchutzGroup:
    Hs = _check_h_class(M, H)
    key = ("schutz", Hs)
    return M.memo(key, lambda: _schutz(M, Hs))


def _schutz(M: FiniteMonoid, Hs: tuple[int, ...]) -> SchutzGroup:
    stab = sorted(stabilizer(M, Hs))
    loc = {h: i for i, h in enumerate(Hs)}
    t = M.table
    perms = [tuple(loc[int(t[h, s])] for h in Hs) for s in stab]
    # sigma by the all-points kernel, checked against the one-point form
    sigma = Partition.from_keys(perms)
    h0 = Hs[0]
    if Partition.from_keys(int(t[h0, s]) for s in stab) != sigma:
        raise AssertionError("sigma differs from its one-point characterisation")
    blocks = tuple(tuple(stab[i] for i in c) for c in sigma.classes())
    class_perms = tuple(perms[c[0]] for c in sigma.classes())
    G = PermGroup(len(Hs), class_perms)
    if G.order != len(Hs):
        raise AssertionError(f"|Gamma(H)| = {G.order} but |H| = {len(Hs)}")
    for i in range(len(Hs)):
        if sorted(p[i] for p in G.elements) != list(range(len(Hs))):
            raise AssertionError("action of Gamma(H) on H is not regular")
    return SchutzGroup(Hs, h0, frozenset(stab), blocks, class_perms, G)


def left_schutzenberger_group(M: FiniteMonoid, H: Iterable[int]) -> SchutzGroup:
    """Left Schützenberger group, computed in the opposite monoid."""
    from .monoid import opposite

    return schutzenberger_group(opposite(M), H)


def induced_schutz_hom(phi: Homomorphism, H: Iterable[int]) -> GroupHom:
    """Gamma(H) -> Gamma(H-bar) induced by phi, where H-bar holds phi(h)."""
    M, N = phi.source, phi.target
    G = schutzenberger_group(M, H)
    Hbar = green_structure(N).h_class(phi(G.base_point))
    Gbar = schutzenberger_group(N, Hbar)
    mapping = {}
    for block, p in zip(G.sigma_classes, G.class_perms):
        images = {Gbar.perm_of(phi(s)) for s in block}
        if len(images) != 1:
            raise AssertionError(f"induced map not well defined on sigma-class {block}")
        mapping[p] = images.pop()
    return GroupHom(G.group, Gbar.group, mapping)
