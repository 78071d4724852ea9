"""Small named monoids used throughout the tests, demos and CLI."""
from __future__ import annotations

from itertools import permutations, product
from typing import Sequence

import numpy as np

from .monoid import FiniteMonoid, FiniteSemigroup, build_monoid, build_semigroup, direct_product, generating_set


def transformation_monoid(maps: Sequence[Sequence[int]], names=None, generators=None) -> FiniteMonoid:
    """Monoid of the given maps under left-to-right composition.

    ``(f*g)(p) = g(f(p))``, so R-classes are kernel classes and L-classes
    image classes.  The identity map must be among ``maps``.
    """
    maps = [tuple(m) for m in maps]
    index = {m: i for i, m in enumerate(maps)}
    deg = len(maps[0])
    ident = tuple(range(deg))
    table = [[index[tuple(g[f[p]] for p in range(deg))] for g in maps] for f in maps]
    e = index[ident]
    gens = generating_set(np.array(table), e) if generators is None else [index[tuple(g)] for g in generators]
    return build_monoid(len(maps), table, e, gens, names)


def cyclic_group(n: int) -> FiniteMonoid:
    names = ["e", "a"] + [f"a{k}" for k in range(2, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return build_monoid(n, table, 0, [1 % n], names[:n])


def trivial_monoid() -> FiniteMonoid:
    return build_monoid(1, [[0]], 0, [], ["e"])


def symmetric_group(k: int) -> FiniteMonoid:
    perms = sorted(permutations(range(k)))
    names = ["".join(map(str, p)) for p in perms]
    return transformation_monoid(perms, names)


def klein_four() -> FiniteMonoid:
    return direct_product(cyclic_group(2), cyclic_group(2))


def t2() -> FiniteMonoid:
    """Full transformation monoid on two points: id, sw, c1, c2."""
    return transformation_monoid([(0, 1), (1, 0), (0, 0), (1, 1)], ["id", "sw", "c1", "c2"])


def full_transformation_monoid(k: int) -> FiniteMonoid:
    maps = sorted(product(range(k), repeat=k), key=lambda m: (m != tuple(range(k)), m))
    names = ["".join(map(str, m)) for m in maps]
    return transformation_monoid(maps, names)


def zero_semigroup(n: int) -> FiniteSemigroup:
    return build_semigroup([[0] * n for _ in range(n)])


def group_by_name(name: str) -> FiniteMonoid:
    """Parse group names such as C2, C4, C2xC2, S3, trivial."""
    key = name.strip()
    if key in ("trivial", "1", "C1"):
        return trivial_monoid()
    parts = key.split("x")
    groups = []
    for p in parts:
        if p.startswith("C") and p[1:].isdigit():
            groups.append(cyclic_group(int(p[1:])))
        elif p.startswith("S") and p[1:].isdigit():
            groups.append(symmetric_group(int(p[1:])))
        else:
            raise ValueError(f"unknown group {name!r}")
    G = groups[0]
    for H in groups[1:]:
        G = direct_product(G, H)
    return G
