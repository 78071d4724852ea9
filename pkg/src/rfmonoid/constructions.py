"""Rees matrix semigroups, the rank of a sandwich matrix, and the M(G, N) monoids."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import config
from .congruence import principal_congruence
from .errors import InvalidParameter, NotAGroup, NotNormal
from .fixtures import cyclic_group
from .monoid import (
    FiniteMonoid,
    FiniteSemigroup,
    adjoin,
    build_monoid,
    build_semigroup,
    find_isomorphism,
    quotient_by,
)
from .partition import Partition
from .schutzen import is_group, is_normal_subgroup, normal_subgroups


def _require_group(G: FiniteSemigroup) -> None:
    if not isinstance(G, FiniteMonoid) or not is_group(G):
        raise NotAGroup("expected a group")


def _require_normal(G: FiniteMonoid, N) -> frozenset[int]:
    N = G.check_set(N)
    if not is_normal_subgroup(G, N):
        raise NotNormal(f"{sorted(N)} is not a normal subgroup")
    return N


@dataclass(frozen=True)
class ReesSpec:
    """Group G, index sets of sizes n_i and n_j, and a J x I sandwich matrix."""

    group: FiniteMonoid
    n_i: int
    n_j: int
    P: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        P = tuple(tuple(int(v) for v in row) for row in self.P)
        object.__setattr__(self, "P", P)
        if self.n_i < 1 or self.n_j < 1:
            raise InvalidParameter("index sets must be nonempty")
        if len(P) != self.n_j or any(len(row) != self.n_i for row in P):
            raise InvalidParameter(f"sandwich matrix must be {self.n_j} x {self.n_i}")
        for row in P:
            for v in row:
                self.group.check_index(v)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.P, dtype=np.int64)


def rees_matrix(spec: ReesSpec, adjoin_identity: bool = False) -> FiniteSemigroup:
    """(i, g, j)(k, h, l) = (i, g p_jk h, l); (i, g, j) has index (i|G| + g)|J| + j."""
    G = spec.group
    _require_group(G)
    ni, ng, nj = spec.n_i, G.size, spec.n_j
    n = ni * ng * nj
    config.check_size(n + int(adjoin_identity))
    P = spec.matrix
    i, g, j = np.unravel_index(np.arange(n), (ni, ng, nj))
    # middle[x, y] = g_x * p_{j_x k_y} * g_y
    mid = G.table[G.table[g[:, None], P[j[:, None], i[None, :]]], g[None, :]]
    table = np.ravel_multi_index((i[:, None].repeat(n, 1), mid, j[None, :].repeat(n, 0)), (ni, ng, nj))
    names = [f"({a},{G.name(b)},{c})" for a, b, c in zip(i, g, j)]
    S = build_semigroup(table, names)
    return adjoin(S, "identity") if adjoin_identity else S


@dataclass(frozen=True)
class RankReport:
    sim_i: Partition
    sim_j: Partition
    r_i: int
    r_j: int
    rank: int
    modulus: frozenset[int] | None = None


def _equivalence(rel: np.ndarray, what: str) -> Partition:
    if not rel.diagonal().all() or not (rel == rel.T).all():
        raise AssertionError(f"{what} is not reflexive and symmetric")
    closed = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
    if (closed & ~rel).any():
        raise AssertionError(f"{what} is not transitive")
    return Partition.from_keys(tuple(np.flatnonzero(row)) for row in rel)


def matrix_rank(spec: ReesSpec, N: Iterable[int] | None = None) -> RankReport:
    """r_I, r_J and rank of P, or of P/N when a normal subgroup N is given."""
    G = spec.group
    _require_group(G)
    P = spec.matrix
    t = G.table
    coset = np.arange(G.size)
    if N is not None:
        N = _require_normal(G, N)
        coset = np.array([min(int(t[x, m]) for m in N) for x in G.elements])
    ni, nj = spec.n_i, spec.n_j
    # columns i ~ k iff some g has p_ji N = p_jk g N for every row j
    rel_i = np.zeros((ni, ni), dtype=bool)
    for a in range(ni):
        for b in range(ni):
            rel_i[a, b] = any((coset[P[:, a]] == coset[t[P[:, b], g]]).all() for g in G.elements)
    rel_j = np.zeros((nj, nj), dtype=bool)
    for a in range(nj):
        for b in range(nj):
            rel_j[a, b] = any((coset[P[a, :]] == coset[t[g, P[b, :]]]).all() for g in G.elements)
    si = _equivalence(rel_i, "~I")
    sj = _equivalence(rel_j, "~J")
    return RankReport(si, sj, si.n_classes, sj.n_classes, max(si.n_classes, sj.n_classes), N)


def golubov_profile(spec: ReesSpec, bound: int = config.BRUTE_FORCE_ORDER) -> list[tuple[frozenset[int], int]]:
    """Rank of P/N for each normal subgroup N of the group."""
    _require_group(spec.group)
    return [(N, matrix_rank(spec, N).rank) for N in normal_subgroups(spec.group, bound)]


def cor9_matrix(n: int) -> ReesSpec:
    """n x n matrix over C2 with a on the diagonal and e elsewhere."""
    if n < 1:
        raise InvalidParameter("n must be at least 1")
    G = cyclic_group(2)
    return ReesSpec(G, n, n, tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n)))


# -- M(G, N) --------------------------------------------------------------------

@dataclass(frozen=True)
class MgnLayout:
    """Where each normal-form family sits in the table of mgn(G, N)."""

    one: int
    g: tuple[int, ...]  # g[x] is the element x of G
    nbar: dict[int, int]  # n -> index of n-bar
    d: tuple[int, ...]  # d[x] is h*x
    zero: int


def mgn_layout(G: FiniteMonoid, N: Iterable[int]) -> MgnLayout:
    ng = G.size
    Ns = sorted(N)
    return MgnLayout(
        0,
        tuple(range(1, 1 + ng)),
        {n: 1 + ng + k for k, n in enumerate(Ns)},
        tuple(range(1 + ng + len(Ns), 1 + 2 * ng + len(Ns))),
        1 + 2 * ng + len(Ns),
    )


def mgn(G: FiniteMonoid, N: Iterable[int]) -> FiniteMonoid:
    """The monoid on 1, G, N-bar, D = hG, 0 with h n = n-bar h and the zero products.

    Multiplication comes from the normal-form case analysis; associativity is
    re-checked by the builder.
    """
    _require_group(G)
    N = _require_normal(G, N)
    lay = mgn_layout(G, N)
    size = lay.zero + 1
    config.check_size(size)
    t = G.table
    T = np.full((size, size), lay.zero, dtype=np.int64)
    T[lay.one, :] = np.arange(size)
    T[:, lay.one] = np.arange(size)
    for x in G.elements:
        for y in G.elements:
            T[lay.g[x], lay.g[y]] = lay.g[t[x, y]]  # G is a group
            T[lay.d[x], lay.g[y]] = lay.d[t[x, y]]  # hx * y = h(xy)
    for n in N:
        for m in N:
            T[lay.nbar[n], lay.nbar[m]] = lay.nbar[int(t[n, m])]
        for y in G.elements:
            T[lay.nbar[n], lay.d[y]] = lay.d[t[n, y]]  # n-bar h y = h n y
    # every other product (G N-bar, N-bar G, G D, D N-bar, D D, anything with 0) is 0
    T[lay.one, lay.one] = lay.one
    names = ["1"] + [G.name(x) for x in G.elements]
    names += [f"~{G.name(n)}" for n in sorted(N)]
    names += ["h" if x == G.identity else f"h{G.name(x)}" for x in G.elements]
    names.append("0")
    gens = list(lay.g) + list(lay.nbar.values()) + [lay.d[G.identity]]
    return build_monoid(size, T, lay.one, gens, names, zero=lay.zero)


def quotient_group(G: FiniteMonoid, K: Iterable[int]) -> tuple[FiniteMonoid, tuple[int, ...]]:
    """G/K together with the projection, as element labels."""
    K = _require_normal(G, K)
    t = G.table
    part = Partition.from_keys(frozenset(int(t[x, k]) for k in K) for x in G.elements)
    Q, phi = quotient_by(G, part)
    return Q, phi.map


def mgn_quotient(G: FiniteMonoid, N: Iterable[int], K: Iterable[int]):
    """Q(M, K) for M = mgn(G, N), and whether it is isomorphic to mgn(G/K, NK/K).

    Returns (Q, iso_verified, target).
    """
    _require_group(G)
    N = _require_normal(G, N)
    K = _require_normal(G, K)
    M = mgn(G, N)
    lay = mgn_layout(G, N)
    pairs = [(lay.g[k], lay.g[G.identity]) for k in K]
    pairs += [(lay.nbar[n], lay.nbar[G.identity]) for n in sorted(N & K)]
    rho = principal_congruence(M, pairs, "two-sided")
    Q, _ = quotient_by(M, rho)
    GK, proj = quotient_group(G, K)
    target = mgn(GK, {proj[n] for n in N})
    return Q, find_isomorphism(Q, target) is not None, target


def rees_spec_from_names(group: FiniteMonoid, rows: Sequence[Sequence[str]]) -> ReesSpec:
    P = [[group.index_of(tok) for tok in row] for row in rows]
    if not P:
        raise InvalidParameter("empty sandwich matrix")
    return ReesSpec(group, len(P[0]), len(P), P)
