"""Constructive separation of elements by finite-index congruences.

Three procedures are provided: separation through Schützenberger coset
blocks (with L and R handling the easy cases), the right letter mapping on
a regular monoid, and pulling back L along a homomorphism.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .congruence import (
    Congruence,
    action_from_congruence,
    largest_contained,
    q_set,
    verify_congruence,
)
from .errors import EqualElements, LRelatedPair, NotRegular
from .green import green_structure
from .monoid import FiniteMonoid, Homomorphism, opposite, regularity_report
from .partition import Partition, Side
from .schutzen import Perm, normal_subgroups, pinv, pmul, schutzenberger_group


@dataclass(frozen=True)
class SameHData:
    """The coset-block construction for a pair inside one H-class."""

    h_class: tuple[int, ...]
    h: int
    s_x: int
    s_y: int
    normal_subgroup: frozenset[Perm]
    cosets: tuple[frozenset[Perm], ...]
    stab_blocks: tuple[tuple[int, ...], ...]  # N-bar_i inside Stab(H)
    blocks: tuple[tuple[int, ...], ...]  # C_0 .. C_m
    pi: Partition  # blocks plus M \ H
    right: Congruence  # Sigma_r(pi)
    q_set_count: int


@dataclass(frozen=True)
class SeparationWitness:
    pair: tuple[int, int]
    route: str  # "not-L", "not-R" or "same-H"
    congruence: Congruence
    one_sided: Congruence
    same_h: SameHData | None = field(default=None)

    def describe(self, M: FiniteMonoid | None = None) -> str:
        name = M.name if M is not None else str
        x, y = self.pair
        lines = [f"pair: {name(x)} {name(y)}", f"route: {self.route}"]
        if self.same_h is not None:
            d = self.same_h
            lines.append(f"H-class: {{{', '.join(map(name, d.h_class))}}}  h = {name(d.h)}")
            lines.append(f"s_x = {name(d.s_x)}, s_y = {name(d.s_y)}, |N| = {len(d.normal_subgroup)}")
            lines.append("blocks: " + " | ".join(" ".join(map(name, b)) for b in d.blocks))
            lines.append(f"distinct Q-sets: {d.q_set_count}")
        side = self.one_sided.side.value
        lines.append(f"{side} congruence: {_fmt(self.one_sided.partition, name)}")
        lines.append(f"two-sided congruence: {_fmt(self.congruence.partition, name)}")
        return "\n".join(lines)


def _fmt(p: Partition, name) -> str:
    return " | ".join(" ".join(name(x) for x in c) for c in p.classes())


def separate(M: FiniteMonoid, x: int, y: int, coarsest: bool = False) -> SeparationWitness:
    """A two-sided finite-index congruence with x and y in different classes.

    With ``coarsest`` the same-H route uses the largest normal subgroup of
    the Schützenberger group that still separates the pair, instead of the
    trivial one.
    """
    M.check_index(x)
    M.check_index(y)
    if x == y:
        raise EqualElements(f"cannot separate {x} from itself")
    gs = green_structure(M)
    same_h = None
    if not gs.l.same(x, y):
        route = "not-L"
        one = verify_congruence(M, gs.l, Side.RIGHT)
    elif not gs.r.same(x, y):
        route = "not-R"
        # R of M is L of the opposite monoid, a right congruence there
        op = opposite(M)
        verify_congruence(op, green_structure(op).l, Side.RIGHT)
        one = verify_congruence(M, green_structure(op).l, Side.LEFT)
    else:
        route = "same-H"
        same_h = _same_h(M, x, y, coarsest)
        one = same_h.right
    two = largest_contained(M, one, Side.TWO_SIDED)
    if not two.partition.refines(one.partition):
        raise AssertionError("two-sided congruence not contained in the one-sided one")
    if not two.separates(x, y):
        raise AssertionError(f"congruence fails to separate {x} and {y}")
    return SeparationWitness((x, y), route, two, one, same_h)


def _same_h(M: FiniteMonoid, x: int, y: int, coarsest: bool) -> SameHData:
    t = M.table
    H = green_structure(M).h_class(x)
    G = schutzenberger_group(M, H)
    h = min(H)
    stab = sorted(G.stabilizer)
    s_x = next(s for s in stab if t[h, s] == x)
    s_y = next(s for s in stab if t[h, s] == y)
    px, py = G.perm_of(s_x), G.perm_of(s_y)
    quotient = pmul(px, pinv(py))
    N = frozenset([G.group.identity])
    if coarsest:
        ok = [K for K in normal_subgroups(G.group) if quotient not in K]
        best = max(len(K) for K in ok)
        N = next(K for K in ok if len(K) == best)
    if quotient in N:
        raise AssertionError("normal subgroup does not separate the pair")

    cosets: list[frozenset[Perm]] = []
    seen: set[Perm] = set()
    for g in G.group.elements:  # sorted, so N itself comes first
        if g not in seen:
            c = frozenset(pmul(n, g) for n in N)
            seen |= c
            cosets.append(c)
    stab_blocks = tuple(
        tuple(sorted(s for blk, p in zip(G.sigma_classes, G.class_perms) if p in c for s in blk))
        for c in cosets
    )
    blocks = tuple(tuple(sorted({int(t[h, s]) for s in nb})) for nb in stab_blocks)
    for c, b in zip(cosets, blocks):
        if sorted(G.act(h, p) for p in c) != list(b):
            raise AssertionError("coset block differs from the regular action image")
    rest = [z for z in M.elements if z not in set(H)]
    pi = Partition.from_classes(M.size, list(blocks) + ([rest] if rest else []))
    if sorted(len(b) for b in blocks) != [len(N)] * len(blocks) or sum(map(len, blocks)) != len(H):
        raise AssertionError("blocks do not partition H evenly")
    _check_block_compatibility(M, H, blocks, pi)

    right = largest_contained(M, pi, Side.RIGHT)
    if not right.partition.refines(pi):
        raise AssertionError("Sigma_r(pi) is not contained in pi")
    classes = pi.classes()
    q_sets = {q_set(M, s, c) for s in M.elements for c in classes}
    return SameHData(H, h, s_x, s_y, N, tuple(cosets), stab_blocks, blocks, pi, right, len(q_sets))


def _check_block_compatibility(M: FiniteMonoid, H, blocks, pi: Partition) -> None:
    """u, v in one block and any s: us and vs land in the same block (or both leave H)."""
    lab = pi.array
    inside = np.zeros(M.size, dtype=bool)
    inside[list(H)] = True
    for b in blocks:
        rows = M.table[list(b), :]
        where = np.where(inside[rows], lab[rows], -1)
        if not (where == where[0]).all():
            raise AssertionError(f"block {b} not preserved by right multiplication")


# -- right letter mapping ---------------------------------------------------------

@dataclass(frozen=True)
class RLMData:
    pair: tuple[int, int]
    l_classes: tuple[tuple[int, ...], ...]
    cone_a: frozenset[int]
    cone_b: frozenset[int]
    orbit_a: tuple[int, ...]
    orbit_b: tuple[int, ...]
    alpha: np.ndarray  # alpha[s] maps orbit_a positions (plus 0 last) to the same
    beta: np.ndarray
    a_sets: tuple[tuple[tuple[int, ...], ...], ...]
    b_sets: tuple[tuple[tuple[int, ...], ...], ...]


def _orbit_maps(act: np.ndarray, start: int):
    cone = frozenset(int(p) for p in act[start, :])
    orbit = tuple(sorted(p for p in cone if start in set(act[p, :].tolist())))
    pos = np.full(act.shape[0], len(orbit), dtype=np.int64)
    pos[list(orbit)] = np.arange(len(orbit))
    # one row per element s: where each orbit point goes, 0 sent to 0
    maps = np.concatenate([pos[act[list(orbit), :]].T, np.full((act.shape[1], 1), len(orbit))], axis=1)
    return cone, orbit, maps


def _map_sets(M: FiniteMonoid, maps: np.ndarray):
    codes = Partition.from_keys(r.tobytes() for r in maps).array
    rows = {int(c): tuple(maps[i].tolist()) for i, c in enumerate(codes)}
    out = []
    for s in M.elements:
        present = sorted(set(codes[M.table[:, s]].tolist()))
        out.append(tuple(rows[c] for c in present))
    return tuple(out)


def right_letter_congruence(M: FiniteMonoid, a: int, b: int) -> tuple[Congruence, RLMData]:
    """Right congruence containing L and separating a from b, for regular M."""
    M.check_index(a)
    M.check_index(b)
    if not regularity_report(M).regular:
        raise NotRegular("right letter mapping needs a regular monoid")
    gs = green_structure(M)
    if gs.l.same(a, b):
        raise LRelatedPair(f"{a} and {b} are L-related")
    action = action_from_congruence(M, gs.l)
    act = action.table
    lab = gs.l.array
    cone_a, orbit_a, alpha = _orbit_maps(act, int(lab[a]))
    cone_b, orbit_b, beta = _orbit_maps(act, int(lab[b]))
    n = M.size
    for maps in (alpha, beta):
        # alpha_{su} is alpha_s followed by alpha_u
        then = maps[np.arange(n)[None, :, None], maps[:, None, :]]
        if not (maps[M.table] == then).all():
            raise AssertionError("orbit maps do not compose like the action")
    a_sets = _map_sets(M, alpha)
    b_sets = _map_sets(M, beta)
    part = Partition.from_keys(zip(a_sets, b_sets))
    rho = verify_congruence(M, part, Side.RIGHT)
    if not gs.l.refines(part):
        raise AssertionError("right letter congruence does not contain L")
    if part.same(a, b):
        raise AssertionError(f"right letter congruence fails to separate {a} and {b}")
    data = RLMData(
        (a, b), gs.l.classes(), cone_a, cone_b, orbit_a, orbit_b, alpha, beta, a_sets, b_sets
    )
    return rho, data


def l_preimage_congruence(phi: Homomorphism) -> Partition:
    """Pull the L-relation of the target back along phi."""
    M, N = phi.source, phi.target
    target_l = green_structure(N).l
    part = Partition(target_l.array[np.asarray(phi.map)])
    verify_congruence(M, part, Side.RIGHT)
    if not green_structure(M).l.refines(part):
        raise AssertionError("pre-image congruence does not contain L")
    if part.n_classes > target_l.n_classes:
        raise AssertionError("pre-image has more classes than the target has L-classes")
    return part
