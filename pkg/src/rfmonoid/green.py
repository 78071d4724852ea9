"""Green's relations and egg-box structure of a finite monoid."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import NotIdempotent
from .monoid import FiniteMonoid, FiniteSemigroup, generating_set
from .partition import Partition


@dataclass(frozen=True)
class GreenStructure:
    r: Partition
    l: Partition
    j: Partition
    h: Partition
    d: Partition
    right_ideals: dict[int, frozenset[int]]
    left_ideals: dict[int, frozenset[int]]
    ideals: dict[int, frozenset[int]]

    def r_class(self, x: int) -> tuple[int, ...]:
        return self.r.class_of(x)

    def l_class(self, x: int) -> tuple[int, ...]:
        return self.l.class_of(x)

    def h_class(self, x: int) -> tuple[int, ...]:
        return self.h.class_of(x)

    def d_class(self, x: int) -> tuple[int, ...]:
        return self.d.class_of(x)

    def j_type(self) -> tuple[tuple[int, int], ...]:
        """Number of R- and L-classes inside each J-class."""
        out = []
        for block in self.j.classes():
            out.append((len({self.r.labels[x] for x in block}), len({self.l.labels[x] for x in block})))
        return tuple(out)

    def counts(self) -> dict[str, int]:
        return {k: getattr(self, k).n_classes for k in "rlhdj"}


def _generators(M: FiniteSemigroup) -> tuple[int, ...]:
    if isinstance(M, FiniteMonoid):
        return M.generators
    return M.memo("generating_set", lambda: generating_set(M.table))


def _scc_partition(n: int, src: np.ndarray, dst: np.ndarray) -> Partition:
    g = csr_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    _, labels = connected_components(g, directed=True, connection="strong")
    return Partition(labels)


def green_structure(M: FiniteSemigroup) -> GreenStructure:
    """Green's partitions via strongly connected components of Cayley graphs.

    R uses edges x -> x*g, L uses x -> g*x and J uses both, over a
    generating set.  H is the meet of R and L and D their join.
    """
    return M.memo("green", lambda: _green(M))


def _green(M: FiniteSemigroup) -> GreenStructure:
    n = M.size
    t = M.table
    gens = list(_generators(M))
    xs = np.repeat(np.arange(n), len(gens))
    right = t[:, gens].ravel()
    left = t[gens, :].T.ravel()
    r = _scc_partition(n, xs, right)
    l = _scc_partition(n, xs, left)
    j = _scc_partition(n, np.concatenate([xs, xs]), np.concatenate([right, left]))
    monoid = isinstance(M, FiniteMonoid)

    def ideal(rows):
        return set(int(v) for v in np.unique(rows))

    ri, li, ji = {}, {}, {}
    for part, store, fn in (
        (r, ri, lambda x: t[x, :]),
        (l, li, lambda x: t[:, x]),
        (j, ji, lambda x: t[t[:, x], :]),
    ):
        for rep in part.representatives():
            s = ideal(fn(rep))
            if not monoid:
                s.add(rep)
                if store is ji:
                    s |= ideal(t[:, rep]) | ideal(t[rep, :])
            store[rep] = frozenset(s)
    return GreenStructure(r=r, l=l, j=j, h=r.meet(l), d=r.join(l), right_ideals=ri, left_ideals=li, ideals=ji)


def green_by_definition(M: FiniteSemigroup) -> dict[str, Partition]:
    """Definitional oracle: compare principal ideals as sets."""
    t = M.table
    monoid = isinstance(M, FiniteMonoid)

    def with_self(s, x):
        return s if monoid else s | {x}

    xm = [with_self(frozenset(t[x, :].tolist()), x) for x in M.elements]
    mx = [with_self(frozenset(t[:, x].tolist()), x) for x in M.elements]
    mxm = []
    for x in M.elements:
        s = frozenset(t[t[:, x], :].ravel().tolist())
        if not monoid:
            s = s | xm[x] | mx[x]
        mxm.append(s)
    r = Partition.from_keys(xm)
    l = Partition.from_keys(mx)
    return {"r": r, "l": l, "j": Partition.from_keys(mxm), "h": r.meet(l), "d": compose_relations(r, l)}


def compose_relations(p: Partition, q: Partition) -> Partition:
    """The relation p o q, which must itself be an equivalence."""
    n = p.size
    pa, qa = p.array, q.array
    rel = np.zeros((n, n), dtype=bool)
    for x in range(n):
        mids = np.flatnonzero(pa == pa[x])
        targets = np.isin(qa, qa[mids])
        rel[x] = targets
    keys = [tuple(np.flatnonzero(rel[x]).tolist()) for x in range(n)]
    part = Partition.from_keys(keys)
    for x in range(n):
        if set(keys[x]) != set(part.class_of(x)):
            raise ValueError("composite relation is not an equivalence")
    return part


def idempotent_l_test(M: FiniteSemigroup, e: int, f: int) -> bool:
    """For idempotents, e L f iff ef = e and fe = f."""
    for which in (e, f):
        M.check_index(which)
        if M.mul(which, which) != which:
            raise NotIdempotent(which)
    return M.mul(e, f) == e and M.mul(f, e) == f


def maximal_subgroups(M: FiniteSemigroup) -> list[tuple[tuple[int, ...], int]]:
    """Group H-classes paired with their idempotent."""
    gs = green_structure(M)
    out = []
    for e in M.idempotents():
        H = gs.h_class(e)
        sub = M.table[np.ix_(H, H)]
        if not np.isin(sub, H).all():
            raise AssertionError(f"H-class of idempotent {e} not closed")
        for x in H:
            if M.mul(e, x) != x or M.mul(x, e) != x or not (sub[H.index(x)] == e).any():
                raise AssertionError(f"H-class of idempotent {e} is not a group")
        out.append((H, e))
    out.sort(key=lambda p: p[0][0])
    return out
