"""A commutative monoid with zero on A, B_i = A b_i, C_i = A c_i, D = A d, E = A e.

A = {a^p : p in Z} is infinite cyclic; b_i c_j is d when i = j and
a^tau(j - i) e otherwise; every other product of two non-units is 0.
Elements are ("A", p), ("B", i, p), ("C", i, p), ("D", p), ("E", p), ("0",).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParameter, ZeroArgument
from ..partition import Side
from .base import DecidableRelation, EffectiveMonoid, Element


def _int(v) -> bool:
    return isinstance(v, (int, np.integer)) and not isinstance(v, bool)


def tau(z: int) -> int:
    """For z = 2^k * odd, return 2 (4^ceil(k/2) - 1) / 3."""
    z = int(z)
    if z == 0:
        raise ZeroArgument("tau is undefined at 0")
    k = (z & -z).bit_length() - 1
    return 2 * (4 ** ((k + 1) // 2) - 1) // 3


def tau_array(zs: np.ndarray) -> np.ndarray:
    zs = np.asarray(zs, dtype=np.int64)
    if (zs == 0).any():
        raise ZeroArgument("tau is undefined at 0")
    low = zs & -zs
    k = np.log2(np.abs(low).astype(np.float64)).round().astype(np.int64)
    return 2 * (4 ** ((k + 1) // 2) - 1) // 3


class CmMonoid(EffectiveMonoid):
    name = "cm"
    identity = ("A", 0)

    def _valid(self, x) -> bool:
        tag = x[0]
        if tag == "0":
            return len(x) == 1
        if tag in ("A", "D", "E"):
            return len(x) == 2 and _int(x[1])
        if tag in ("B", "C"):
            return len(x) == 3 and _int(x[1]) and _int(x[2])
        return False

    def _mul(self, x, y):
        if x[0] == "A" or y[0] == "A":
            unit, other = (x, y) if x[0] == "A" else (y, x)
            return other[:-1] + (other[-1] + unit[1],)
        if {x[0], y[0]} == {"B", "C"}:
            (_, i, p), (_, j, q) = (x, y) if x[0] == "B" else (y, x)
            if i == j:
                return ("D", p + q)
            return ("E", p + q + tau(j - i))
        return ("0",)

    def window(self, bound=None, index_bound=None):
        if bound is None:
            return [("A", 0), ("0",)]
        ib = bound if index_bound is None else index_bound
        ps = range(-bound, bound + 1)
        idx = range(-ib, ib + 1)
        out = [("A", p) for p in ps]
        out += [("B", i, p) for i in idx for p in ps]
        out += [("C", i, p) for i in idx for p in ps]
        out += [("D", p) for p in ps] + [("E", p) for p in ps]
        return out + [("0",)]

    def generators(self, bound=1):
        return (
            [("A", 1), ("A", -1)]
            + [("B", k, 0) for k in range(-bound, bound + 1)]
            + [("C", k, 0) for k in range(-bound, bound + 1)]
            + [("D", 0), ("E", 0)]
        )

    def format(self, x):
        tag = x[0]
        if tag == "0":
            return "0"
        p = x[-1]
        pre = "" if p == 0 else ("a" if p == 1 else f"a^{p}")
        if tag == "A":
            return pre or "1"
        letter = {"B": f"b_{x[1]}", "C": f"c_{x[1]}", "D": "d", "E": "e"}[tag]
        return pre + letter


def cm_monoid() -> CmMonoid:
    return CmMonoid()


def green_class(x: Element):
    """All Green's relations agree here: A, each B_i, each C_i, D, E and {0}."""
    return x[:2] if x[0] in ("B", "C") else (x[0],)


# -- congruences on the ideal C u D u E u {0} and on A u B u {0} -------------------

def _in_ideal(x) -> bool:
    return x[0] in ("C", "D", "E", "0")


def _in_ab(x) -> bool:
    return x[0] in ("A", "B", "0")


def _case2_branch(x, y, g):
    if g[0] != "B" or x[0] != "C" or y[0] != "C":
        return None
    k, i, j = g[1], x[1], y[1]
    if i != k and j != k:
        return "k not in {i,j}", ("E", "E")
    if i == k and j != k:
        return "k=i, k!=j", ("D", "E")
    if i != k and j == k:
        return "k!=i, k=j", ("E", "D")
    return "k=i=j", ("D", "D")


def _case2(m: int, shift: bool) -> DecidableRelation:
    mod = 2 ** (m + 1)
    off = tau(2**m) if shift else 0

    def label(x):
        tag = x[0]
        if tag == "C":
            return ("C", x[2] % mod, x[1] % 2**m)
        if tag == "D":
            return ("DE", x[1] % mod)
        if tag == "E":
            return ("DE", (x[1] - off) % mod)
        return ("0",)

    name = "case2" if shift else "case2-unshifted"
    return DecidableRelation(name, (m,), label, _in_ideal, Side.LEFT, k_modulus=2**m, branch=_case2_branch)


def paper_congruence(kind: str, *params: int) -> DecidableRelation:
    """Relations used to show the ideals are rf-compatible.

    case1(m, i): a^r c_i ~ a^u c_i when r = u mod m, the rest of the ideal
    one class.  case2(m): C classes by (r mod 2^(m+1), i mod 2^m), D and E
    by exponent mod 2^(m+1) with a^r d ~ a^(r + tau(2^m)) e, zero alone.
    bpart(m, i): on A u B u {0}, a^r ~ a^u and a^r b_i ~ a^u b_i when
    r = u mod m, the other B_j one class, zero alone.
    """
    arity = {"case1": 2, "case2": 1, "bpart": 2}
    if kind not in arity:
        raise InvalidParameter(f"unknown relation {kind!r}")
    if len(params) != arity[kind] or not all(_int(p) for p in params):
        raise InvalidParameter(f"{kind} takes {arity[kind]} integer parameters")
    m = params[0]
    if m < 1:
        raise InvalidParameter("m must be at least 1")
    if kind == "case2":
        return _case2(m, True)
    i = params[1]
    if kind == "case1":

        def label(x):
            if x[0] == "C" and x[1] == i:
                return ("C", x[2] % m)
            return ("rest",)

        return DecidableRelation(kind, params, label, _in_ideal, Side.LEFT)

    def label(x):
        if x[0] == "A":
            return ("A", x[1] % m)
        if x[0] == "B":
            return ("B", x[2] % m) if x[1] == i else ("B*",)
        return ("0",)

    return DecidableRelation(kind, params, label, _in_ab, Side.LEFT, submonoid=True)


def case2_without_shift(m: int) -> DecidableRelation:
    """Negative control: case2 with the tau offset between D and E dropped."""
    if m < 1:
        raise InvalidParameter("m must be at least 1")
    return _case2(m, False)


# -- tau lemmas ---------------------------------------------------------------------

def escape_m(x: int, K: int) -> int | None:
    """Least m <= K with x != tau(2^m) mod 2^(m+1), if any."""
    for m in range(1, K + 1):
        if (x - tau(2**m)) % 2 ** (m + 1):
            return m
    return None


@dataclass
class TauReport:
    congruence_ok: bool
    congruence_violation: tuple[int, int, int] | None  # (a, b, m)
    escape_ok: bool
    escape_counterexample: int | None
    pairs_checked: int
    xs_checked: int


def tau_lemma_check(K: int, bound: int, x_bound: int | None = None, x_K: int | None = None) -> TauReport:
    """Two properties of tau, checked exhaustively in a box.

    First: for nonzero |a|, |b| <= bound and 1 <= m <= K, a = b mod 2^m
    implies tau(a) = tau(b) mod 2^(m+1).  Second: each |x| <= x_bound has
    some m <= x_K with x != tau(2^m) mod 2^(m+1).  The second box defaults
    to the first.
    """
    if K < 1 or bound < 1:
        raise InvalidParameter("K and bound must be positive")
    x_bound = bound if x_bound is None else x_bound
    x_K = K if x_K is None else x_K
    vals = np.array([v for v in range(-bound, bound + 1) if v], dtype=np.int64)
    tv = tau_array(vals)
    violation = None
    pairs = 0
    for m in range(1, K + 1):
        res = vals % 2**m
        tmod = tv % 2 ** (m + 1)
        pairs += sum(int(c) ** 2 for c in np.bincount(res))
        # a = b mod 2^m must force equal tau residues: compare with the first of each class
        first = {}
        for a, r, t in zip(vals.tolist(), res.tolist(), tmod.tolist()):
            if r not in first:
                first[r] = (a, t)
            elif first[r][1] != t:
                violation = (first[r][0], a, m)
                break
        if violation:
            break
    xs = np.arange(-x_bound, x_bound + 1, dtype=np.int64)
    escaped = np.zeros(xs.shape, dtype=bool)
    for m in range(1, x_K + 1):
        escaped |= (xs - tau(2**m)) % 2 ** (m + 1) != 0
    stuck = xs[~escaped]
    counter = int(stuck[np.argmin(np.abs(stuck))]) if stuck.size else None
    return TauReport(violation is None, violation, counter is None, counter, pairs, len(xs))
