"""A monoid with generators a_i, b_j (i, j in Z), c_k (k >= 1) and d.

Normal forms: 1, nonempty words over the a_i, nonempty words over the c_k,
b_j followed by a strictly increasing c-suffix, w d^t with w a (possibly
empty) c-word and t >= 1, and 0.  On the left, a_i toggles c_{i-j} in the
suffix of an element of B_j when i > j and fixes it otherwise; on the right
c_k toggles c_k and d shifts B_j to B_{j+1}.  Past d the c-indices shift
up, d c_k = c_(k+1) d, which keeps b_j (d c_k) = (b_j d) c_k.
"""
from __future__ import annotations

from itertools import combinations, product

from .base import EffectiveMonoid, Element


def _int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _toggle(K: frozenset, k: int) -> frozenset:
    return K ^ {k}


def _b(j: int, K) -> Element:
    return ("B", j, tuple(sorted(K)))


class Ex13Monoid(EffectiveMonoid):
    name = "ex13"

    def _valid(self, x) -> bool:
        tag = x[0]
        if tag in ("1", "0"):
            return len(x) == 1
        if tag == "A":
            return len(x) == 2 and isinstance(x[1], tuple) and len(x[1]) > 0 and all(map(_int, x[1]))
        if tag == "C":
            return len(x) == 2 and isinstance(x[1], tuple) and len(x[1]) > 0 and all(_int(k) and k >= 1 for k in x[1])
        if tag == "B":
            if len(x) != 3 or not _int(x[1]) or not isinstance(x[2], tuple):
                return False
            K = x[2]
            return all(_int(k) and k >= 1 for k in K) and all(p < q for p, q in zip(K, K[1:]))
        if tag == "D":
            return (
                len(x) == 3
                and isinstance(x[1], tuple)
                and all(_int(k) and k >= 1 for k in x[1])
                and _int(x[2])
                and x[2] >= 1
            )
        return False

    def _mul(self, x, y):
        tx, ty = x[0], y[0]
        if tx == "A" and ty == "A":
            return ("A", x[1] + y[1])
        if tx == "C" and ty == "C":
            return ("C", x[1] + y[1])
        if tx == "A" and ty == "B":
            j, K = y[1], frozenset(y[2])
            for i in reversed(x[1]):
                if i > j:
                    K = _toggle(K, i - j)
            return _b(j, K)
        if tx == "B" and ty == "C":
            K = frozenset(x[2])
            for k in y[1]:
                K = _toggle(K, k)
            return _b(x[1], K)
        if tx == "B" and ty == "D":
            K = frozenset(x[2])
            for k in y[1]:
                K = _toggle(K, k)
            t = y[2]
            return _b(x[1] + t, {k - t for k in K if k > t})
        if tx == "C" and ty == "D":
            return ("D", x[1] + y[1], y[2])
        if tx == "D" and ty in ("C", "D"):
            # d^t c_k = c_(k+t) d^t
            t = x[2]
            w, s = (y[1], 0) if ty == "C" else (y[1], y[2])
            return ("D", x[1] + tuple(k + t for k in w), t + s)
        return ("0",)

    def window(self, bound=None, index_bound=None):
        out = [("1",)]
        if bound is None:
            return out + [("0",)]
        jb = bound if index_bound is None else index_bound
        letters = range(-bound, bound + 1)
        cs = range(1, bound + 1)
        out += [("A", (i,)) for i in letters] + [("A", w) for w in product(letters, repeat=2)]
        out += [("C", (k,)) for k in cs] + [("C", w) for w in product(cs, repeat=2)]
        subsets = [c for r in range(len(cs) + 1) for c in combinations(cs, r)]
        out += [("B", j, K) for j in range(-jb, jb + 1) for K in subsets]
        out += [("D", w, t) for w in [()] + [(k,) for k in cs] for t in range(1, bound + 1)]
        return out + [("0",)]

    def generators(self, bound=1):
        return (
            [a_(i) for i in range(-bound, bound + 1)]
            + [b_(j) for j in range(-bound, bound + 1)]
            + [c_(k) for k in range(1, bound + 1)]
            + [d_()]
        )

    def format(self, x):
        tag = x[0]
        if tag == "A":
            return "".join(f"a_{i}" for i in x[1])
        if tag == "C":
            return "".join(f"c_{k}" for k in x[1])
        if tag == "B":
            return f"b_{x[1]}" + "".join(f"c_{k}" for k in x[2])
        if tag == "D":
            return "".join(f"c_{k}" for k in x[1]) + ("d" if x[2] == 1 else f"d^{x[2]}")
        return tag


def ex13_monoid() -> Ex13Monoid:
    return Ex13Monoid()


def a_(i: int) -> Element:
    return ("A", (i,))


def b_(j: int, K=()) -> Element:
    return _b(j, K)


def c_(k: int) -> Element:
    return ("C", (k,))


def d_(t: int = 1, w=()) -> Element:
    return ("D", tuple(w), t)
