"""The monoid {a^i} u {b_j : j in Z} u {0} with a^i b_j = b_{i+j}, and its finite images T_n."""
from __future__ import annotations

from ..errors import InvalidParameter
from ..monoid import FiniteMonoid, build_monoid
from ..partition import Side
from .base import DecidableRelation, EffectiveHom, EffectiveMonoid, Element


def _int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


class AbMonoid(EffectiveMonoid):
    name = "ab"

    def _valid(self, x) -> bool:
        tag = x[0]
        if tag in ("1", "0"):
            return len(x) == 1
        if tag == "a":
            return len(x) == 2 and _int(x[1]) and x[1] >= 1
        if tag == "b":
            return len(x) == 2 and _int(x[1])
        return False

    def _mul(self, x, y):
        if x[0] == "a" and y[0] == "a":
            return ("a", x[1] + y[1])
        if x[0] == "a" and y[0] == "b":
            return ("b", x[1] + y[1])
        return ("0",)  # b a^i = b b = 0

    def window(self, bound=None, index_bound=None):
        if bound is None:
            return [("1",), ("0",)]
        jb = bound if index_bound is None else index_bound
        return [("1",)] + [("a", i) for i in range(1, bound + 1)] + [("b", j) for j in range(-jb, jb + 1)] + [("0",)]

    def generators(self, bound=0):
        return [("a", 1)] + [("b", j) for j in range(-bound, bound + 1)]

    def format(self, x):
        if x[0] == "a":
            return "a" if x[1] == 1 else f"a^{x[1]}"
        if x[0] == "b":
            return f"b_{x[1]}"
        return x[0]


def ab_monoid() -> AbMonoid:
    return AbMonoid()


def a(i: int = 1) -> Element:
    return ("1",) if i == 0 else ("a", i)


def b(j: int) -> Element:
    return ("b", j)


def left_divides(y: Element, x: Element) -> bool:
    """Whether y lies in the principal left ideal M x."""
    if y == x or y == ("0",) or x == ("1",):
        return True
    if x[0] == y[0] and x[0] in ("a", "b"):
        return y[1] >= x[1]
    return False


def l_related(x: Element, y: Element) -> bool:
    return left_divides(x, y) and left_divides(y, x)


def ab_l_relation() -> DecidableRelation:
    """Green's L as a relation; on this monoid it is the identity."""
    return DecidableRelation("L", (), lambda x: x, lambda x: True, side=Side.RIGHT)


# -- T_n ------------------------------------------------------------------------

def _rewrite(word: str, n: int) -> str:
    rules = [("a" * (n + 1), "a"), ("a" * n + "b", "b"), ("ba", "0"), ("bb", "0")]
    while True:
        if "0" in word:
            return "0"
        for lhs, rhs in rules:
            if lhs in word:
                word = word.replace(lhs, rhs, 1)
                break
        else:
            return word


def _tn_name(word: str) -> str:
    if word == "":
        return "1"
    if word == "0":
        return "0"
    k = word.count("a")
    pre = "" if k == 0 else ("a" if k == 1 else f"a{k}")
    return pre + ("b" if word.endswith("b") else "")


def t_n(n: int) -> FiniteMonoid:
    """<a, b | a^(n+1) = a, a^n b = b, ba = b^2 = 0>, built by rewriting words to normal form."""
    if not _int(n) or n < 1:
        raise InvalidParameter("n must be a positive integer")
    forms = {""}
    frontier = [""]
    while frontier:
        w = frontier.pop()
        for g in "ab":
            v = _rewrite(w + g, n)
            if v not in forms:
                forms.add(v)
                frontier.append(v)
    order = sorted(forms, key=lambda w: (w == "0", "b" in w, len(w)))
    if len(order) != 2 * n + 2:
        raise AssertionError(f"T_{n} has {len(order)} normal forms, expected {2 * n + 2}")
    index = {w: i for i, w in enumerate(order)}
    table = [[index[_rewrite(u + v, n)] for v in order] for u in order]
    return build_monoid(len(order), table, index[""], [index["a"], index["b"]], [_tn_name(w) for w in order], zero=index["0"])


def theta_n(n: int, T: FiniteMonoid | None = None) -> EffectiveHom:
    """a^i -> a^(((i-1) mod n) + 1), b_j -> a^(j mod n) b, onto T_n."""
    T = t_n(n) if T is None else T
    idx = {name: i for i, name in enumerate(T.names)}

    def apow(k):
        return "1" if k == 0 else ("a" if k == 1 else f"a{k}")

    def fn(x):
        if x[0] == "a":
            return idx[apow((x[1] - 1) % n + 1)]
        if x[0] == "b":
            k = x[1] % n
            return idx["b" if k == 0 else apow(k) + "b"]
        return idx[x[0]]

    return EffectiveHom(AbMonoid(), T, fn)
