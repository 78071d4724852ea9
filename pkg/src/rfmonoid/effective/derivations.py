"""Finite chains of equalities that force collapses in every finite image."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InvalidParameter
from ..green import green_structure
from .ab import ab_monoid, b, theta_n
from .cm import cm_monoid, tau
from .ex13 import a_, b_, c_, d_, ex13_monoid


@dataclass
class Step:
    claim: str
    lhs: object
    rhs: object

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class DerivationReport:
    name: str
    params: tuple
    steps: list[Step] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.holds for s in self.steps)

    def __str__(self):
        head = f"{self.name}{self.params}: {'pass' if self.passed else 'FAIL'}"
        return "\n".join([head] + [f"  [{'ok' if s.holds else '!!'}] {s.claim}" for s in self.steps])


def _ex13_collapse(p: int, q: int) -> DerivationReport:
    if not (1 <= p < q):
        raise InvalidParameter("need 1 <= p < q")
    M = ex13_monoid()
    r = DerivationReport("ex13_collapse", (p, q))
    bq = b_(1 - q)
    dq = d_(q - 1)
    low = a_(1 + p - q)
    r.steps.append(Step(f"b_{1 - q} c_{p} = a_{1 + p - q} b_{1 - q}", M.mul(bq, c_(p)), M.mul(low, bq)))
    r.steps.append(Step(f"b_{1 - q} c_{q} = a_1 b_{1 - q}", M.mul(bq, c_(q)), M.mul(a_(1), bq)))
    r.steps.append(Step(f"b_{1 - q} d^{q - 1} = b_0", M.mul(bq, dq), b_(0)))
    r.steps.append(Step(
        f"(a_{1 + p - q} b_{1 - q}) d^{q - 1} = a_{1 + p - q} b_0",
        M.mul(M.mul(low, bq), dq), M.mul(low, b_(0)),
    ))
    r.steps.append(Step(
        f"(a_1 b_{1 - q}) d^{q - 1} = a_1 b_0",
        M.mul(M.mul(a_(1), bq), dq), M.mul(a_(1), b_(0)),
    ))
    r.steps.append(Step("a_1 b_0 = b_0 c_1", M.mul(a_(1), b_(0)), M.mul(b_(0), c_(1))))
    r.steps.append(Step(f"a_{1 + p - q} b_0 = b_0", M.mul(low, b_(0)), b_(0)))
    return r


def _ab_l_collapse(n: int) -> DerivationReport:
    if n < 1:
        raise InvalidParameter("need n >= 1")
    th = theta_n(n)
    T = th.target
    M = ab_monoid()
    r = DerivationReport("ab_L_collapse", (n,))
    a1 = T.index_of("a")
    an1 = T.identity if n == 1 else T.index_of("a" if n == 2 else f"a{n - 1}")
    t0, t1 = th(b(0)), th(b(1))
    r.steps.append(Step("theta(b_1) = a theta(b_0)", t1, T.mul(a1, t0)))
    r.steps.append(Step(f"a^{n - 1} (a b) = b in T_{n}", T.mul(an1, T.mul(a1, t0)), t0))
    r.steps.append(Step("theta(b_0) = a^(n-1) theta(b_1)", t0, T.mul(an1, t1)))
    r.steps.append(Step("theta(b_1) = theta(a b_0)", t1, th(M.mul(("a", 1), b(0)))))
    l = green_structure(T).l
    r.steps.append(Step("theta(b_0) L theta(b_1)", l.labels[t0], l.labels[t1]))
    return r


def _cm_de_collapse(i: int, j: int) -> DerivationReport:
    if i == j:
        raise InvalidParameter("need i != j")
    M = cm_monoid()
    r = DerivationReport("cm_de_collapse", (i, j))
    s = tau(j - i)
    r.steps.append(Step(f"b_{i} c_{j} = a^{s} e", M.mul(("B", i, 0), ("C", j, 0)), ("E", s)))
    r.steps.append(Step(f"b_{j} c_{j} = d", M.mul(("B", j, 0), ("C", j, 0)), ("D", 0)))
    r.steps.append(Step(f"a^{-s} (a^{s} e) = e", M.mul(("A", -s), ("E", s)), ("E", 0)))
    return r


_CHAINS = {"ex13_collapse": _ex13_collapse, "ab_L_collapse": _ab_l_collapse, "cm_de_collapse": _cm_de_collapse}


def derivation_check(name: str, *params: int) -> DerivationReport:
    if name not in _CHAINS:
        raise InvalidParameter(f"unknown derivation {name!r}")
    try:
        return _CHAINS[name](*params)
    except TypeError as exc:
        raise InvalidParameter(str(exc)) from None
