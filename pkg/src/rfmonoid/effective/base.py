"""Infinite monoids given by normal forms with a closed-form multiplication.

Elements are plain tuples whose first entry is a tag, e.g. ``("b", 3)``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from ..errors import (
    AssociativityViolation,
    IdentityViolation,
    MalformedElement,
    OutsideDomain,
    WindowTooSmall,
)
from ..partition import Side

Element = tuple


class EffectiveMonoid:
    name = "effective"
    identity: Element = ("1",)
    zero: Element | None = ("0",)

    def _mul(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def _valid(self, x) -> bool:
        raise NotImplementedError

    def check(self, x) -> Element:
        if not isinstance(x, tuple) or not x or not self._valid(x):
            raise MalformedElement(f"{x!r} is not a normal form of {self.name}")
        return x

    def mul(self, x: Element, y: Element) -> Element:
        self.check(x)
        self.check(y)
        if x == self.identity:
            return y
        if y == self.identity:
            return x
        if self.zero is not None and self.zero in (x, y):
            return self.zero
        return self.check(self._mul(x, y))

    def product(self, *xs: Element) -> Element:
        out = self.identity
        for x in xs:
            out = self.mul(out, x)
        return out

    def power(self, x: Element, k: int) -> Element:
        return self.product(*([x] * k))

    def window(self, bound: int | None = None, index_bound: int | None = None) -> list[Element]:
        """Normal forms with parameters inside the bounds, in a fixed order."""
        raise NotImplementedError

    def generators(self, bound: int) -> list[Element]:
        raise NotImplementedError

    def format(self, x: Element) -> str:
        tag, *args = x
        return tag if not args else f"{tag}{tuple(args)}"


def e_mul(M: EffectiveMonoid, x: Element, y: Element) -> Element:
    return M.mul(x, y)


def window(M: EffectiveMonoid, bound: int | None = None, index_bound: int | None = None) -> list[Element]:
    return M.window(bound, index_bound)


def associativity_check(M: EffectiveMonoid, elements: Sequence[Element]) -> int:
    """Check identity, zero and associativity laws on all triples; return the triple count."""
    for x in elements:
        if M.mul(M.identity, x) != x or M.mul(x, M.identity) != x:
            raise IdentityViolation(x, M.identity)
        if M.zero is not None and (M.mul(M.zero, x) != M.zero or M.mul(x, M.zero) != M.zero):
            raise AssertionError(f"zero law fails at {x}")
    prods = {(x, y): M.mul(x, y) for x, y in product(elements, repeat=2)}
    for x, y, z in product(elements, repeat=3):
        if M.mul(prods[x, y], z) != M.mul(x, prods[y, z]):
            raise AssociativityViolation(x, y, z)
    return len(elements) ** 3


class EffectiveHom:
    """A map given by a formula, checked multiplicative on windows."""

    def __init__(self, source: EffectiveMonoid, target, fn: Callable):
        self.source = source
        self.target = target
        self.fn = fn

    def __call__(self, x: Element) -> int:
        return self.fn(self.source.check(x))

    def check(self, elements: Iterable[Element]) -> int:
        els = list(elements)
        T = self.target
        if self(self.source.identity) != T.identity:
            raise AssertionError("identity not preserved")
        for x, y in product(els, repeat=2):
            if self(self.source.mul(x, y)) != T.mul(self(x), self(y)):
                raise AssertionError(f"not multiplicative at {x}, {y}")
        return len(els) ** 2


class DecidableRelation:
    """An equivalence on part of an effective monoid, given by a class-label function.

    ``k_modulus`` is the number of consecutive generator indices a window
    must contain for a windowed compatibility check to be conclusive.  With
    ``submonoid`` set the domain is a submonoid and only generators inside
    it are used.
    """

    def __init__(self, name, params, label, in_domain, side=Side.LEFT, k_modulus=1, submonoid=False, branch=None):
        self.name = name
        self.params = tuple(params)
        self._label = label
        self.in_domain = in_domain
        self.side = Side(side)
        self.k_modulus = k_modulus
        self.submonoid = submonoid
        self.branch = branch

    def classify(self, x):
        if not self.in_domain(x):
            raise OutsideDomain(f"{x!r} is outside the domain of {self.name}")
        return self._label(x)

    def related(self, x, y) -> bool:
        return self.classify(x) == self.classify(y)

    def __repr__(self):
        return f"DecidableRelation({self.name}{self.params})"


@dataclass
class CompatViolation:
    x: Element
    y: Element
    g: Element
    gx: Element
    gy: Element
    branch: str | None = None


@dataclass
class CompatReport:
    relation: str
    elements: int
    pairs: int
    products: int
    violations: list[CompatViolation] = field(default_factory=list)
    branches: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return not self.violations


def _weight(x: Element) -> int:
    return sum(abs(v) for v in x[1:] if isinstance(v, int))


def verify_compat(
    M: EffectiveMonoid,
    rel: DecidableRelation,
    bound: int,
    gen_bound: int,
    index_bound: int | None = None,
) -> CompatReport:
    """Windowed check that rel u Delta is stable under multiplication by generators.

    Each related element is compared with the element of its class having
    the smallest parameters, which covers every related pair by transitivity.  If both
    products leave the domain they must coincide.
    """
    if 2 * gen_bound + 1 < rel.k_modulus:
        raise WindowTooSmall(
            f"generator indices |k| <= {gen_bound} do not cover {rel.k_modulus} residues"
        )
    elements = [x for x in M.window(bound, index_bound) if rel.in_domain(x)]
    gens = M.generators(gen_bound)
    if rel.submonoid:
        gens = [g for g in gens if rel.in_domain(g)]
    classes: dict = {}
    for x in elements:
        classes.setdefault(rel.classify(x), []).append(x)
    report = CompatReport(rel.name, len(elements), 0, 0)
    sides = []
    if rel.side.left:
        sides.append(lambda g, x: M.mul(g, x))
    if rel.side.right:
        sides.append(lambda g, x: M.mul(x, g))
    for members in classes.values():
        r = min(members, key=_weight)
        for x in members:
            if x == r:
                continue
            report.pairs += 1
            for g in gens:
                for act in sides:
                    gr, gx = act(g, r), act(g, x)
                    report.products += 1
                    branch = None
                    ok = True
                    if rel.branch is not None:
                        hit = rel.branch(r, x, g)
                        if hit is not None:
                            branch, kinds = hit
                            report.branches[branch] += 1
                            ok = (gr[0], gx[0]) == kinds
                    in_r, in_x = rel.in_domain(gr), rel.in_domain(gx)
                    if in_r and in_x:
                        ok = ok and rel.classify(gr) == rel.classify(gx)
                    else:
                        ok = ok and not in_r and not in_x and gr == gx
                    if not ok:
                        report.violations.append(CompatViolation(r, x, g, gr, gx, branch))
    return report
