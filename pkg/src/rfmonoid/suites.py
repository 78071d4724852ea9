"""Acceptance suites shared by ``rfmonoid check`` and the test-suite.

Each suite returns a SuiteResult listing every failed check; a suite passes
when nothing failed and it finished inside its time budget.
"""
from __future__ import annotations

import contextlib
import io as _io
import os
import tempfile
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np
from sympy.utilities.iterables import multiset_partitions

from .congruence import (
    action_from_congruence,
    congruence_from_action,
    enumerate_congruences,
    is_congruence,
    largest_contained,
    largest_contained_by_definition,
    q_fingerprint_partition,
)
from .constructions import cor9_matrix, matrix_rank, mgn, mgn_layout, mgn_quotient, rees_matrix
from .effective import (
    case2_without_shift,
    cm_monoid,
    derivation_check,
    paper_congruence,
    tau_lemma_check,
    verify_compat,
)
from .effective.ab import t_n
from .fixtures import cyclic_group, full_transformation_monoid, klein_four, symmetric_group, t2
from .green import green_structure
from .io import dump_monoid, parse_monoid
from .monoid import regularity_report
from .partition import Partition, Side
from .schutzen import group_as_perms, group_iso, normal_subgroups, schutzenberger_group, stabilizer
from .separation import right_letter_congruence, separate

SEED = 20240611


@dataclass
class SuiteResult:
    name: str
    limit: float
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and self.elapsed < self.limit

    def check(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def attempt(self, fn, what: str) -> None:
        """Run fn(); a falsy result or any exception counts as a failure."""
        try:
            ok = bool(fn())
        except Exception as exc:  # every error is a failed check here
            self.checks += 1
            self.failures.append(f"{what}: {type(exc).__name__}: {exc}")
            return
        self.check(ok, what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status} {self.name}: {self.checks} checks, {len(self.failures)} failed, {self.elapsed:.2f}s (limit {self.limit:g}s)"
        return msg


@lru_cache(maxsize=None)
def corpus() -> dict:
    c2, c4 = cyclic_group(2), cyclic_group(4)
    out = {
        "C2": c2,
        "C4": c4,
        "C2xC2": klein_four(),
        "S3": symmetric_group(3),
        "T2": t2(),
        "T3": full_transformation_monoid(3),
        "mgn(C2,C2)": mgn(c2, [0, 1]),
        "mgn(C4,<a2>)": mgn(c4, [0, 2]),
    }
    for n in range(1, 6):
        out[f"cor9({n})^1"] = rees_matrix(cor9_matrix(n), adjoin_identity=True)
    for n in range(1, 11):
        out[f"t_n({n})"] = t_n(n)
    return out


def _small(limit: int):
    return {k: M for k, M in corpus().items() if M.size <= limit}


# -- suites -----------------------------------------------------------------------

def _stabilizers(res: SuiteResult) -> None:
    for name, M in corpus().items():
        gs = green_structure(M)
        t = M.table
        stabs, gammas = {}, {}
        for H in gs.h.classes():
            tag = f"{name} H={H}"
            Hset = set(H)
            try:
                st = stabilizer(M, H)
            except Exception as exc:
                res.check(False, f"{tag} (i): {exc}")
                continue
            by_set = {s for s in M.elements if {int(t[h, s]) for h in H} == Hset}
            res.check(st == by_set, f"{tag} (i) stabilizer definitions differ")
            stabs[H] = st
            res.check(all({int(t[h, s]) for s in st} == Hset for h in H), f"{tag} (iii) h Stab(H) != H")
            try:
                g = schutzenberger_group(M, H)
            except Exception as exc:
                res.check(False, f"{tag} (v): {exc}")
                continue
            gammas[H] = g.group
            regular = all(sorted(p[i] for p in g.group.elements) == list(range(len(H))) for i in range(len(H)))
            res.check(g.order == len(H) and regular, f"{tag} (v) |Gamma| or regularity")
            if Hset & set(M.idempotents()):
                res.attempt(lambda: group_iso(group_as_perms(M, H)[0], g.group) is not None, f"{tag} (vii)")
        for H in stabs:
            same_l = [K for K in stabs if set(K) <= set(gs.l_class(H[0]))]
            res.check(all(stabs[K] == stabs[H] for K in same_l), f"{name} H={H} (iv) stabilizers vary along L")
        for rel, kind in ((gs.r_class, "R"), (gs.l_class, "L")):
            for H in gammas:
                first = gs.h_class(rel(H[0])[0])
                if first != H and first in gammas:
                    res.attempt(lambda: group_iso(gammas[first], gammas[H]) is not None, f"{name} (vi) along {kind}: {first} vs {H}")


def _tn(res: SuiteResult) -> None:
    for n in range(1, 51):
        res.attempt(lambda: t_n(n).size == 2 * n + 2, f"|t_n({n})| != {2 * n + 2}")


def _mgn(res: SuiteResult) -> None:
    groups = {"C2": cyclic_group(2), "C4": cyclic_group(4), "C2xC2": klein_four(), "S3": symmetric_group(3)}
    for gname, G in groups.items():
        subs = normal_subgroups(G)
        for N in subs:
            tag = f"mgn({gname}, {sorted(N)})"
            M = mgn(G, N)
            res.check(M.size == 2 * G.size + len(N) + 2, f"{tag} order {M.size}")
            gs = green_structure(M)
            res.check(gs.j.n_classes == 5, f"{tag} has {gs.j.n_classes} J-classes")
            res.check(bool(is_congruence(M, gs.j, Side.TWO_SIDED)), f"{tag} J is not a congruence")
            D = mgn_layout(G, N).d
            n_l = len({gs.l.labels[x] for x in D})
            res.check(n_l == G.size // len(N), f"{tag} D has {n_l} L-classes")
            for K in subs:
                res.attempt(lambda: mgn_quotient(G, N, K)[1], f"{tag} quotient by {sorted(K)} not isomorphic")


def _random_partition(rng, n: int) -> Partition:
    k = int(rng.integers(1, n + 1))
    return Partition(rng.integers(0, k, size=n))


def _sigma(res: SuiteResult) -> None:
    rng = np.random.default_rng(SEED)
    monoids = list(corpus().items())
    for i in range(200):
        name, M = monoids[i % len(monoids)]
        pi = _random_partition(rng, M.size)
        fast = largest_contained(M, pi, Side.RIGHT).partition
        res.check(fast == largest_contained_by_definition(M, pi, Side.RIGHT), f"{name} Sigma_r mismatch on {pi}")
    for name, M in _small(5).items():
        rights = enumerate_congruences(M, Side.RIGHT)
        for blocks in multiset_partitions(list(M.elements)):
            pi = Partition.from_classes(M.size, blocks)
            sig = largest_contained(M, pi, Side.RIGHT)
            res.check(any(r.partition == sig.partition for r in rights), f"{name} Sigma_r({pi}) not a right congruence")
            below = [r for r in rights if r.partition.refines(pi)]
            res.check(all(r.partition.refines(sig.partition) for r in below), f"{name} Sigma_r({pi}) not maximal")
    for name, M in _small(12).items():
        gs = green_structure(M)
        parts = [gs.r, gs.l, gs.h, gs.d, gs.j, Partition.identity(M.size), Partition.universal(M.size)]
        parts += [_random_partition(rng, M.size) for _ in range(20)]
        if M.size <= 5:
            parts += [Partition.from_classes(M.size, b) for b in multiset_partitions(list(M.elements))]
        for pi in parts:
            res.check(
                q_fingerprint_partition(M, pi) == largest_contained(M, pi, Side.RIGHT).partition,
                f"{name} Q-set fingerprint differs from Sigma_r on {pi}",
            )


def _separation(res: SuiteResult) -> None:
    for name, M in corpus().items():
        for x, y in product(M.elements, repeat=2):
            if x == y:
                continue

            def ok():
                w = separate(M, x, y)
                c = w.congruence
                return c.side is Side.TWO_SIDED and c.verified and c.separates(x, y) and is_congruence(M, c.partition, Side.TWO_SIDED)

            res.attempt(ok, f"{name} separate({x}, {y})")


def _right_letter(res: SuiteResult) -> None:
    for name, M in corpus().items():
        if not regularity_report(M).regular:
            continue
        gs = green_structure(M)
        for a, b in product(M.elements, repeat=2):
            if gs.l.same(a, b):
                continue

            def ok():
                rho, _ = right_letter_congruence(M, a, b)
                p = rho.partition
                return is_congruence(M, p, Side.RIGHT) and gs.l.refines(p) and not p.same(a, b)

            res.attempt(ok, f"{name} right letter congruence for ({a}, {b})")


def _brute_rank(P: list[list[int]], G) -> int:
    """max(r_I, r_J) by trying every g for every pair of columns and of rows."""
    t = G.table
    cols = list(zip(*P))

    def classes(vecs, right):
        n = len(vecs)
        lab = list(range(n))
        for i in range(n):
            for k in range(i):
                for g in G.elements:
                    if all(u == (t[v, g] if right else t[g, v]) for u, v in zip(vecs[i], vecs[k])):
                        lab[i] = lab[k]
                        break
                if lab[i] != i:
                    break
        return len(set(lab))

    return max(classes(cols, True), classes(P, False))


def _rank(res: SuiteResult) -> None:
    for n in range(1, 13):
        spec = cor9_matrix(n)
        P = [list(row) for row in spec.P]
        r = matrix_rank(spec).rank
        if n >= 3:
            res.check(r == n, f"rank(P_{n}) = {r}")
        res.check(r == _brute_rank(P, spec.group), f"rank(P_{n}) disagrees with brute force")
        res.check(matrix_rank(spec, spec.group.elements).rank == 1, f"rank(P_{n}/C2) != 1")


def _tau(res: SuiteResult) -> None:
    rep = tau_lemma_check(8, 1024, x_bound=2**16, x_K=20)
    res.check(rep.congruence_ok, f"tau congruence violated at {rep.congruence_violation}")
    res.check(rep.escape_ok, f"x = {rep.escape_counterexample} escapes no m <= 20")


def _cm(res: SuiteResult) -> None:
    M = cm_monoid()
    for m in (1, 2, 3):
        rel = paper_congruence("case2", m)
        rep = verify_compat(M, rel, 2 ** (m + 2), 2**m)
        res.check(rep.passed, f"case2({m}) compatibility: {rep.violations[:1]}")
        res.check(len(rep.branches) == 4, f"case2({m}) hit branches {sorted(rep.branches)}")
        span = range(-(2 ** (m + 2)), 2 ** (m + 2) + 1)
        bad = [(p, q) for p in span for q in span
               if rel.related(("D", p), ("D", q)) != ((p - q) % 2 ** (m + 1) == 0)]
        res.check(not bad, f"case2({m}) D separation wrong at {bad[:1]}")
        neg = verify_compat(M, case2_without_shift(m), 2 ** (m + 2), 2**m)
        res.check(not neg.passed, f"unshifted case2({m}) control passed")


def _derivations(res: SuiteResult) -> None:
    for q in range(2, 11):
        for p in range(1, q):
            res.attempt(lambda: derivation_check("ex13_collapse", p, q).passed, f"ex13_collapse({p}, {q})")
    for n in range(1, 21):
        res.attempt(lambda: derivation_check("ab_L_collapse", n).passed, f"ab_L_collapse({n})")
    for i, j in product(range(-5, 6), repeat=2):
        if i != j:
            res.attempt(lambda: derivation_check("cm_de_collapse", i, j).passed, f"cm_de_collapse({i}, {j})")


def _capture(argv) -> tuple[int, str]:
    from .cli import run_command

    buf = _io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(buf):
        code = run_command(argv)
    return code, buf.getvalue()


def _roundtrip(res: SuiteResult) -> None:
    for name, M in _small(5).items():
        for rho in enumerate_congruences(M, Side.RIGHT):
            A = action_from_congruence(M, rho)
            back = congruence_from_action(A)
            res.check(back.partition == rho.partition, f"{name} congruence -> action -> congruence on {rho.partition}")
            again = action_from_congruence(M, back)
            res.check(np.array_equal(again.table, A.table) and again.source == A.source,
                      f"{name} action -> congruence -> action on {rho.partition}")
    for name, M in corpus().items():
        text = dump_monoid(M)
        res.attempt(lambda: dump_monoid(parse_monoid(text)) == text and np.array_equal(parse_monoid(text).table, M.table),
                    f"{name} table file round trip")
    fd, path = tempfile.mkstemp(suffix=".mon")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(dump_monoid(t2()))
        code, out = _capture(["analyze", path])
        res.check(code == 0 and "R-classes: 2, L-classes: 3, H-classes: 3, regular: yes" in out, "analyze on T2")
    finally:
        os.unlink(path)
    code, _ = _capture(["check", "negative"])
    res.check(code == 1, f"negative-control suite exited {code}")


def _negative(res: SuiteResult) -> None:
    """Positive claims asserted against deliberately broken inputs; every check should fail."""
    M = cm_monoid()
    res.attempt(lambda: verify_compat(M, case2_without_shift(1), 8, 2).passed, "unshifted case2(1) is compatible")
    bad = "monoid v1\nsize 3\nidentity 0\ngenerators 1 2\ntable\n0 1 2\n1 2 1\n2 2 1\n"
    res.attempt(lambda: parse_monoid(bad).size == 3, "non-associative table loads")
    T = t2()
    res.attempt(lambda: is_congruence(T, Partition((0, 1, 0, 2)), Side.TWO_SIDED), "{id, c1} | {sw} | {c2} is a congruence")
    res.attempt(lambda: tau_lemma_check(8, 1024).escape_ok, "every |x| <= 1024 escapes some m <= 8")


SUITES = {
    "stabilizers": (_stabilizers, 10.0),
    "tn-order": (_tn, 1.0),
    "mgn": (_mgn, 30.0),
    "sigma": (_sigma, 60.0),
    "separation": (_separation, 60.0),
    "right-letter": (_right_letter, 60.0),
    "rank": (_rank, 5.0),
    "tau": (_tau, 10.0),
    "cm-congruence": (_cm, 60.0),
    "derivations": (_derivations, 5.0),
    "roundtrip-cli": (_roundtrip, 10.0),
}
NEGATIVE = {"negative": (_negative, 10.0)}


def run_suite(name: str) -> SuiteResult:
    fn, limit = {**SUITES, **NEGATIVE}[name]
    res = SuiteResult(name, limit)
    start = time.perf_counter()
    fn(res)
    res.elapsed = time.perf_counter() - start
    return res


def run_all() -> list[SuiteResult]:
    return [run_suite(name) for name in SUITES]
