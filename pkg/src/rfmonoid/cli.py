"""Command line: analyze, separate, construct, rank, gallery, check, export-dot.

Exit status is 0 on success, 1 when a verification fails and 2 for usage
or input errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import config
from .constructions import golubov_profile, matrix_rank, mgn, rees_matrix
from .errors import MonoidError
from .fixtures import group_by_name
from .green import green_structure, maximal_subgroups
from .io import dump_monoid, export_eggbox_dot, load_monoid_file, parse_rees
from .monoid import adjoin, direct_product, regularity_report
from .schutzen import schutzenberger_group
from .separation import separate

OK, FAILED, USAGE = 0, 1, 2


class VerificationFailed(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MonoidError(f"{path}: {exc.strerror}") from None
    try:
        return load_monoid_file(text)
    except MonoidError as exc:
        raise MonoidError(f"{path}: {type(exc).__name__}: {exc}") from exc


def _fmt_set(M, xs) -> str:
    return "{" + ", ".join(M.name(x) for x in xs) + "}"


def _elements(G, spec: str | None):
    if spec is None or spec == "all":
        return list(G.elements)
    return [G.index_of(t) for t in spec.replace(",", " ").split()]


def _emit(M, out: str | None) -> None:
    text = dump_monoid(M)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- subcommands ------------------------------------------------------------------

def cmd_analyze(args) -> int:
    M = _load(args.file)
    gs = green_structure(M)
    c = gs.counts()
    reg = regularity_report(M)
    print(f"order: {M.size}")
    print(f"R-classes: {c['r']}, L-classes: {c['l']}, H-classes: {c['h']}, regular: {'yes' if reg.regular else 'no'}")
    print(f"D-classes: {c['d']}, J-classes: {c['j']}")
    print(f"idempotents: {_fmt_set(M, reg.idempotents)}")
    print("maximal subgroups:")
    for H, e in maximal_subgroups(M):
        print(f"  {_fmt_set(M, H)} order {len(H)}, identity {M.name(e)}")
    print("Schutzenberger groups:")
    for H in gs.h.classes():
        print(f"  {_fmt_set(M, H)} order {schutzenberger_group(M, H).order}")
    return OK


def cmd_separate(args) -> int:
    M = _load(args.file)
    try:
        x, y = M.index_of(args.x), M.index_of(args.y)
    except KeyError as exc:
        raise MonoidError(str(exc.args[0])) from None
    w = separate(M, x, y, coarsest=args.coarsest)
    print(w.describe(M))
    if not w.congruence.separates(x, y):
        raise VerificationFailed("witness congruence does not separate the pair")
    return OK


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "rees-matrix":
        if not args.inputs or not args.group:
            raise MonoidError("rees-matrix needs MATRIXFILE and --group")
        spec = parse_rees(Path(args.inputs[0]).read_text(), group_by_name(args.group))
        M = rees_matrix(spec, adjoin_identity=True)
    elif kind == "mgn":
        if not args.group:
            raise MonoidError("mgn needs --group")
        G = group_by_name(args.group)
        M = mgn(G, _elements(G, args.normal))
    elif kind == "product":
        if len(args.inputs) != 2:
            raise MonoidError("product needs two table files")
        M = direct_product(_load(args.inputs[0]), _load(args.inputs[1]))
    else:
        if len(args.inputs) != 1:
            raise MonoidError("adjoin needs one table file")
        M = adjoin(_load(args.inputs[0]), args.adjoin)
    _emit(M, args.output)
    return OK


def cmd_rank(args) -> int:
    G = group_by_name(args.group)
    spec = parse_rees(Path(args.matrix).read_text(), G)
    if args.profile:
        for N, r in golubov_profile(spec):
            print(f"N = {_fmt_set(G, sorted(N))}: rank {r}")
        return OK
    rep = matrix_rank(spec, None if args.mod is None else _elements(G, args.mod))
    print("~I classes: " + " | ".join(" ".join(map(str, c)) for c in rep.sim_i.classes()))
    print("~J classes: " + " | ".join(" ".join(map(str, c)) for c in rep.sim_j.classes()))
    print(f"r_I = {rep.r_i}, r_J = {rep.r_j}, rank = {rep.rank}")
    return OK


def cmd_gallery(args) -> int:
    from . import effective as eff
    from .effective.ab import ab_l_relation
    from .effective.ex13 import ex13_monoid

    ok = True
    name = args.name
    if name == "ab":
        M = eff.ab_monoid()
        els = M.window(args.n)
        print(f"ab window {args.n}: {len(els)} elements, {eff.associativity_check(M, els)} triples associate")
        rep = eff.verify_compat(M, ab_l_relation(), args.n, args.n)
        print(f"L is a right congruence on the window: {'pass' if rep.passed else 'FAIL'}")
        apart = not eff.l_related(("b", 0), ("b", 1))
        print(f"b_0 and b_1 not L-related: {'pass' if apart else 'FAIL'}")
        ok = rep.passed and apart
    elif name == "t_n":
        T = eff.t_n(args.n)
        c = green_structure(T).counts()
        print(f"T_{args.n}: order {T.size}, R {c['r']}, L {c['l']}, H {c['h']}, J {c['j']}")
        th = eff.theta_n(args.n, T)
        print(f"theta_{args.n} multiplicative on {th.check(eff.ab_monoid().window(2 * args.n))} pairs")
        rep = eff.derivation_check("ab_L_collapse", args.n)
        print(rep)
        ok = rep.passed
    elif name == "ex13":
        M = ex13_monoid()
        els = M.window(1)
        print(f"ex13 window 1: {len(els)} elements, {eff.associativity_check(M, els)} triples associate")
        for q in range(2, args.n + 1):
            for p in range(1, q):
                rep = eff.derivation_check("ex13_collapse", p, q)
                ok &= rep.passed
                print(rep)
    elif name == "cm":
        M = eff.cm_monoid()
        print("tau(1..16): " + " ".join(str(eff.tau(z)) for z in range(1, 17)))
        els = M.window(1)
        print(f"cm window 1: {len(els)} elements, {eff.associativity_check(M, els)} triples associate")
        if args.check_compat:
            m = args.m
            rep = eff.verify_compat(M, eff.paper_congruence("case2", m), 2 ** (m + 2), 2**m)
            print(f"case2({m}): {rep.elements} elements, {rep.pairs} pairs, {rep.products} products, "
                  f"{len(rep.violations)} violations: {'pass' if rep.passed else 'FAIL'}")
            for b, k in sorted(rep.branches.items()):
                print(f"  branch {b}: {k}")
            ok = rep.passed
    if not ok:
        raise VerificationFailed(f"gallery {name} reported a failure")
    return OK


def cmd_check(args) -> int:
    from .suites import NEGATIVE, SUITES, run_suite

    names = list(SUITES) if args.suite in ("acceptance", "all") else [args.suite]
    unknown = [n for n in names if n not in SUITES and n not in NEGATIVE]
    if unknown:
        raise MonoidError(f"unknown suite {unknown[0]!r}; choose acceptance, negative or one of {', '.join(SUITES)}")
    results = [run_suite(n) for n in names]
    for r in results:
        print(r.line())
        for f in r.failures[: args.show]:
            print(f"    {f}")
    return OK if all(r.passed for r in results) else FAILED


def cmd_export_dot(args) -> int:
    sys.stdout.write(export_eggbox_dot(_load(args.file)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rfmonoid", description="Finite monoid structure and separation tools.")
    p.add_argument("--max-size", type=int, default=config.DEFAULT_MAX_SIZE, help="element-count cap")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="Green's structure, regularity and Schutzenberger groups")
    a.add_argument("file")
    a.set_defaults(fn=cmd_analyze)

    s = sub.add_parser("separate", help="congruence separating two elements")
    s.add_argument("file")
    s.add_argument("x")
    s.add_argument("y")
    s.add_argument("--coarsest", action="store_true", help="use the largest usable normal subgroup")
    s.set_defaults(fn=cmd_separate)

    c = sub.add_parser("construct", help="build a monoid and print its table file")
    c.add_argument("kind", choices=["rees-matrix", "mgn", "product", "adjoin"])
    c.add_argument("inputs", nargs="*")
    c.add_argument("--group", help="group name such as C2, C4, C2xC2, S3")
    c.add_argument("--normal", help="normal subgroup elements, comma separated (default: all)")
    c.add_argument("--adjoin", choices=["identity", "zero"], default="identity")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=cmd_construct)

    r = sub.add_parser("rank", help="rank of a sandwich matrix")
    r.add_argument("matrix")
    r.add_argument("--group", default="C2")
    r.add_argument("--mod", help="normal subgroup elements, comma separated, or 'all'")
    r.add_argument("--profile", action="store_true", help="rank modulo every normal subgroup")
    r.set_defaults(fn=cmd_rank)

    g = sub.add_parser("gallery", help="infinite example monoids and their checks")
    g.add_argument("name", choices=["ab", "t_n", "ex13", "cm"])
    g.add_argument("--n", type=int, default=3)
    g.add_argument("--m", type=int, default=1)
    g.add_argument("--check-compat", action="store_true")
    g.set_defaults(fn=cmd_gallery)

    k = sub.add_parser("check", help="run acceptance suites")
    k.add_argument("suite", help="acceptance, negative, or a single suite name")
    k.add_argument("--show", type=int, default=5, help="failures to list per suite")
    k.set_defaults(fn=cmd_check)

    e = sub.add_parser("export-dot", help="egg-box diagram as DOT")
    e.add_argument("file")
    e.set_defaults(fn=cmd_export_dot)
    return p


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    if args.max_size < 1:
        print("error: --max-size must be positive", file=sys.stderr)
        return USAGE
    try:
        with config.size_cap(args.max_size):
            return args.fn(args)
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return FAILED
    except AssertionError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return FAILED
    except (MonoidError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
