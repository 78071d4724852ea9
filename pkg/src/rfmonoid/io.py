"""Text formats: monoid table files, sandwich-matrix files and egg-box DOT output."""
from __future__ import annotations

import os
from pathlib import Path

from .constructions import ReesSpec
from .errors import ParseError
from .green import green_structure
from .monoid import FiniteMonoid, build_monoid
from .schutzen import schutzenberger_group

HEADER = "monoid v1"


def _lines(text: str):
    """Yield (line number, tokens) for non-blank lines with comments removed."""
    for no, raw in enumerate(text.split("\n"), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _read_source(src) -> str:
    if isinstance(src, Path) or ("\n" not in src and os.path.exists(src)):
        return Path(src).read_text()
    return src


def _ints(no: int, toks, what: str) -> list[int]:
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise ParseError(no, f"{what} must be decimal integers") from None


def parse_monoid(text: str) -> FiniteMonoid:
    lines = list(_lines(text))
    if not lines or lines[0][1] != HEADER.split():
        raise ParseError(lines[0][0] if lines else 1, f"expected {HEADER!r}")
    fields: dict[str, tuple[int, list[str]]] = {}
    rows: list[tuple[int, list[str]]] = []
    in_table = False
    for no, toks in lines[1:]:
        if in_table:
            rows.append((no, toks))
            continue
        key = toks[0]
        if key == "table":
            if len(toks) != 1:
                raise ParseError(no, "'table' takes no arguments")
            in_table = True
        elif key in ("size", "identity", "generators", "names"):
            if key in fields:
                raise ParseError(no, f"duplicate {key!r} line")
            fields[key] = (no, toks[1:])
        else:
            raise ParseError(no, f"unknown keyword {key!r}")
    last = lines[-1][0]
    for key in ("size", "identity", "generators"):
        if key not in fields:
            raise ParseError(last, f"missing {key!r} line")
    if not in_table:
        raise ParseError(last, "missing 'table' line")
    no, toks = fields["size"]
    if len(toks) != 1:
        raise ParseError(no, "size takes one integer")
    (n,) = _ints(no, toks, "size")
    if n < 1:
        raise ParseError(no, "size must be positive")
    no, toks = fields["identity"]
    if len(toks) != 1:
        raise ParseError(no, "identity takes one index")
    (e,) = _ints(no, toks, "identity")
    no, toks = fields["generators"]
    gens = _ints(no, toks, "generators")
    names = None
    if "names" in fields:
        no, names = fields["names"]
        if len(names) != n:
            raise ParseError(no, f"expected {n} names, got {len(names)}")
        if len(set(names)) != n:
            raise ParseError(no, "names must be distinct")
    if len(rows) != n:
        raise ParseError(last, f"expected {n} table rows, got {len(rows)}")
    table = []
    for no, toks in rows:
        if len(toks) != n:
            raise ParseError(no, f"expected {n} entries, got {len(toks)}")
        table.append(_ints(no, toks, "table entries"))
    return build_monoid(n, table, e, gens, names)


def load_monoid_file(src) -> FiniteMonoid:
    """Read a table file from a path, or parse the given text."""
    return parse_monoid(_read_source(src))


def dump_monoid(M: FiniteMonoid) -> str:
    if not isinstance(M, FiniteMonoid):
        raise ValueError("only monoids can be written; adjoin an identity first")
    out = [HEADER, f"size {M.size}", f"identity {M.identity}"]
    out.append(" ".join(["generators", *map(str, M.generators)]))
    if M.names:
        out.append(" ".join(["names", *M.names]))
    out.append("table")
    out += [" ".join(map(str, row)) for row in M.table.tolist()]
    return "\n".join(out) + "\n"


def save_monoid_file(M: FiniteMonoid, path) -> None:
    Path(path).write_text(dump_monoid(M))


def parse_rees(text: str, group: FiniteMonoid) -> ReesSpec:
    """First line 'rees I J', then J rows of I group element names."""
    lines = list(_lines(_read_source(text)))
    if not lines or lines[0][1][0] != "rees" or len(lines[0][1]) != 3:
        raise ParseError(lines[0][0] if lines else 1, "expected 'rees <I> <J>'")
    no, toks = lines[0]
    ni, nj = _ints(no, toks[1:], "index counts")
    rows = lines[1:]
    if len(rows) != nj:
        raise ParseError(lines[-1][0], f"expected {nj} rows, got {len(rows)}")
    P = []
    for no, toks in rows:
        if len(toks) != ni:
            raise ParseError(no, f"expected {ni} entries, got {len(toks)}")
        try:
            P.append([group.index_of(t) for t in toks])
        except Exception:
            raise ParseError(no, f"unknown group element in {toks}") from None
    return ReesSpec(group, ni, nj, P)


def dump_rees(spec: ReesSpec) -> str:
    G = spec.group
    out = [f"rees {spec.n_i} {spec.n_j}"] + [" ".join(G.name(v) for v in row) for row in spec.P]
    return "\n".join(out) + "\n"


def export_eggbox_dot(M) -> str:
    """One cluster per D-class holding its grid of H-classes.

    Rows are R-classes and columns L-classes, both ordered by least element.
    A node shows |H|, starred when H is a group, and carries the order of
    its Schützenberger group as a tooltip.
    """
    gs = green_structure(M)
    idem = set(M.idempotents())
    out = ["digraph eggbox {", "  node [shape=box];"]
    for d, D in enumerate(gs.d.classes()):
        rows = sorted({gs.r_class(x) for x in D})
        cols = sorted({gs.l_class(x) for x in D})
        out.append(f"  subgraph cluster_d{d} {{")
        out.append(f'    label="D{d}: {{{", ".join(M.name(x) for x in D)}}}";')
        for ri, R in enumerate(rows):
            ids = []
            for ci, L in enumerate(cols):
                H = tuple(sorted(set(R) & set(L)))
                node = f"d{d}_r{ri}_c{ci}"
                ids.append(node)
                if not H:
                    out.append(f'    {node} [label="", style=invis];')
                    continue
                star = "★" if idem & set(H) else ""
                order = schutzenberger_group(M, H).order if isinstance(M, FiniteMonoid) else len(H)
                out.append(f'    {node} [label="{len(H)}{star}", tooltip="Schutzenberger order {order}"];')
            out.append(f"    {{rank=same; {'; '.join(ids)};}}")
        for ci in range(len(cols)):
            for ri in range(len(rows) - 1):
                out.append(f"    d{d}_r{ri}_c{ci} -> d{d}_r{ri + 1}_c{ci} [style=invis];")
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"
