import re

import numpy as np
import pytest

from conftest import DATA
from rfmonoid.cli import run_command
from rfmonoid.constructions import mgn, rees_matrix
from rfmonoid.errors import AssociativityViolation, ParseError
from rfmonoid.fixtures import cyclic_group, symmetric_group
from rfmonoid.io import dump_monoid, dump_rees, export_eggbox_dot, load_monoid_file, parse_monoid, parse_rees
from rfmonoid.monoid import adjoin, are_isomorphic, direct_product
from rfmonoid.suites import corpus

T2_FILE = DATA / "t2.mon"
P2_FILE = DATA / "p2.rees"


def run(capsys, *argv):
    code = run_command([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_load_fixture(T2):
    M = load_monoid_file(T2_FILE)
    assert M.size == 4 and np.array_equal(M.table, T2.table)
    assert load_monoid_file(str(T2_FILE)).size == 4
    assert load_monoid_file(T2_FILE.read_text()).size == 4


def test_round_trip_ignores_comments():
    text = T2_FILE.read_text()
    stripped = "\n".join(l for l in text.splitlines() if not l.startswith("#")) + "\n"
    assert dump_monoid(parse_monoid(text)) == stripped
    noisy = text.replace("table", "table   # rows follow").replace("size 4", "size 4  ")
    assert dump_monoid(parse_monoid(noisy)) == stripped


@pytest.mark.parametrize("name", list(corpus()))
def test_corpus_round_trip(name):
    M = corpus()[name]
    text = dump_monoid(M)
    back = parse_monoid(text)
    assert dump_monoid(back) == text
    assert np.array_equal(back.table, M.table)


def test_parse_errors():
    good = T2_FILE.read_text()
    with pytest.raises(ParseError, match="identity"):
        parse_monoid(good.replace("identity 0\n", ""))
    with pytest.raises(ParseError) as exc:
        parse_monoid(good.replace("2 3 2 3", "2 3 2"))
    assert exc.value.line == 10
    for bad in ["", "monoid v2\n", good.replace("size 4", "size four"), good.replace("names", "labels"),
                good.replace("names id sw c1 c2", "names id id c1 c2"), good + "0 1 2 3\n"]:
        with pytest.raises(ParseError):
            parse_monoid(bad)


def test_non_associative_file():
    text = "monoid v1\nsize 3\nidentity 0\ngenerators 1 2\ntable\n0 1 2\n1 2 1\n2 2 1\n"
    with pytest.raises(AssociativityViolation) as exc:
        parse_monoid(text)
    assert exc.value.triple == (1, 1, 1)


def test_cli_reports_bad_file(tmp_path, capsys):
    path = tmp_path / "bad.mon"
    path.write_text("monoid v1\nsize 3\nidentity 0\ngenerators 1 2\ntable\n0 1 2\n1 2 1\n2 2 1\n")
    code, _, err = run(capsys, "analyze", path)
    assert code == 2
    assert "AssociativityViolation" in err and "(1, 1, 1)" in err and str(path) in err


def test_rees_file(C2):
    spec = parse_rees(P2_FILE.read_text(), C2)
    assert spec.P == ((1, 0), (0, 0))
    assert dump_rees(spec) == P2_FILE.read_text()
    with pytest.raises(ParseError):
        parse_rees("rees 2 2\na e\n", C2)
    with pytest.raises(ParseError):
        parse_rees("rees 2 1\na x\n", C2)


def _clusters(dot):
    return re.findall(r"subgraph (cluster_\w+) \{(.*?)\n  \}", dot, re.S)


def test_dot_t2(T2):
    dot = export_eggbox_dot(T2)
    cl = _clusters(dot)
    assert len(cl) == 2
    assert re.findall(r'label="([^"]*)",', cl[0][1]) == ["2★"]
    assert re.findall(r'label="([^"]*)",', cl[1][1]) == ["1★", "1★"]
    assert "d1_r0_c1" in cl[1][1] and "d1_r1" not in cl[1][1]
    assert dot == export_eggbox_dot(T2)


def test_dot_group_and_mgn(C2):
    cl = _clusters(export_eggbox_dot(symmetric_group(3)))
    assert len(cl) == 1 and cl[0][1].count("★") == 1
    M = mgn(C2, [0, 1])
    cl = _clusters(export_eggbox_dot(M))
    assert len(cl) == 5
    dnode = next(body for _, body in cl if "{h, ha}" in body)
    assert 'label="2"' in dnode and "★" not in dnode.split("label=", 2)[2]
    assert "Schutzenberger order 2" in dnode


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", T2_FILE)
    assert code == 0
    assert "R-classes: 2, L-classes: 3, H-classes: 3, regular: yes" in out
    assert "{id, sw} order 2" in out


def test_separate(capsys):
    code, out, _ = run(capsys, "separate", T2_FILE, 0, 1)
    assert code == 0
    assert "route: same-H" in out and "blocks: id | sw" in out
    code, out, _ = run(capsys, "separate", T2_FILE, "c1", "c2")
    assert code == 0 and "route: not-L" in out
    assert run(capsys, "separate", T2_FILE, "c1", "c1")[0] == 2
    assert run(capsys, "separate", T2_FILE, "c1", "zz")[0] == 2


def test_construct_reloads(tmp_path, capsys, C2):
    out = tmp_path / "m.mon"
    assert run(capsys, "construct", "mgn", "--group", "C2", "-o", out)[0] == 0
    assert are_isomorphic(load_monoid_file(out), mgn(C2, [0, 1]))
    code, text, _ = run(capsys, "construct", "mgn", "--group", "C4", "--normal", "e,a2")
    assert code == 0 and are_isomorphic(parse_monoid(text), mgn(cyclic_group(4), [0, 2]))
    code, text, _ = run(capsys, "construct", "rees-matrix", P2_FILE, "--group", "C2")
    spec = parse_rees(P2_FILE.read_text(), C2)
    assert code == 0 and are_isomorphic(parse_monoid(text), rees_matrix(spec, adjoin_identity=True))
    code, text, _ = run(capsys, "construct", "product", T2_FILE, T2_FILE)
    T2 = load_monoid_file(T2_FILE)
    assert code == 0 and are_isomorphic(parse_monoid(text), direct_product(T2, T2))
    code, text, _ = run(capsys, "construct", "adjoin", T2_FILE, "--adjoin", "zero")
    assert code == 0 and are_isomorphic(parse_monoid(text), adjoin(T2, "zero"))
    assert run(capsys, "construct", "product", T2_FILE)[0] == 2


def test_rank(capsys):
    code, out, _ = run(capsys, "rank", P2_FILE)
    assert code == 0 and "rank = 2" in out
    code, out, _ = run(capsys, "rank", P2_FILE, "--mod", "all")
    assert code == 0 and "rank = 1" in out
    code, out, _ = run(capsys, "rank", P2_FILE, "--profile")
    assert out.splitlines() == ["N = {e}: rank 2", "N = {e, a}: rank 1"]


@pytest.mark.parametrize("argv", [["ab"], ["t_n", "--n", "4"], ["ex13", "--n", "4"], ["cm"], ["cm", "--check-compat", "--m", "1"]])
def test_gallery(capsys, argv):
    code, out, _ = run(capsys, "gallery", *argv)
    assert code == 0
    assert "FAIL" not in out


def test_gallery_cm_compat_report(capsys):
    code, out, _ = run(capsys, "gallery", "cm", "--check-compat", "--m", "1")
    assert code == 0 and "0 violations: pass" in out
    assert out.count("branch ") == 4


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "negative")
    assert code == 1 and out.startswith("FAIL negative")
    code, out, _ = run(capsys, "check", "tau")
    assert code == 0 and out.startswith("PASS tau")
    assert run(capsys, "check", "nonsense")[0] == 2


def test_usage_errors(capsys, tmp_path):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "analyze", tmp_path / "missing.mon")[0] == 2
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "--max-size", "0", "analyze", T2_FILE)[0] == 2


def test_max_size(capsys):
    code, _, err = run(capsys, "--max-size", "10", "construct", "product", T2_FILE, T2_FILE)
    assert code == 2 and "cap is 10" in err


def test_export_dot_command(capsys):
    code, out, _ = run(capsys, "export-dot", T2_FILE)
    assert code == 0 and out == export_eggbox_dot(load_monoid_file(T2_FILE))
