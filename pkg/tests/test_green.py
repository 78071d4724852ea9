import pytest
from hypothesis import given, settings

from conftest import idx, transformation_monoids
from rfmonoid.constructions import mgn
from rfmonoid.errors import NotIdempotent
from rfmonoid.fixtures import symmetric_group
from rfmonoid.green import (
    compose_relations,
    green_by_definition,
    green_structure,
    idempotent_l_test,
    maximal_subgroups,
)
from rfmonoid.partition import Side, stability_violation
from rfmonoid.suites import corpus


def named(M, part):
    return sorted(sorted(M.name(x) for x in c) for c in part.classes())


def test_t2_green(T2):
    gs = green_structure(T2)
    assert named(T2, gs.r) == [["c1", "c2"], ["id", "sw"]]
    assert named(T2, gs.l) == [["c1"], ["c2"], ["id", "sw"]]
    assert gs.h == gs.l
    assert gs.d == gs.j == gs.r
    assert gs.counts() == {"r": 2, "l": 3, "h": 3, "d": 2, "j": 2}


def test_group_is_one_class():
    G = symmetric_group(3)
    gs = green_structure(G)
    assert all(getattr(gs, k).n_classes == 1 for k in "rlhdj")


def test_mgn_j_classes(C2):
    M = mgn(C2, [0, 1])
    got = named(M, green_structure(M).j)
    assert got == [["0"], ["1"], ["a", "e"], ["h", "ha"], ["~a", "~e"]]


def test_idempotent_l_test(T2, T3):
    c1, c2 = idx(T2, "c1", "c2")
    assert not idempotent_l_test(T2, c1, c2)
    assert all(idempotent_l_test(T2, e, e) for e in T2.idempotents())
    e, f = idx(T3, "111", "222")
    assert not idempotent_l_test(T3, e, f)
    assert not green_structure(T3).l.same(e, f)
    with pytest.raises(NotIdempotent):
        idempotent_l_test(T2, 0, idx(T2, "sw")[0])


def test_maximal_subgroups(T2, C2):
    got = [(tuple(T2.name(x) for x in H), T2.name(e)) for H, e in maximal_subgroups(T2)]
    assert got == [(("id", "sw"), "id"), (("c1",), "c1"), (("c2",), "c2")]
    assert maximal_subgroups(C2) == [((0, 1), 0)]
    M = mgn(C2, [0, 1])
    hs = [tuple(M.name(x) for x in H) for H, _ in maximal_subgroups(M)]
    assert hs == [("1",), ("e", "a"), ("~e", "~a"), ("0",)]


@pytest.mark.parametrize("name", list(corpus()))
def test_corpus_invariants(name):
    M = corpus()[name]
    gs = green_structure(M)
    assert gs.h == gs.r.meet(gs.l)
    assert gs.d == compose_relations(gs.r, gs.l) == compose_relations(gs.l, gs.r)
    assert gs.d.refines(gs.j)
    assert stability_violation(M.table, gs.l.labels, Side.RIGHT) is None
    assert stability_violation(M.table, gs.r.labels, Side.LEFT) is None
    if M.size <= 30:
        oracle = green_by_definition(M)
        assert all(oracle[k] == getattr(gs, k) for k in "rlhdj")


@settings(max_examples=60, deadline=None)
@given(transformation_monoids())
def test_scc_matches_definition(M):
    gs = green_structure(M)
    oracle = green_by_definition(M)
    for k in "rlhdj":
        assert oracle[k] == getattr(gs, k)
