from itertools import product

import pytest
from hypothesis import given, settings

from conftest import idx, transformation_monoids
from rfmonoid.congruence import enumerate_congruences, is_congruence
from rfmonoid.constructions import mgn
from rfmonoid.errors import EqualElements, LRelatedPair, NotRegular
from rfmonoid.fixtures import symmetric_group
from rfmonoid.green import green_structure
from rfmonoid.monoid import check_homomorphism, quotient_by, rees_quotient, regularity_report
from rfmonoid.partition import Side
from rfmonoid.separation import l_preimage_congruence, right_letter_congruence, separate
from rfmonoid.suites import corpus


def test_not_l_route(T2):
    c1, c2 = idx(T2, "c1", "c2")
    w = separate(T2, c1, c2)
    assert w.route == "not-L"
    assert w.congruence.separates(c1, c2) and w.congruence.side is Side.TWO_SIDED


def test_same_h_route_t2(T2):
    a, b = idx(T2, "id", "sw")
    w = separate(T2, a, b)
    d = w.same_h
    assert w.route == "same-H"
    assert len(d.normal_subgroup) == 1
    assert d.blocks == ((a,), (b,))
    assert str(d.pi) == "0 | 1 | 2 3"
    assert not d.right.partition.same(a, b)
    assert w.congruence.separates(a, b)
    text = w.describe(T2)
    assert "route: same-H" in text and "blocks: id | sw" in text


def test_same_h_route_mgn(C2):
    M = mgn(C2, [0, 1])
    h, ha = idx(M, "h", "ha")
    w = separate(M, h, ha)
    assert w.route == "same-H" and w.congruence.separates(h, ha)
    assert is_congruence(M, w.congruence.partition, Side.TWO_SIDED)


def test_not_r_route():
    M = corpus()["T3"]
    gs = green_structure(M)
    x, y = next((x, y) for x, y in product(M.elements, repeat=2) if x != y and gs.l.same(x, y) and not gs.r.same(x, y))
    w = separate(M, x, y)
    assert w.route == "not-R" and w.congruence.separates(x, y)


def test_equal_elements(T2):
    with pytest.raises(EqualElements):
        separate(T2, 1, 1)


def test_coarsest_option():
    S3 = symmetric_group(3)
    x, y = idx(S3, "012", "102")
    fine, coarse = separate(S3, x, y), separate(S3, x, y, coarsest=True)
    assert coarse.congruence.separates(x, y)
    assert fine.congruence.index == 6 and coarse.congruence.index == 2
    # a 3-cycle lies in A3, so only the trivial subgroup separates it from 1
    assert separate(S3, x, idx(S3, "120")[0], coarsest=True).congruence.index == 6


def test_right_letter_t2(T2):
    c1, c2 = idx(T2, "c1", "c2")
    rho, data = right_letter_congruence(T2, c1, c2)
    L = green_structure(T2).l
    assert L.refines(rho.partition) and not rho.partition.same(c1, c2)
    assert len(data.l_classes) == 3
    with pytest.raises(LRelatedPair):
        right_letter_congruence(T2, *idx(T2, "id", "sw"))


def test_right_letter_t3(T3):
    a, b = idx(T3, "111", "102")
    assert not green_structure(T3).l.same(a, b)
    rho, _ = right_letter_congruence(T3, a, b)
    assert rho.index == 7
    assert is_congruence(T3, rho.partition, Side.RIGHT)


def test_right_letter_needs_regular(C2):
    M = mgn(C2, [0, 1])
    with pytest.raises(NotRegular):
        right_letter_congruence(M, *idx(M, "1", "0"))


def test_l_preimage_examples(T2, C2, C4):
    ident = check_homomorphism(T2, T2, list(T2.elements))
    assert l_preimage_congruence(ident) == green_structure(T2).l
    _, phi = rees_quotient(T2, idx(T2, "c1", "c2"))
    p = l_preimage_congruence(phi)
    assert str(p) == "0 1 | 2 3"
    assert green_structure(T2).l.refines(p)
    parity = check_homomorphism(C4, C2, [0, 1, 0, 1])
    assert l_preimage_congruence(parity).n_classes == 1


@pytest.mark.parametrize("name", ["T2", "S3", "C2xC2", "cor9(1)^1"])
def test_l_preimage_on_quotients(name):
    M = corpus()[name]
    assert regularity_report(M).regular
    L = green_structure(M).l
    idem = M.idempotents()
    for theta in enumerate_congruences(M, Side.TWO_SIDED):
        _, phi = quotient_by(M, theta)
        p = l_preimage_congruence(phi)
        assert L.refines(p)
        for e, f in product(idem, repeat=2):
            if phi.target.mul(phi(e), phi(f)) != phi(e):
                assert not p.same(e, f)


def _block_compatible(M, d):
    where = {x: i for i, b in enumerate(d.blocks) for x in b}
    for b in d.blocks:
        for u, v in product(b, repeat=2):
            for s in M.elements:
                assert where.get(M.mul(u, s)) == where.get(M.mul(v, s))


@pytest.mark.parametrize("name", ["T2", "S3", "mgn(C2,C2)", "mgn(C4,<a2>)", "cor9(2)^1"])
def test_block_compatibility(name):
    M = corpus()[name]
    gs = green_structure(M)
    for H in gs.h.classes():
        for x, y in product(H, repeat=2):
            if x != y:
                _block_compatible(M, separate(M, x, y).same_h)


@settings(max_examples=40, deadline=None)
@given(transformation_monoids())
def test_separate_random(M):
    for x, y in product(M.elements, repeat=2):
        if x != y:
            w = separate(M, x, y)
            assert w.congruence.separates(x, y)
            assert is_congruence(M, w.congruence.partition, Side.TWO_SIDED)


@settings(max_examples=30, deadline=None)
@given(transformation_monoids())
def test_right_letter_random(M):
    if not regularity_report(M).regular:
        return
    L = green_structure(M).l
    for a, b in product(M.elements, repeat=2):
        if not L.same(a, b):
            rho, _ = right_letter_congruence(M, a, b)
            assert is_congruence(M, rho.partition, Side.RIGHT)
            assert L.refines(rho.partition)
            assert not rho.partition.same(a, b)
