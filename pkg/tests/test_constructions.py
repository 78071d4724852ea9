from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import idx
from rfmonoid.congruence import is_congruence
from rfmonoid.constructions import (
    ReesSpec,
    cor9_matrix,
    golubov_profile,
    matrix_rank,
    mgn,
    mgn_layout,
    mgn_quotient,
    rees_matrix,
)
from rfmonoid.errors import NotAGroup, NotNormal
from rfmonoid.fixtures import cyclic_group, symmetric_group, trivial_monoid
from rfmonoid.green import green_structure
from rfmonoid.monoid import are_isomorphic, regularity_report
from rfmonoid.partition import Side
from rfmonoid.schutzen import normal_subgroups


@pytest.fixture
def P2(C2):
    return ReesSpec(C2, 2, 2, ((1, 0), (0, 0)))


def test_rees_matrix(P2, C2, T2):
    S = rees_matrix(P2)
    assert S.size == 8 and regularity_report(S).regular
    M = rees_matrix(P2, adjoin_identity=True)
    assert M.size == 9 and regularity_report(M).regular
    one = rees_matrix(ReesSpec(C2, 1, 1, ((0,),)))
    assert one.size == 2 and green_structure(one).h.n_classes == 1
    with pytest.raises(NotAGroup):
        rees_matrix(ReesSpec(T2, 1, 1, ((0,),)))


def test_rees_formula(P2):
    S = rees_matrix(P2)
    G = P2.group
    ng, nj = G.size, P2.n_j

    def index(i, g, j):
        return (i * ng + g) * nj + j

    for i, g, j, k, h, l in product(range(2), range(ng), range(2), range(2), range(ng), range(2)):
        prod = S.mul(index(i, g, j), index(k, h, l))
        assert prod == index(i, G.mul(G.mul(g, P2.P[j][k]), h), l)
    assert S.name(index(1, 1, 0)) == "(1,a,0)"


def test_rank_examples(P2, C2):
    r = matrix_rank(P2)
    assert (r.r_i, r.r_j, r.rank) == (2, 2, 2)
    assert matrix_rank(P2, C2.elements).rank == 1
    assert matrix_rank(cor9_matrix(2)).r_i == 1
    with pytest.raises(NotNormal):
        S3 = symmetric_group(3)
        matrix_rank(ReesSpec(S3, 1, 1, ((0,),)), idx(S3, "012", "102"))


def test_golubov(P2, C2):
    assert [(len(N), r) for N, r in golubov_profile(P2)] == [(1, 2), (2, 1)]
    assert [(len(N), r) for N, r in golubov_profile(cor9_matrix(4))] == [(1, 4), (2, 1)]
    triv = ReesSpec(trivial_monoid(), 2, 3, ((0, 0), (0, 0), (0, 0)))
    assert [(len(N), r) for N, r in golubov_profile(triv)] == [(1, 1)]


def test_cor9_matrix():
    assert cor9_matrix(1).P == ((1,),)
    assert matrix_rank(cor9_matrix(2)).rank == 1
    assert [matrix_rank(cor9_matrix(n)).rank for n in range(3, 13)] == list(range(3, 13))


@given(st.integers(1, 12))
def test_cor9_modulo_c2(n):
    spec = cor9_matrix(n)
    assert matrix_rank(spec, spec.group.elements).rank == 1


def test_mgn_examples(C2, C4):
    M = mgn(C2, C2.elements)
    assert M.size == 8
    lay = mgn_layout(C2, C2.elements)
    assert not set(lay.d) & set(M.idempotents())
    assert mgn(C2, [0]).size == 7
    M = mgn(C4, [0, 2])
    assert M.size == 12
    gs = green_structure(M)
    assert len({gs.l.labels[x] for x in mgn_layout(C4, [0, 2]).d}) == 2
    with pytest.raises(NotNormal):
        S3 = symmetric_group(3)
        mgn(S3, idx(S3, "012", "102"))


def test_mgn_quotient_examples(C2, C4):
    Q, ok, target = mgn_quotient(C2, C2.elements, C2.elements)
    assert ok and Q.size == 5 and are_isomorphic(Q, mgn(trivial_monoid(), [0]))
    Q, ok, _ = mgn_quotient(C2, C2.elements, [0])
    assert ok and are_isomorphic(Q, mgn(C2, C2.elements))
    Q, ok, _ = mgn_quotient(C4, C4.elements, [0, 2])
    assert ok and Q.size == 8 and are_isomorphic(Q, mgn(C2, C2.elements))


@pytest.mark.parametrize("G", [cyclic_group(2), cyclic_group(4), symmetric_group(3)], ids=["C2", "C4", "S3"])
def test_mgn_facts(G):
    for N in normal_subgroups(G):
        M = mgn(G, N)
        gs = green_structure(M)
        assert M.size == 2 * G.size + len(N) + 2
        assert gs.j.n_classes == 5
        assert is_congruence(M, gs.j, Side.TWO_SIDED)
        D = mgn_layout(G, N).d
        assert len({gs.l.labels[x] for x in D}) == G.size // len(N)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_rank_invariants(ni, nj, data):
    G = symmetric_group(3)
    P = tuple(tuple(data.draw(st.integers(0, 5)) for _ in range(ni)) for _ in range(nj))
    spec = ReesSpec(G, ni, nj, P)
    full = matrix_rank(spec)
    assert full.rank == max(full.r_i, full.r_j)
    assert full.r_i == full.sim_i.n_classes and full.r_j == full.sim_j.n_classes
    for N in normal_subgroups(G):
        assert matrix_rank(spec, N).rank <= full.rank
    assert regularity_report(rees_matrix(spec)).regular
