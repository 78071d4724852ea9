import pytest
from hypothesis import given, settings

from conftest import idx, transformation_monoids
from rfmonoid.constructions import ReesSpec, mgn, mgn_layout, rees_matrix
from rfmonoid.errors import NotAGroup, NotAnHClass
from rfmonoid.fixtures import klein_four, symmetric_group
from rfmonoid.green import green_structure
from rfmonoid.monoid import adjoin, check_homomorphism
from rfmonoid.schutzen import (
    PermGroup,
    group_as_perms,
    group_iso,
    induced_schutz_hom,
    is_normal_subgroup,
    left_schutzenberger_group,
    normal_subgroups,
    pmul,
    schutzenberger_group,
    stabilizer,
)


def test_stabilizer_examples(T2, C2):
    assert stabilizer(T2, idx(T2, "c1")) == set(idx(T2, "id", "c1"))
    S3 = symmetric_group(3)
    assert stabilizer(S3, S3.elements) == set(S3.elements)
    M = mgn(C2, [0, 1])
    assert {M.name(s) for s in stabilizer(M, idx(M, "h", "ha"))} == {"1", "e", "a"}
    with pytest.raises(NotAnHClass):
        stabilizer(T2, idx(T2, "id", "c1"))


def test_schutzenberger_examples(T2, C2):
    g = schutzenberger_group(T2, idx(T2, "id", "sw"))
    assert g.order == 2
    assert group_iso(g.group, group_as_perms(C2)[0]) is not None
    assert schutzenberger_group(T2, idx(T2, "c1")).order == 1
    M = mgn(C2, [0, 1])
    D = idx(M, "h", "ha")
    g = schutzenberger_group(M, D)
    assert g.order == 2 and not set(D) & set(M.idempotents())
    assert set(g.class_perms) == {(0, 1), (1, 0)}


def test_group_iso(C4):
    S3 = group_as_perms(symmetric_group(3))[0]
    assert group_iso(S3, S3) is not None
    assert group_iso(group_as_perms(C4)[0], group_as_perms(klein_four())[0]) is None


def test_gamma_along_r_class_of_rees(C2):
    S = adjoin(rees_matrix(ReesSpec(C2, 2, 2, ((1, 0), (0, 0)))))
    gs = green_structure(S)
    R = gs.r_class(0)
    hs = sorted({gs.h_class(x) for x in R})
    assert len(hs) == 2
    g1, g2 = (schutzenberger_group(S, H).group for H in hs)
    assert group_iso(g1, g2) is not None


def test_normal_subgroups(C2, C4):
    assert normal_subgroups(C2) == [frozenset({0}), frozenset({0, 1})]
    S3 = symmetric_group(3)
    subs = normal_subgroups(S3)
    assert [len(N) for N in subs] == [1, 3, 6]
    assert {S3.name(x) for x in subs[1]} == {"012", "120", "201"}
    assert len(normal_subgroups(C4)) == 3
    assert all(is_normal_subgroup(C4, N) for N in normal_subgroups(C4))
    assert not is_normal_subgroup(S3, idx(S3, "012", "102"))


def test_normal_subgroups_need_group(T2):
    with pytest.raises(NotAGroup):
        normal_subgroups(T2)


def test_induced_identity(T2):
    phi = check_homomorphism(T2, T2, list(T2.elements))
    f = induced_schutz_hom(phi, idx(T2, "id", "sw"))
    assert all(f(p) == p for p in f.source.elements)


def test_induced_parity(C2, C4):
    phi = check_homomorphism(C4, C2, [0, 1, 0, 1])
    f = induced_schutz_hom(phi, C4.elements)
    assert f.source.order == 4 and f.target.order == 2
    assert f.is_surjective() and not f.is_injective()


def test_induced_on_mgn(C2, C4):
    big, small = mgn(C4, C4.elements), mgn(C2, C2.elements)
    lb, ls = mgn_layout(C4, C4.elements), mgn_layout(C2, C2.elements)
    m = [0] * big.size
    m[lb.one], m[lb.zero] = ls.one, ls.zero
    for x in C4.elements:
        m[lb.g[x]] = ls.g[x % 2]
        m[lb.nbar[x]] = ls.nbar[x % 2]
        m[lb.d[x]] = ls.d[x % 2]
    phi = check_homomorphism(big, small, m)
    f = induced_schutz_hom(phi, lb.d)
    assert f.source.order == 4 and f.target.order == 2 and f.is_surjective()


def test_perm_group_closure():
    G = PermGroup.generated([(1, 2, 0)], 3)
    assert G.order == 3
    assert all(pmul(p, q) in G for p in G for q in G)


@settings(max_examples=40, deadline=None)
@given(transformation_monoids())
def test_schutzenberger_properties(M):
    gs = green_structure(M)
    for H in gs.h.classes():
        g = schutzenberger_group(M, H)
        elems = g.group.elements
        assert g.order == len(H)
        # regular: exactly one permutation takes position i to position j
        for i in range(len(H)):
            assert sorted(p[i] for p in elems) == list(range(len(H)))
        assert all(pmul(p, q) in g.group for p in elems for q in elems)
        assert group_iso(left_schutzenberger_group(M, H).group, g.group) is not None
