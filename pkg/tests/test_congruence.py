import numpy as np
import pytest
from hypothesis import given, settings

from conftest import idx, monoid_and_partition, transformation_monoids
from rfmonoid.congruence import (
    FiniteAction,
    Violation,
    action_from_congruence,
    congruence_from_action,
    enumerate_congruences,
    is_congruence,
    kernel_of_action,
    largest_contained,
    largest_contained_by_definition,
    principal_congruence,
    q_fingerprint_partition,
    q_set,
    rf_compatible_check,
    verify_congruence,
)
from rfmonoid.constructions import mgn
from rfmonoid.errors import NoSource, NotACongruence, NotAnIdeal, OrderBoundExceeded
from rfmonoid.fixtures import full_transformation_monoid, zero_semigroup
from rfmonoid.green import green_structure
from rfmonoid.monoid import adjoin
from rfmonoid.partition import Partition, Side


def test_principal(T2, C2):
    c = principal_congruence(T2, [tuple(idx(T2, "c1", "c2"))], Side.TWO_SIDED)
    assert str(c.partition) == "0 | 1 | 2 3"
    assert principal_congruence(T2, [], Side.TWO_SIDED).partition.is_identity()
    assert principal_congruence(C2, [(0, 1)], Side.TWO_SIDED).partition.n_classes == 1


def test_is_congruence(T2):
    pi = Partition.from_classes(4, [idx(T2, "id", "sw"), idx(T2, "c1", "c2")])
    assert is_congruence(T2, pi, Side.RIGHT)
    bad = Partition.from_classes(4, [idx(T2, "id", "c1")])
    res = is_congruence(T2, bad, Side.RIGHT)
    assert not res
    # id*sw = sw and c1*sw = c2 land in different classes
    assert res.witness == Violation(*idx(T2, "id", "c1", "sw"), Side.RIGHT)
    for side in Side:
        assert is_congruence(T2, Partition.identity(4), side)
    with pytest.raises(NotACongruence):
        verify_congruence(T2, bad, Side.RIGHT)


def test_largest_contained_examples(T2):
    pi = Partition.from_classes(4, [idx(T2, "id", "sw"), idx(T2, "c1", "c2")])
    assert largest_contained(T2, pi, Side.RIGHT).partition == pi
    for side in Side:
        assert largest_contained(T2, Partition.identity(4), side).partition.is_identity()


def test_q_set(T2):
    c1 = idx(T2, "c1")[0]
    assert q_set(T2, c1, [c1]) == set(idx(T2, "id", "c1"))
    X = idx(T2, "sw", "c2")
    assert q_set(T2, T2.identity, X) == set(X)
    assert q_set(T2, c1, T2.elements) == set(T2.elements)


def test_actions(T2, C2):
    A = action_from_congruence(C2, Partition.identity(2))
    assert A.table.tolist() == C2.table.tolist()
    assert congruence_from_action(A).partition.is_identity()
    L = green_structure(T2).l
    A = action_from_congruence(T2, L)
    assert A.table.shape == (3, 4) and A.source == 0
    assert congruence_from_action(A).partition == L
    one = action_from_congruence(T2, Partition.universal(4))
    assert one.n_points == 1
    assert kernel_of_action(one).partition.n_classes == 1
    with pytest.raises(NoSource):
        congruence_from_action(FiniteAction(T2, A.table))


def test_action_rejects_bad_tables(T2):
    with pytest.raises(ValueError):
        FiniteAction(T2, np.zeros((2, 4), dtype=int))  # identity must fix every point
    with pytest.raises(ValueError):
        # (p c1) sw = 1 but p (c1 sw) = p c2 = 0
        FiniteAction(T2, [[0, 1, 0, 0], [1, 0, 0, 0]])


def test_enumerate(T2, C2):
    assert [c.partition.n_classes for c in enumerate_congruences(C2, Side.TWO_SIDED)] == [1, 2]
    two = [str(c.partition) for c in enumerate_congruences(T2, Side.TWO_SIDED)]
    assert two == ["0 1 2 3", "0 1 | 2 3", "0 | 1 | 2 3", "0 | 1 | 2 | 3"]
    assert len(enumerate_congruences(T2, Side.RIGHT)) == 7
    assert len(enumerate_congruences(T2, Side.LEFT)) == 4
    Z = zero_semigroup(2)
    assert len(enumerate_congruences(Z, Side.TWO_SIDED)) == 2
    with pytest.raises(OrderBoundExceeded):
        enumerate_congruences(full_transformation_monoid(3), Side.RIGHT)


def test_rf_compatible(T2, C2):
    Z = adjoin(C2, "zero")
    rep = rf_compatible_check(Z, [Z.zero])
    assert rep.compatible and rep.witnesses == {}
    rep = rf_compatible_check(T2, idx(T2, "c1", "c2"))
    assert rep.compatible
    assert rep.witnesses[tuple(idx(T2, "c1", "c2"))].is_identity()
    M = mgn(C2, [0, 1])
    I = idx(M, "h", "ha", "0")
    rep = rf_compatible_check(M, I)
    assert rep.compatible and len(rep.witnesses) == 3
    for (s, t), p in rep.witnesses.items():
        assert not p.same(s, t) and is_congruence(M, p, Side.TWO_SIDED)
    with pytest.raises(NotAnIdeal):
        rf_compatible_check(T2, idx(T2, "c1"))


@settings(max_examples=60, deadline=None)
@given(monoid_and_partition())
def test_sigma_matches_definition(mp):
    M, pi = mp
    for side in Side:
        sig = largest_contained(M, pi, side)
        assert sig.partition == largest_contained_by_definition(M, pi, side)
        assert sig.partition.refines(pi)
        assert is_congruence(M, sig.partition, side)


@settings(max_examples=60, deadline=None)
@given(monoid_and_partition())
def test_q_sets_give_sigma_r(mp):
    M, pi = mp
    assert q_fingerprint_partition(M, pi) == largest_contained(M, pi, Side.RIGHT).partition


@settings(max_examples=30, deadline=None)
@given(monoid_and_partition(max_degree=2))
def test_sigma_is_largest(mp):
    M, pi = mp
    if M.size > 7:
        return
    for side in Side:
        sig = largest_contained(M, pi, side).partition
        for rho in enumerate_congruences(M, side):
            if rho.partition.refines(pi):
                assert rho.partition.refines(sig)


@settings(max_examples=30, deadline=None)
@given(transformation_monoids(max_degree=2))
def test_action_round_trip(M):
    for rho in enumerate_congruences(M, Side.RIGHT):
        A = action_from_congruence(M, rho)
        assert congruence_from_action(A).partition == rho.partition
        two = largest_contained(M, rho.partition, Side.TWO_SIDED)
        assert two.index >= rho.index
        assert kernel_of_action(A).partition == two.partition
