from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from rfmonoid.fixtures import cyclic_group, full_transformation_monoid, t2, transformation_monoid
from rfmonoid.partition import Partition

DATA = Path(__file__).parent / "data"


def _closure(maps, deg):
    ident = tuple(range(deg))
    seen = [ident]
    frontier = [ident]
    while frontier:
        f = frontier.pop()
        for g in maps:
            h = tuple(g[f[p]] for p in range(deg))
            if h not in seen:
                seen.append(h)
                frontier.append(h)
    return seen


@st.composite
def transformation_monoids(draw, max_degree=3):
    """Submonoids of T_k generated by a few random maps."""
    deg = draw(st.integers(2, max_degree))
    point_map = st.lists(st.integers(0, deg - 1), min_size=deg, max_size=deg).map(tuple)
    gens = draw(st.lists(point_map, min_size=1, max_size=3))
    return transformation_monoid(_closure(gens, deg))


def partitions_of(n):
    return st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(Partition)


@st.composite
def monoid_and_partition(draw, max_degree=3):
    M = draw(transformation_monoids(max_degree))
    return M, draw(partitions_of(M.size))


@pytest.fixture(scope="session")
def T2():
    return t2()


@pytest.fixture(scope="session")
def T3():
    return full_transformation_monoid(3)


@pytest.fixture(scope="session")
def C2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def C4():
    return cyclic_group(4)


def idx(M, *names):
    return [M.index_of(n) for n in names]


def assert_monoid_laws(M):
    t = M.table
    assert np.array_equal(t[t, :], t[:, t])  # (xy)z == x(yz) for every triple
    e = M.identity
    assert (t[e, :] == np.arange(M.size)).all() and (t[:, e] == np.arange(M.size)).all()



def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
