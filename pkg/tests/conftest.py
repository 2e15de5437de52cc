from functools import lru_cache

import pytest

from signedtutte.battery import battery_list
from signedtutte.graph import SignedGraph, bouquet, handcuff
from signedtutte.group import FiniteAbelianGroup


@lru_cache(maxsize=None)
def cached_battery(max_vertices=3, max_edges=4):
    return tuple(battery_list(max_vertices, max_edges))


@pytest.fixture
def hc():
    return handcuff()


@pytest.fixture
def neg_loop():
    return bouquet(1)


@pytest.fixture
def pos_loop():
    return SignedGraph(1, ((0, 0, 1),))


@pytest.fixture
def k2():
    return SignedGraph(2, ((0, 1, 1),))


@pytest.fixture
def triangle():
    return SignedGraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, 1)))


def grp(spec: str) -> FiniteAbelianGroup:
    return FiniteAbelianGroup.parse(spec)
