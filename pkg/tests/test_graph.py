import random

import pytest

from signedtutte.graph import ComponentProfile, GraphError, SignedGraph, bouquet, handcuff

from conftest import cached_battery


def test_profile_examples(hc, neg_loop, k2):
    assert neg_loop.component_profile(1) == (1, 0, 1)
    assert k2.component_profile(0) == (2, 2, 0)
    assert hc.component_profile() == (1, 0, 1)
    assert SignedGraph(0).component_profile() == (0, 0, 0)


def test_profile_is_named():
    p = bouquet(1).component_profile()
    assert isinstance(p, ComponentProfile)
    assert p.k == p.k_b + p.k_u


def test_switch_examples(neg_loop):
    g = SignedGraph(2, ((0, 1, -1),))
    assert g.switch(0).edges == ((0, 1, 1),)
    assert g.switch(1).edges == ((0, 1, 1),)
    assert neg_loop.switch(0) == neg_loop
    path = SignedGraph(3, ((0, 1, 1), (1, 2, 1)))
    assert [s for *_, s in path.switch(1).edges] == [-1, -1]


def test_switch_is_involution():
    rng = random.Random(7)
    for g in rng.sample(cached_battery(), 200):
        for v in range(g.vertex_count):
            assert g.switch(v).switch(v) == g


def test_switch_errors(k2):
    with pytest.raises(GraphError):
        k2.switch(5)


def test_switching_preserves_profiles():
    rng = random.Random(1)
    for g in rng.sample(cached_battery(), 300):
        for v in range(g.vertex_count):
            h = g.switch(v)
            for a in range(1 << g.edge_count):
                assert h.component_profile(a) == g.component_profile(a)


def test_balance_by_brute_force_over_switchings():
    # a graph is balanced iff some switching makes every non-loop edge positive
    # and it has no negative loop
    for g in cached_battery(3, 3):
        expected = False
        for subset in range(1 << g.vertex_count):
            h = g.switch_set([v for v in range(g.vertex_count) if subset >> v & 1])
            if all(s > 0 for *_, s in h.edges):
                expected = True
        assert g.is_balanced() == expected


def test_delete_contract_examples(k2, hc):
    assert k2.contract(0) == SignedGraph(1, ())
    assert hc.contract(0) == bouquet(2)
    tri = SignedGraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, -1)))
    path = tri.delete(2)
    assert path.is_balanced() and path.edge_count == 2


def test_contract_positive_loop_deletes():
    g = SignedGraph(1, ((0, 0, 1), (0, 0, -1)))
    assert g.contract(0) == SignedGraph(1, ((0, 0, -1),))


def test_contract_negative_edge_is_error():
    with pytest.raises(GraphError):
        SignedGraph(2, ((0, 1, -1),)).contract(0)


def test_contract_renumbers_densely():
    g = SignedGraph(4, ((1, 3, 1), (3, 2, -1), (0, 3, 1)))
    h = g.contract(0)
    assert h.vertex_count == 3
    assert h.edges == ((1, 2, -1), (0, 1, 1))


def test_bridge_increases_components():
    for g in cached_battery(3, 3):
        for e in range(g.edge_count):
            if g.is_bridge(e):
                assert g.delete(e).component_profile().k == g.component_profile().k + 1


def test_classify_examples(hc, neg_loop, pos_loop):
    c = hc.classify_edge(0)
    assert (c.graph_role, c.frame_role, c.circuit_path_edge) == ("bridge", "ordinary", True)
    c = neg_loop.classify_edge(0)
    assert (c.graph_role, c.frame_role, c.circuit_path_edge) == ("loop", "coloop", False)
    c = pos_loop.classify_edge(0)
    assert (c.graph_role, c.frame_role, c.circuit_path_edge) == ("loop", "loop", False)


def test_classification_has_exactly_seven_combinations():
    seen = set()
    for g in cached_battery(3, 4):
        for e in range(g.edge_count):
            c = g.classify_edge(e)
            seen.add((c.graph_role, c.frame_role, c.circuit_path_edge))
    assert seen == {
        ("ordinary", "ordinary", False),
        ("bridge", "coloop", False),
        ("bridge", "ordinary", True),
        ("ordinary", "coloop", False),
        ("loop", "ordinary", False),
        ("loop", "coloop", False),
        ("loop", "loop", False),
    }


def test_edge_limit():
    with pytest.raises(GraphError):
        SignedGraph(1, ((0, 0, 1),) * 63)
    SignedGraph(1, ((0, 0, 1),) * 62)


def test_validation():
    with pytest.raises(GraphError):
        SignedGraph(2, ((0, 2, 1),))
    with pytest.raises(GraphError):
        SignedGraph(2, ((0, 1, 0),))
    with pytest.raises(GraphError):
        handcuff().component_profile(1 << 3)


def test_components_and_induced():
    g = SignedGraph(4, ((0, 0, -1), (2, 3, 1)))
    comps = g.components()
    assert [v for v, _ in comps] == [[0], [1], [2, 3]]
    assert g.induced_component(*comps[2]) == SignedGraph(2, ((0, 1, 1),))
