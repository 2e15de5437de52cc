import itertools
import json

from signedtutte.battery import battery_list, canonical_key, graphs_up_to_isomorphism
from signedtutte.enumerators import involutions
from signedtutte.graph import SignedGraph, handcuff
from signedtutte.matroid import Matroid
from signedtutte.tutte import MEANINGS
from signedtutte.verify import (
    ALL_TOPICS,
    Outcome,
    check_matroid_file,
    sample_involutions,
    table1_rows_covered,
    verify_graph,
    verify_many,
)

from conftest import cached_battery, grp


def test_battery_size_and_shape():
    graphs = cached_battery(3, 4)
    assert len(graphs) == 2943
    assert all(g.vertex_count <= 3 and g.edge_count <= 4 for g in graphs)
    assert len(battery_list(1, 1)) == 3  # edgeless, positive loop, negative loop


def test_canonical_key_is_relabeling_invariant():
    g = SignedGraph(3, ((0, 1, 1), (1, 2, -1), (2, 2, -1)))
    for p in itertools.permutations(range(3)):
        h = SignedGraph(3, tuple((p[u], p[v], s) for u, v, s in g.edges))
        assert canonical_key(h) == canonical_key(g)
    assert canonical_key(g) != canonical_key(g.switch(1))


def test_isomorphism_classes():
    # 1 edgeless + positive/negative loop + positive/negative edge
    assert len(graphs_up_to_isomorphism(1)) == 5
    keys = [canonical_key(g) for g in graphs_up_to_isomorphism(3)]
    assert len(keys) == len(set(keys))


def test_sample_involutions_counts():
    for size in (3, 4, 5):
        sample = sample_involutions(size)
        assert len(sample) == 3 and len({tuple(i) for i in sample}) == 3
        every = {tuple(i) for i in involutions(size)}
        assert all(tuple(i) in every for i in sample)
        assert sample[0] == list(range(size))


def test_outcome_passed():
    assert Outcome("x", 1, 1).passed and not Outcome("x", 1, 2).passed


def test_verify_graph_covers_every_counting_meaning():
    report = verify_graph(handcuff(), [grp("Z3"), grp("Z4")], ALL_TOPICS)
    assert report.ok, report.failures[:1]
    assert table1_rows_covered(report) == set(MEANINGS)
    data = json.loads(report.to_json(include_records=False))
    assert data["summary"]["failed"] == 0


def test_verify_many_matches_serial():
    graphs = cached_battery(2, 2)
    serial = verify_many(graphs, [grp("Z2")], ("flows", "polynomial"))
    parallel = verify_many(graphs, [grp("Z2")], ("flows", "polynomial"), jobs=2)
    assert serial.ok and parallel.ok
    assert len(serial.records) == len(parallel.records)


def test_matroid_file_checks_report_axiom():
    outcomes = list(check_matroid_file(Matroid(2, (0, 1, 1, 3))))
    assert [o.check for o in outcomes] == ["matroid.axioms"]
    assert not outcomes[0].passed and "unit increase" in str(outcomes[0].actual)
