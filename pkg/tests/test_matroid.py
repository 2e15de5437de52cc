import pytest

from signedtutte.graph import SignedGraph, bouquet, handcuff
from signedtutte.matroid import (
    Matroid,
    MatroidAxiomError,
    MatroidError,
    cycle_matroid,
    dual,
    duality_same_order_holds,
    duality_swapped_holds,
    frame_matroid,
    free_matroid,
    is_perspective,
    joint_tutte,
    las_vergnas_candidate,
    matroid_tutte,
    parse_matroid,
    rank_gap_profile,
    render_matroid,
    specialize_to_m1,
    specialize_to_m2,
    uniform_matroid,
    zero_matroid,
)
from signedtutte.poly import ONE, X, Y, Z

from conftest import cached_battery


def test_cycle_rank_examples(k2, hc):
    m = cycle_matroid(k2)
    assert m.rank(1) == 1 and m.rank(0) == 0
    mh = cycle_matroid(hc)
    assert mh.rank(0b111) == 1 and mh.rank(0b110) == 0


def test_frame_rank_examples(neg_loop, hc):
    assert frame_matroid(neg_loop).rank(1) == 1
    assert frame_matroid(hc).rank(0b111) == 2


def test_balanced_frame_equals_cycle():
    for g in cached_battery(3, 3):
        if g.is_balanced():
            assert frame_matroid(g) == cycle_matroid(g)


def test_dual_examples(k2):
    d = dual(cycle_matroid(k2))
    assert d.rank(1) == 0
    assert dual(free_matroid(2)) == zero_matroid(2)
    m = frame_matroid(handcuff())
    assert dual(m).rank_of_ground == m.ground_size - m.rank_of_ground
    assert dual(dual(m)) == m


def test_joint_examples(k2, neg_loop):
    m = cycle_matroid(k2)
    assert joint_tutte(m, m) == (Z - 1) * X
    assert joint_tutte(cycle_matroid(neg_loop), frame_matroid(neg_loop)) == Z
    assert joint_tutte(Matroid(0, (0,)), Matroid(0, (0,))) == ONE
    with pytest.raises(MatroidError):
        joint_tutte(m, free_matroid(2))


def test_matroid_tutte_examples(k2):
    assert matroid_tutte(cycle_matroid(k2)) == X
    assert matroid_tutte(uniform_matroid(1, 2)) == X + Y
    assert matroid_tutte(zero_matroid(1)) == Y


def test_specialization_examples(k2, neg_loop):
    m = cycle_matroid(k2)
    assert specialize_to_m1(joint_tutte(m, m), 1) == X
    assert specialize_to_m2(Z, 1) == X
    assert specialize_to_m1(ONE, 0) == ONE and specialize_to_m2(ONE, 0) == ONE


def test_perspective_examples():
    g = SignedGraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, 1)))
    assert is_perspective(frame_matroid(g), cycle_matroid(g))
    assert is_perspective(free_matroid(1), zero_matroid(1))  # free matroid has no circuits
    assert not is_perspective(zero_matroid(1), free_matroid(1))
    m = frame_matroid(handcuff())
    assert is_perspective(m, m)


def test_las_vergnas_candidate_is_polynomial_for_perspectives():
    for m1, m2 in ((zero_matroid(2), free_matroid(2)), (uniform_matroid(1, 3), uniform_matroid(2, 3))):
        if is_perspective(m2, m1):
            las_vergnas_candidate(m1, m2)


def test_axiom_violations_are_named():
    assert Matroid(2, (0, 1, 1, 3)).violations()[0].startswith("unit increase")
    assert Matroid(1, (1, 1)).violations()[0].startswith("normalization")
    assert any(v.startswith("nonnegativity") for v in Matroid(1, (0, -1)).violations())
    assert Matroid(2, (0, 1, 1, 0)).violations()[0].startswith("monotonicity")
    # r({a,b}) + r(empty) > r(a) + r(b) with both singletons rank 0 is submodularity
    bad = Matroid(2, (0, 0, 0, 1))
    assert bad.violations()[0].startswith("submodularity")
    with pytest.raises(MatroidAxiomError) as exc:
        bad.validate()
    assert exc.value.axiom == "submodularity"


def test_graph_matroids_satisfy_axioms():
    for g in cached_battery(3, 4)[::7]:
        assert cycle_matroid(g).violations() == []
        assert frame_matroid(g).violations() == []


def test_rank_gap_is_unbalanced_component_count():
    for g in cached_battery(3, 3):
        assert rank_gap_profile(g)


def test_dualities_on_uniform_pairs():
    for r1 in range(4):
        for r2 in range(4):
            m1, m2 = uniform_matroid(r1, 3), uniform_matroid(r2, 3)
            assert duality_swapped_holds(m1, m2)
            assert duality_same_order_holds(m1, m2)


def test_file_formats():
    m = frame_matroid(handcuff())
    assert parse_matroid(render_matroid(m)) == m
    u = parse_matroid("ground 3\nbases\n0b011\n0b101\n0b110\n")
    assert u == uniform_matroid(2, 3)
    with pytest.raises(MatroidAxiomError):
        parse_matroid("ground 3\nbases\n0b011\n0b100\n")
    with pytest.raises(MatroidError):
        parse_matroid("ground 2\nranks\n0 1 1\n")
    with pytest.raises(MatroidError):
        parse_matroid("rank 2\n")


def test_circuits_of_frame_matroid(hc):
    assert frame_matroid(hc).circuits() == [0b111]
    assert frame_matroid(bouquet(1)).circuits() == []
