from itertools import product

import pytest

from signedtutte.group import FiniteAbelianGroup, GroupError

from conftest import grp

BATTERY = ["Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "Z2xZ4"]


def test_arithmetic_examples():
    z4 = grp("Z4")
    assert z4.add((3,), (3,)) == (2,)
    assert grp("Z2xZ3").neg((1, 2)) == (1, 1)
    assert z4.scale(2, (3,)) == (2,)


def test_two_g_examples():
    z4 = grp("Z4")
    assert z4.in_two_g((2,)) and not z4.in_two_g((1,))
    assert z4.two_g_index() == 2
    z3 = grp("Z3")
    assert all(z3.in_two_g(x) for x in z3.elements()) and z3.two_g_index() == 3
    g = grp("Z2xZ4")
    assert g.two_g_order == 2 and g.order // g.two_g_order == 4


@pytest.mark.parametrize("spec", BATTERY)
def test_subgroup_orders_by_brute_force(spec):
    g = grp(spec)
    doubles = {g.scale(2, x) for x in g.elements()}
    assert len(doubles) == g.two_g_order
    assert sum(g.in_two_g(x) for x in g.elements()) == g.two_g_order
    assert sum(g.is_zero(g.scale(2, x)) for x in g.elements()) == g.order // g.two_g_order
    assert g.two_torsion_order * g.two_g_order == g.order


@pytest.mark.parametrize("spec", BATTERY)
def test_coset_reps_form_transversal(spec):
    g = grp(spec)
    reps = g.coset_reps()
    assert len(reps) == g.order // g.two_g_order
    for x in g.elements():
        r = g.coset_rep_of(x)
        assert r in reps
        assert g.in_two_g(g.add(x, g.neg(r)))
        assert g.coset_rep_of(g.neg(x)) == r


def test_enumeration_order_and_cosets():
    assert list(grp("Z2").elements()) == [(0,), (1,)]
    assert grp("Z4").coset_reps() == [(0,), (1,)]
    assert grp("Z4").coset_rep_of((3,)) == (1,)
    assert list(grp("Z1").elements()) == [()]
    assert list(grp("").elements()) == [()]
    assert list(grp("Z2xZ2").elements()) == list(product(range(2), range(2)))


def test_parse():
    assert grp("z4xZ2xZ3").moduli == (4, 2, 3)
    assert str(grp("Z4 x Z2")) == "Z4xZ2"
    assert grp("Z1").order == 1
    for bad in ("Z0", "G4", "Z4x", "4"):
        with pytest.raises(GroupError):
            grp(bad)


def test_shape_mismatch():
    with pytest.raises(GroupError):
        grp("Z4").add((1, 0), (1,))
    with pytest.raises(GroupError):
        FiniteAbelianGroup((1,))


def test_index_matches_element_table():
    g = grp("Z3xZ4")
    for i, x in enumerate(g.elements()):
        assert g.index_of(x) == i
        assert tuple(g.element_table[i]) == x
