import random
from fractions import Fraction

import pytest

from signedtutte.graph import SignedGraph, bouquet, handcuff
from signedtutte.poly import ONE, X, Y, Z
from signedtutte.tutte import (
    MEANINGS,
    MethodMismatch,
    RecipeParams,
    bouquet_polynomial,
    count_via_polynomial,
    dichromatic,
    flow_recipe,
    potential_difference_recipe,
    recipe_evaluate,
    recipe_via_polynomial,
    recipe_via_subsets,
    signed_tutte,
    signed_tutte_dc,
    signed_tutte_subset,
    table1_point,
    tutte_via_matroids,
)

from conftest import cached_battery, grp

HANDCUFF = (Y - Z) * (Z - 1) + X * Z * Z


def test_small_examples(neg_loop, pos_loop, k2, triangle):
    assert signed_tutte_subset(neg_loop) == Z
    assert signed_tutte_subset(pos_loop) == Y
    assert signed_tutte_subset(k2) == X
    assert signed_tutte_subset(SignedGraph(3, ())) == ONE
    assert signed_tutte_dc(triangle) == X * X + X + Y


def test_handcuff_both_methods(hc):
    assert signed_tutte_subset(hc) == HANDCUFF
    assert signed_tutte_dc(hc) == HANDCUFF
    assert signed_tutte(hc, "both") == HANDCUFF


def test_handcuff_dc_intermediates(hc):
    trace = []
    signed_tutte_dc(hc, trace)
    depth, case, g = trace[0]
    assert (depth, case) == (0, "bridge+circuit-path")
    e = next(i for i, (u, v, _) in enumerate(g.edges) if u != v)
    assert signed_tutte_subset(g.contract(e)) == Y * Z + Z - Y
    assert signed_tutte_subset(g.delete(e)) == Z * Z


def test_bouquet_formula():
    assert bouquet_polynomial(2) == Y * Z + Z - Y
    for ell in range(1, 7):
        expected = ONE + (Z - 1) * sum((Y ** i for i in range(ell)), start=0 * ONE)
        assert signed_tutte_subset(bouquet(ell)) == expected == bouquet_polynomial(ell)


def test_unknown_method(hc):
    with pytest.raises(ValueError):
        signed_tutte(hc, "magic")


def test_method_mismatch_reports_diff():
    err = MethodMismatch(X, Y)
    assert err.diff == {(1, 0, 0): (1, 0), (0, 1, 0): (0, 1)}
    assert "disagree" in str(err)


def test_dc_independent_of_edge_order():
    rng = random.Random(7)
    for g in cached_battery(3, 4)[::11]:
        perm = list(range(g.edge_count))
        rng.shuffle(perm)
        assert signed_tutte_dc(g.permute_edges(perm)) == signed_tutte_subset(g)


def test_from_matroids():
    for g in cached_battery(3, 3):
        assert tutte_via_matroids(g) == signed_tutte_subset(g)


def test_dichromatic_examples(neg_loop, k2, hc):
    assert dichromatic(neg_loop, 1, 1) == 2
    assert dichromatic(k2, 1, 1) == 2
    assert dichromatic(hc, 1, 1) == 8
    with pytest.raises(ZeroDivisionError):
        dichromatic(hc, 0, 1)


def test_table1_examples(neg_loop, k2):
    assert count_via_polynomial("nz_flows", neg_loop, group=grp("Z2")) == 1
    for n in range(1, 5):
        assert count_via_polynomial("proper_n_colorings", neg_loop, n=n) == 2 * n
    assert count_via_polynomial("proper_G_colorings", k2, group=grp("Z2")) == 2
    with pytest.raises(ValueError):
        table1_point("nz_flows", k2)
    with pytest.raises(ValueError):
        table1_point("nonsense", k2)
    assert len(MEANINGS) == 7


def test_recipe_identity_parameters(hc):
    p = RecipeParams(1, 1, 1, 3, Fraction(1, 2), -2)
    assert recipe_evaluate(hc, p) == HANDCUFF.eval(3, Fraction(1, 2), -2)
    assert recipe_via_subsets(hc, p) == recipe_via_polynomial(hc, p)


def test_recipe_flow_and_pd_parameters(hc):
    g4 = grp("Z4")
    assert recipe_evaluate(hc, flow_recipe(g4)) == count_via_polynomial("nz_flows", hc, group=g4)
    # p0 = |G|^{r_M} |2G|^{r_F - r_M}
    assert recipe_evaluate(hc, potential_difference_recipe(g4)) == 4 ** 1 * 2 ** 1


def test_recipe_rejects_zero_gamma():
    with pytest.raises(ValueError):
        RecipeParams(1, 1, 0, 1, 1, 1)
