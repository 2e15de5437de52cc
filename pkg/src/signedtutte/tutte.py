"""The signed Tutte polynomial T(X, Y, Z) and its evaluations."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import SignedGraph
from .group import FiniteAbelianGroup
from .matroid import cycle_matroid, frame_matroid, joint_tutte
from .poly import ONE, TriPoly, X, Y, Z, from_exponent_counts

log = logging.getLogger(__name__)


def signed_tutte_subset(g: SignedGraph) -> TriPoly:
    """Sum over A of (X-1)^{k(A)-k} (Y-1)^{|A|-|V|+k_b(A)} (Z-1)^{k_u(A)}."""
    k0 = g.component_profile().k
    n = g.vertex_count
    counts: Counter = Counter()
    for a in range(1 << g.edge_count):
        k, kb, ku = g.component_profile(a)
        counts[(k - k0, bin(a).count("1") - n + kb, ku)] += 1
    return from_exponent_counts(counts)


def bouquet_polynomial(negative_loops: int) -> TriPoly:
    """1 + (Z-1)(1 + Y + ... + Y^{l-1}); 1 for an empty bouquet."""
    if negative_loops == 0:
        return ONE
    geometric = TriPoly({(0, j, 0): 1 for j in range(negative_loops)})
    return ONE + (Z - 1) * geometric


def signed_tutte_dc(g: SignedGraph, trace: Optional[list] = None) -> TriPoly:
    """Deletion-contraction on the lowest-index non-loop edge, switching it positive.

    If ``trace`` is a list, one ``(depth, case, graph)`` record per step is appended.
    """
    return _dc(g, trace, 0)


def _dc(g: SignedGraph, trace, depth) -> TriPoly:
    e = next((i for i, (u, v, _) in enumerate(g.edges) if u != v), None)
    if e is None:
        result = ONE
        for x in range(g.vertex_count):
            pos = sum(1 for u, _, s in g.edges if u == x and s > 0)
            neg = sum(1 for u, _, s in g.edges if u == x and s < 0)
            result = result * Y ** pos * bouquet_polynomial(neg)
        if trace is not None:
            trace.append((depth, "bouquets", g))
        return result
    if g.sign(e) < 0:
        g = g.switch(g.edges[e][0])
    if g.is_bridge(e):
        if g.is_circuit_path_edge(e):
            case = "bridge+circuit-path"
            if trace is not None:
                trace.append((depth, case, g))
            return _dc(g.contract(e), trace, depth + 1) + (X - 1) * _dc(g.delete(e), trace, depth + 1)
        if trace is not None:
            trace.append((depth, "bridge", g))
        return X * _dc(g.contract(e), trace, depth + 1)
    if trace is not None:
        trace.append((depth, "ordinary", g))
    return _dc(g.contract(e), trace, depth + 1) + _dc(g.delete(e), trace, depth + 1)


def signed_tutte(g: SignedGraph, method: str = "subset") -> TriPoly:
    if method == "subset":
        return signed_tutte_subset(g)
    if method == "dc":
        return signed_tutte_dc(g)
    if method == "both":
        a, b = signed_tutte_subset(g), signed_tutte_dc(g)
        if a != b:
            raise MethodMismatch(a, b)
        return a
    raise ValueError(f"unknown method {method!r}")


class MethodMismatch(AssertionError):
    def __init__(self, subset: TriPoly, dc: TriPoly):
        self.subset, self.dc = subset, dc
        diff = {}
        for m in set(subset.terms) | set(dc.terms):
            a, b = subset.coeff(*m), dc.coeff(*m)
            if a != b:
                diff[m] = (a, b)
        self.diff = diff
        super().__init__(f"subset and deletion-contraction disagree on {sorted(diff.items())}")


def tutte_via_matroids(g: SignedGraph) -> TriPoly:
    """(Z-1)^{-r_M(E)} S_{M(G), F(S)}."""
    m = cycle_matroid(g)
    return joint_tutte(m, frame_matroid(g)).divide_by_binomial("Z", m.rank_of_ground)


def dichromatic(g: SignedGraph, u, v, poly: TriPoly | None = None) -> Fraction:
    """Q(u, v) = u^k T(u+1, v+1, 1/u + 1)."""
    u, v = Fraction(u), Fraction(v)
    if u == 0:
        raise ZeroDivisionError("the dichromatic specialization needs u != 0")
    t = signed_tutte_subset(g) if poly is None else poly
    k = g.component_profile().k
    return u ** k * t.eval(u + 1, v + 1, 1 / u + 1)


@dataclass(frozen=True)
class RecipeParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "x", "y", "z"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.gamma == 0:
            raise ValueError("gamma must be nonzero")


def recipe_via_polynomial(g: SignedGraph, p: RecipeParams, poly: TriPoly | None = None) -> Fraction:
    if p.alpha == 0 or p.beta == 0:
        raise ZeroDivisionError("polynomial route needs alpha and beta nonzero")
    t = signed_tutte_subset(g) if poly is None else poly
    rm, rf, ne = g.cycle_rank(), g.frame_rank(), g.edge_count
    return (
        p.alpha ** rm * p.beta ** (ne - rf) * p.gamma ** (rf - rm)
        * t.eval(p.x / p.alpha, p.y / p.beta, p.z / p.gamma)
    )


def recipe_via_subsets(g: SignedGraph, p: RecipeParams) -> Fraction:
    """Subset expansion valid for all alpha, beta (gamma may carry negative powers)."""
    ne = g.edge_count
    rme, rfe = g.cycle_rank(), g.frame_rank()
    total = Fraction(0)
    for a in range(1 << ne):
        size = bin(a).count("1")
        rm, rf = g.cycle_rank(a), g.frame_rank(a)
        total += (
            p.alpha ** rm
            * p.beta ** (ne - size + rf - rfe)
            * p.gamma ** (rfe - rf - (rme - rm))
            * (p.x - p.alpha) ** (rme - rm)
            * (p.y - p.beta) ** (size - rf)
            * (p.z - p.gamma) ** (rf - rm)
        )
    return total


def recipe_evaluate(g: SignedGraph, p: RecipeParams, poly: TriPoly | None = None) -> Fraction:
    if p.alpha != 0 and p.beta != 0:
        return recipe_via_polynomial(g, p, poly)
    return recipe_via_subsets(g, p)


def flow_recipe(group: FiniteAbelianGroup) -> RecipeParams:
    q = Fraction(group.order, group.two_g_order)
    return RecipeParams(1, -1, -1, 0, group.order - 1, q - 1)


def potential_difference_recipe(group: FiniteAbelianGroup) -> RecipeParams:
    n, d = group.order, group.two_g_order
    return RecipeParams(0, 1, d, n, 1, d)


def tension_recipe(group: FiniteAbelianGroup) -> RecipeParams:
    n = group.order
    return RecipeParams(0, 1, n, n, 1, n)


# -- counting evaluation points ----------------------------------------

MEANINGS = (
    "nz_flows",
    "proper_G_colorings",
    "nz_potential_differences",
    "tensions_offcoset",
    "dichromatic",
    "proper_n_colorings",
    "proper_nonzero_n_colorings",
)


@dataclass(frozen=True)
class EvaluationPoint:
    meaning: str
    x: Fraction
    y: Fraction
    z: Fraction
    prefactor: Fraction

    def apply(self, poly: TriPoly) -> Fraction:
        return self.prefactor * poly.eval(self.x, self.y, self.z)


def table1_point(
    meaning: str,
    g: SignedGraph,
    group: FiniteAbelianGroup | None = None,
    n: int | None = None,
    u=None,
    v=None,
) -> EvaluationPoint:
    F = Fraction
    k, kb, ku = g.component_profile()
    nv, ne = g.vertex_count, g.edge_count
    if meaning in ("nz_flows", "proper_G_colorings", "nz_potential_differences", "tensions_offcoset"):
        if group is None:
            raise ValueError(f"{meaning} needs a group")
        order, two = group.order, group.two_g_order
        if meaning == "nz_flows":
            return EvaluationPoint(meaning, F(0), F(1 - order), 1 - F(order, two), F((-1) ** (ne - nv + k)))
        if meaning == "proper_G_colorings":
            return EvaluationPoint(meaning, F(1 - order), F(0), 1 - F(1, two), F((-1) ** (nv - k) * order ** k))
        pre = F((-1) ** (nv - k) * two ** ku)
        z = 1 - F(1, two) if meaning == "nz_potential_differences" else F(1)
        return EvaluationPoint(meaning, F(1 - order), F(0), z, pre)
    if meaning == "dichromatic":
        u, v = F(u), F(v)
        if u == 0:
            raise ZeroDivisionError("u must be nonzero")
        return EvaluationPoint(meaning, u + 1, v + 1, 1 / u + 1, u ** k)
    if meaning in ("proper_n_colorings", "proper_nonzero_n_colorings"):
        if n is None or n < 0:
            raise ValueError(f"{meaning} needs n >= 0")
        sign = (-1) ** (nv - k)
        if meaning == "proper_n_colorings":
            return EvaluationPoint(meaning, F(-2 * n), F(0), F(2 * n, 2 * n + 1), F(sign * (2 * n + 1) ** k))
        return EvaluationPoint(meaning, F(1 - 2 * n), F(0), F(1), F(sign * (2 * n) ** k))
    raise ValueError(f"unknown meaning {meaning!r}; choose from {MEANINGS}")


def as_count(value: Fraction, what: str = "count") -> int:
    """An evaluation that must be a nonnegative integer."""
    if value.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {value}")
    if value < 0:
        raise ArithmeticError(f"{what} evaluated to negative {value}")
    return int(value)


def count_via_polynomial(meaning: str, g: SignedGraph, poly: TriPoly | None = None, **kw) -> int:
    t = signed_tutte_subset(g) if poly is None else poly
    return as_count(table1_point(meaning, g, **kw).apply(t), meaning)


def nz_tensions_two_point(g: SignedGraph, group: FiniteAbelianGroup, poly: TriPoly | None = None) -> int:
    """Nowhere-zero tensions of a connected unbalanced signed graph from two evaluations."""
    t = signed_tutte_subset(g) if poly is None else poly
    k, _, ku = g.component_profile()
    if k != 1 or ku != 1:
        raise ValueError("the two-point formula applies to connected unbalanced graphs")
    order, two = group.order, group.two_g_order
    r = g.vertex_count - k
    val = (-1) ** r * two * (
        t.eval(1 - order, 0, 1 - Fraction(1, two))
        + (Fraction(order, two) - 1) * t.eval(1 - order, 0, 1)
    )
    return as_count(val, "nowhere-zero tensions")
