"""Group-valued flows: brute force, closed form and subset expansion."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..graph import SignedGraph
from ..group import FiniteAbelianGroup
from ._assign import all_zero, assignment_chunks, combine, nowhere_zero
from .orientation import Orientation, default_orientation


def incidence_matrix(g: SignedGraph, omega: Orientation | None = None) -> np.ndarray:
    """|V| x |E| matrix of half-edge orientations; a loop adds both of its sides."""
    omega = default_orientation(g) if omega is None else omega
    m = np.zeros((g.vertex_count, g.edge_count), dtype=np.int64)
    for e, ((u, v, _), (wu, wv)) in enumerate(zip(g.edges, omega)):
        m[u, e] += wu
        m[v, e] += wv
    return m


def count_flows(
    g: SignedGraph,
    group: FiniteAbelianGroup,
    nowhere_zero_only: bool = False,
    omega: Orientation | None = None,
    budget: int | None = None,
) -> int:
    """Brute force: maps f: E -> G obeying Kirchhoff's law at every vertex."""
    kirchhoff = incidence_matrix(g, omega)
    total = 0
    for _, res in assignment_chunks(group, g.edge_count, budget):
        ok = all_zero(combine(res, kirchhoff, group))
        if nowhere_zero_only:
            ok &= nowhere_zero(res)
        total += int(ok.sum())
    return total


def count_flows_closed_form(g: SignedGraph, group: FiniteAbelianGroup) -> int:
    """|G|^{|E|-|V|+k_b} (|G|/|2G|)^{k_u}."""
    _, kb, ku = g.component_profile()
    exponent = g.edge_count - g.vertex_count + kb
    value = Fraction(group.order) ** exponent * Fraction(group.order, group.two_g_order) ** ku
    assert value.denominator == 1
    return int(value)


def count_nz_flows_subset(g: SignedGraph, group: FiniteAbelianGroup) -> int:
    """Inclusion-exclusion over edge subsets A of the flow counts of Sigma restricted to A."""
    n, ne = g.vertex_count, g.edge_count
    order = Fraction(group.order)
    ratio = Fraction(group.order, group.two_g_order)
    total = Fraction(0)
    for a in range(1 << ne):
        size = bin(a).count("1")
        _, kb, ku = g.component_profile(a)
        total += (-1) ** (ne - size) * order ** (size - n + kb) * ratio ** ku
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"subset sum for nowhere-zero flows gave {total}")
    return int(total)
