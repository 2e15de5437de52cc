"""Proper colorings of signed graphs: Zaslavsky colorings, group colorings, (X, iota)-colorings."""
from __future__ import annotations


import numpy as np

from ..graph import SignedGraph
from ..group import FiniteAbelianGroup
from ._assign import assignment_chunks, check_budget, CHUNK


def _vertex_maps(size: int, n: int, budget: int | None):
    """Chunks of all maps V -> {0..size-1} as (N, n) index arrays."""
    total = size ** n
    check_budget(total, budget)
    powers = size ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, CHUNK):
        codes = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
        yield (codes[:, None] // powers[None, :]) % size


def count_xiota_colorings(
    g: SignedGraph, x_size: int, iota, budget: int | None = None
) -> int:
    """Maps c: V -> X with c(u) != c(v) on positive edges and c(u) != iota(c(v)) on negative ones."""
    iota = np.asarray(iota, dtype=np.int64)
    if iota.shape != (x_size,) or sorted(iota.tolist()) != list(range(x_size)):
        raise ValueError("iota must be a permutation of range(x_size)")
    if not np.array_equal(iota[iota], np.arange(x_size)):
        raise ValueError("iota must be an involution")
    total = 0
    for c in _vertex_maps(x_size, g.vertex_count, budget):
        ok = np.ones(c.shape[0], dtype=bool)
        for u, v, s in g.edges:
            target = c[:, v] if s > 0 else iota[c[:, v]]
            ok &= c[:, u] != target
        total += int(ok.sum())
    return total


def count_all_improper(g: SignedGraph, x_size: int, iota, budget: int | None = None) -> int:
    """Maps with c(u) == c(v) on positive edges and c(u) == iota(c(v)) on negative ones."""
    iota = np.asarray(iota, dtype=np.int64)
    total = 0
    for c in _vertex_maps(x_size, g.vertex_count, budget):
        ok = np.ones(c.shape[0], dtype=bool)
        for u, v, s in g.edges:
            ok &= c[:, u] == (c[:, v] if s > 0 else iota[c[:, v]])
        total += int(ok.sum())
    return total


def all_improper_formula(g: SignedGraph, x_size: int, fixed_points: int) -> int:
    """t^{k_u} |X|^{k_b}, t the number of fixed points of iota."""
    _, kb, ku = g.component_profile()
    return fixed_points ** ku * x_size ** kb


def zaslavsky_colors(n: int, nonzero: bool) -> list[int]:
    colors = list(range(-n, n + 1))
    return [c for c in colors if c] if nonzero else colors


def count_colorings_zaslavsky(
    g: SignedGraph, n: int, nonzero: bool = False, budget: int | None = None
) -> int:
    """Brute force over colors {0, +-1, ..., +-n} (0 omitted when ``nonzero``) with f(u) != sign*f(v)."""
    colors = np.array(zaslavsky_colors(n, nonzero), dtype=np.int64)
    total = 0
    for idx in _vertex_maps(len(colors), g.vertex_count, budget):
        f = colors[idx]
        ok = np.ones(f.shape[0], dtype=bool)
        for u, v, s in g.edges:
            ok &= f[:, u] != s * f[:, v]
        total += int(ok.sum())
    return total


def chromatic_subset(g: SignedGraph, t: int, balanced_only: bool = False) -> int:
    """sum over A of (-1)^{|A|} t^{k_b(A)}, optionally restricted to balanced A."""
    total = 0
    for a in range(1 << g.edge_count):
        _, kb, ku = g.component_profile(a)
        if balanced_only and ku:
            continue
        total += (-1) ** bin(a).count("1") * t ** kb
    return total


def count_group_colorings(
    g: SignedGraph, group: FiniteAbelianGroup, budget: int | None = None
) -> int:
    """Maps c: V -> G with c(u) != sign*c(v) for every edge."""
    total = 0
    for _, res in assignment_chunks(group, g.vertex_count, budget):
        ok = np.ones(res.shape[0], dtype=bool)
        for u, v, s in g.edges:
            diff = (res[:, u] - s * res[:, v]) % group.moduli_array if group.moduli else res[:, u]
            ok &= diff.any(axis=1)
        total += int(ok.sum())
    return total


def negation_involution(group: FiniteAbelianGroup) -> list[int]:
    """x -> -x as a permutation of element indices."""
    return [group.index_of(group.neg(x)) for x in group.elements()]


def involutions(size: int):
    """All involutions of range(size), as permutation lists."""
    def build(rest):
        if not rest:
            yield {}
            return
        a, tail = rest[0], rest[1:]
        for sub in build(tail):
            yield {a: a, **sub}
        for i, b in enumerate(tail):
            for sub in build(tail[:i] + tail[i + 1:]):
                yield {a: b, b: a, **sub}

    for mapping in build(list(range(size))):
        yield [mapping[i] for i in range(size)]


def fixed_point_count(iota) -> int:
    return sum(1 for i, j in enumerate(iota) if i == j)


__all__ = [
    "count_xiota_colorings",
    "count_all_improper",
    "all_improper_formula",
    "count_colorings_zaslavsky",
    "chromatic_subset",
    "count_group_colorings",
    "negation_involution",
    "involutions",
    "fixed_point_count",
    "zaslavsky_colors",
]
