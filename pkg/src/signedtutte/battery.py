"""Exhaustive small signed multigraphs for cross-checking."""
from __future__ import annotations

import itertools
from typing import Iterator

from .graph import SignedGraph


def battery(max_vertices: int = 3, max_edges: int = 4, min_vertices: int = 1) -> Iterator[SignedGraph]:
    """Every multiset of at most ``max_edges`` edges (loops and parallels allowed)
    on 1..``max_vertices`` vertices, under every sign pattern.

    No deduplication up to isomorphism or switching; repeats are harmless re-checks.
    """
    for n in range(min_vertices, max_vertices + 1):
        slots = [(u, v) for u in range(n) for v in range(u, n)]
        for m in range(max_edges + 1):
            for chosen in itertools.combinations_with_replacement(slots, m):
                for signs in itertools.product((1, -1), repeat=m):
                    yield SignedGraph(n, tuple((u, v, s) for (u, v), s in zip(chosen, signs)))


def battery_list(max_vertices: int = 3, max_edges: int = 4) -> list[SignedGraph]:
    return list(battery(max_vertices, max_edges))


def canonical_key(g: SignedGraph) -> tuple:
    """Isomorphism-invariant key: the least sorted edge list over all vertex relabelings."""
    return (g.vertex_count, min(
        tuple(sorted((min(p[u], p[v]), max(p[u], p[v]), s) for u, v, s in g.edges))
        for p in itertools.permutations(range(g.vertex_count))
    ))


def graphs_up_to_isomorphism(max_edges: int, max_vertices: int | None = None) -> list[SignedGraph]:
    """One signed multigraph per isomorphism class with at most ``max_edges`` edges and
    no isolated vertex (plus the one-vertex edgeless graph).

    Without isolated vertices a graph has at most ``2 * max_edges`` vertices; pass
    ``max_vertices`` to cap that.
    """
    cap = 2 * max_edges if max_vertices is None else max_vertices
    seen = set()
    out = [SignedGraph(1, ())]
    for g in battery(max(cap, 1), max_edges):
        if not g.edges or len({x for u, v, _ in g.edges for x in (u, v)}) != g.vertex_count:
            continue
        key = canonical_key(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out
