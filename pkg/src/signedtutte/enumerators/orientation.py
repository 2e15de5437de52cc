"""Orientations of half-edges compatible with a signature."""
from __future__ import annotations

from ..graph import SignedGraph

Orientation = tuple[tuple[int, int], ...]


def default_orientation(g: SignedGraph) -> Orientation:
    """(+1, -sign) per edge: positive edges and loops get (+1, -1), negative ones (+1, +1).

    Side 0 is the first listed endpoint, side 1 the second (both sides of a loop sit at
    the same vertex).
    """
    return tuple((1, -s) for _, _, s in g.edges)


def is_compatible(g: SignedGraph, omega: Orientation) -> bool:
    return len(omega) == g.edge_count and all(
        s == -a * b for (_, _, s), (a, b) in zip(g.edges, omega)
    )


def flip_edge(omega: Orientation, e: int) -> Orientation:
    a, b = omega[e]
    return omega[:e] + ((-a, -b),) + omega[e + 1:]


def switch_orientation(g: SignedGraph, omega: Orientation, v: int) -> Orientation:
    """Negate every half-edge at ``v``; compatible with ``g.switch(v)``."""
    out = []
    for (a, b, _), (wa, wb) in zip(g.edges, omega):
        out.append((-wa if a == v else wa, -wb if b == v else wb))
    return tuple(out)


def half_edge_side(g: SignedGraph, e: int, vertex: int) -> int:
    u, v, _ = g.edges[e]
    if vertex == u:
        return 0
    if vertex == v:
        return 1
    raise ValueError(f"vertex {vertex} is not an endpoint of edge {e}")
