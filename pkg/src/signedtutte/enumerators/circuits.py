"""Cycles, frame-matroid circuits, circuit walks and their coefficient vectors."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from ..graph import SignedGraph
from .orientation import Orientation, default_orientation, half_edge_side

Step = tuple[int, int]  # (departure vertex, edge)


@dataclass(frozen=True)
class Cycle:
    """A simple closed walk given by its steps; a loop is a one-step cycle."""

    steps: tuple[Step, ...]
    sign: int

    @cached_property
    def mask(self) -> int:
        m = 0
        for _, e in self.steps:
            m |= 1 << e
        return m

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(v for v, _ in self.steps)

    @property
    def balanced(self) -> bool:
        return self.sign > 0

    def rotated_to(self, v: int) -> tuple[Step, ...]:
        i = next(i for i, (x, _) in enumerate(self.steps) if x == v)
        return self.steps[i:] + self.steps[:i]


@dataclass(frozen=True)
class Circuit:
    kind: str  # "balanced_cycle" | "tight_handcuff" | "loose_handcuff"
    cycles: tuple[Cycle, ...]
    path: tuple[Step, ...] = ()

    @cached_property
    def mask(self) -> int:
        m = 0
        for c in self.cycles:
            m |= c.mask
        for _, e in self.path:
            m |= 1 << e
        return m

    @property
    def path_edges(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.path)


@dataclass(frozen=True)
class CircuitWalk:
    """Closed walk as (departure vertex, edge, departure side) steps."""

    steps: tuple[tuple[int, int, int], ...]

    def sign(self, g: SignedGraph) -> int:
        s = 1
        for _, e, _ in self.steps:
            s *= g.sign(e)
        return s


def _other(g: SignedGraph, e: int, x: int) -> int:
    u, v, _ = g.edges[e]
    return v if x == u else u


def simple_cycles(g: SignedGraph, mask: Optional[int] = None) -> list[Cycle]:
    """Every simple cycle (loops, digons and longer) of the subgraph on ``mask``, once each."""
    if mask is None:
        mask = g.full_mask
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    out: list[Cycle] = []
    for e, (u, v, s) in enumerate(g.edges):
        if not mask >> e & 1:
            continue
        if u == v:
            out.append(Cycle(((u, e),), s))
        else:
            adj[u].append((e, v))
            adj[v].append((e, u))
    seen = {c.mask for c in out}

    def dfs(start, x, steps, used, visited, sign):
        for e, y in adj[x]:
            if used >> e & 1:
                continue
            if y == start:
                m = used | 1 << e
                if m not in seen:
                    seen.add(m)
                    out.append(Cycle(tuple(steps) + ((x, e),), sign * g.sign(e)))
            elif y > start and y not in visited:
                visited.add(y)
                steps.append((x, e))
                dfs(start, y, steps, used | 1 << e, visited, sign * g.sign(e))
                steps.pop()
                visited.discard(y)

    for s in range(g.vertex_count):
        dfs(s, s, [], 0, {s}, 1)
    return out


def _connecting_paths(g: SignedGraph, mask: int, c1: Cycle, c2: Cycle) -> list[tuple[Step, ...]]:
    """Simple paths from V(c1) to V(c2) with no interior vertex on either cycle."""
    ends, blocked = c2.vertices, c1.vertices | c2.vertices
    paths = []

    def dfs(x, steps, visited):
        for e, (u, v, _) in enumerate(g.edges):
            if not mask >> e & 1 or u == v or x not in (u, v):
                continue
            y = _other(g, e, x)
            if y in ends:
                paths.append(tuple(steps) + ((x, e),))
            elif y not in blocked and y not in visited:
                visited.add(y)
                steps.append((x, e))
                dfs(y, steps, visited)
                steps.pop()
                visited.discard(y)

    for a in sorted(c1.vertices):
        dfs(a, [], set())
    return paths


def enumerate_circuits(g: SignedGraph, mask: Optional[int] = None) -> list[Circuit]:
    """All circuits of the frame matroid restricted to ``mask``."""
    if mask is None:
        mask = g.full_mask
    cycles = simple_cycles(g, mask)
    out = [Circuit("balanced_cycle", (c,)) for c in cycles if c.balanced]
    unbalanced = [c for c in cycles if not c.balanced]
    for i, c1 in enumerate(unbalanced):
        for c2 in unbalanced[i + 1:]:
            common = c1.vertices & c2.vertices
            if len(common) == 1:
                out.append(Circuit("tight_handcuff", (c1, c2)))
            elif not common:
                for p in _connecting_paths(g, mask, c1, c2):
                    out.append(Circuit("loose_handcuff", (c1, c2), p))
    return out


def _with_sides(g: SignedGraph, steps) -> tuple[tuple[int, int, int], ...]:
    return tuple((x, e, 0 if g.is_loop(e) else half_edge_side(g, e, x)) for x, e in steps)


def circuit_walk(g: SignedGraph, c: Circuit) -> CircuitWalk:
    """Closed walk around ``c``; a loose handcuff's path is walked out and back."""
    if c.kind == "balanced_cycle":
        return CircuitWalk(_with_sides(g, c.cycles[0].steps))
    c1, c2 = c.cycles
    if c.kind == "tight_handcuff":
        (v,) = c1.vertices & c2.vertices
        return CircuitWalk(_with_sides(g, c1.rotated_to(v) + c2.rotated_to(v)))
    a = c.path[0][0]
    b = _other(g, c.path[-1][1], c.path[-1][0])
    back = tuple((_other(g, e, x), e) for x, e in reversed(c.path))
    steps = c1.rotated_to(a) + c.path + c2.rotated_to(b) + back
    return CircuitWalk(_with_sides(g, steps))


def reversed_walk(g: SignedGraph, w: CircuitWalk) -> CircuitWalk:
    """The same walk traversed backwards; loops are left through their other side."""
    steps = w.steps
    out = []
    for i in range(len(steps) - 1, -1, -1):
        arrival = steps[(i + 1) % len(steps)][0]
        x, e, side = steps[i]
        out.append((arrival, e, 1 - side if g.is_loop(e) else half_edge_side(g, e, arrival)))
    return CircuitWalk(tuple(out))


def walk_coefficients(g: SignedGraph, w: CircuitWalk, omega: Orientation | None = None) -> list[int]:
    """Per-edge integer coefficient of f(e) in the walk's sign-twisted sum."""
    omega = default_orientation(g) if omega is None else omega
    coef = [0] * g.edge_count
    prefix = 1
    for _, e, side in w.steps:
        coef[e] += omega[e][side] * prefix
        prefix *= g.sign(e)
    return coef


def positive_closed_walk_vectors(
    g: SignedGraph, max_length: int, omega: Orientation | None = None
) -> set[tuple[int, ...]]:
    """Distinct coefficient vectors of positive closed walks with 1..max_length steps."""
    omega = default_orientation(g) if omega is None else omega
    moves: list[list[tuple[int, int, int]]] = [[] for _ in range(g.vertex_count)]
    for e, (u, v, _) in enumerate(g.edges):
        if u == v:
            moves[u] += [(e, 0, u), (e, 1, u)]
        else:
            moves[u].append((e, 0, v))
            moves[v].append((e, 1, u))
    zero = (0,) * g.edge_count
    found: set[tuple[int, ...]] = set()
    for start in range(g.vertex_count):
        layer = {(start, 1, zero)}
        for _ in range(max_length):
            nxt = set()
            for x, prefix, coef in layer:
                for e, side, y in moves[x]:
                    c = list(coef)
                    c[e] += omega[e][side] * prefix
                    state = (y, prefix * g.sign(e), tuple(c))
                    nxt.add(state)
                    if y == start and state[1] == 1:
                        found.add(state[2])
            layer = nxt
    return found
