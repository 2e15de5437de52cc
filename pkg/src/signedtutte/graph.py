"""Signed multigraphs: switching, balance, deletion/contraction and edge roles.

Vertices are ``0..n-1`` and an edge is identified by its position in the
edge list.  Edge subsets are plain ``int`` bitmasks over edge indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

MAX_EDGES = 62


class GraphError(ValueError):
    pass


class ComponentProfile(NamedTuple):
    k: int
    k_b: int
    k_u: int


@dataclass(frozen=True)
class EdgeClass:
    graph_role: str  # "bridge" | "loop" | "ordinary"
    frame_role: str  # "coloop" | "loop" | "ordinary"
    circuit_path_edge: bool


@dataclass(frozen=True)
class SignedGraph:
    vertex_count: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        edges = tuple((int(u), int(v), int(s)) for u, v, s in self.edges)
        if len(edges) > MAX_EDGES:
            raise GraphError(f"at most {MAX_EDGES} edges are supported, got {len(edges)}")
        for i, (u, v, s) in enumerate(edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge {i} has an endpoint outside 0..{self.vertex_count - 1}")
            if s not in (1, -1):
                raise GraphError(f"edge {i} has sign {s}; expected +1 or -1")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable) -> "SignedGraph":
        return cls(vertex_count, tuple(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.edges)) - 1

    def __repr__(self):
        body = ", ".join(f"({u},{v},{'+' if s > 0 else '-'})" for u, v, s in self.edges)
        return f"SignedGraph({self.vertex_count}, [{body}])"

    def is_loop(self, e: int) -> bool:
        u, v, _ = self.edges[e]
        return u == v

    def sign(self, e: int) -> int:
        return self.edges[e][2]

    # -- balance ----------------------------------------------------------

    def _potentials(self, mask: int):
        """Union-find with parity; returns (root-of, parity-to-root, unbalanced roots)."""
        n = self.vertex_count
        parent = list(range(n))
        parity = [1] * n
        bad = [False] * n

        def find(x):
            p = 1
            path = []
            while parent[x] != x:
                path.append(x)
                p *= parity[x]
                x = parent[x]
            # path compression keeping parity relative to root
            acc = p
            for y in path:
                old = parity[y]
                parity[y] = acc
                parent[y] = x
                acc *= old
            return x, p

        m = mask
        e = 0
        while m:
            if m & 1:
                u, v, s = self.edges[e]
                ru, pu = find(u)
                rv, pv = find(v)
                if ru == rv:
                    if pu * pv != s:
                        bad[ru] = True
                else:
                    parent[rv] = ru
                    parity[rv] = pu * pv * s
                    bad[ru] = bad[ru] or bad[rv]
            m >>= 1
            e += 1
        return find, bad

    def component_profile(self, mask: int | None = None) -> ComponentProfile:
        """Counts (k, k_b, k_u) of the spanning subgraph with edge set ``mask``."""
        if mask is None:
            mask = self.full_mask
        self._check_mask(mask)
        find, bad = self._potentials(mask)
        k = ku = 0
        for x in range(self.vertex_count):
            r, _ = find(x)
            if r == x:
                k += 1
                ku += bad[x]
        return ComponentProfile(k, k - ku, ku)

    def vertex_potentials(self, mask: int | None = None) -> list[int]:
        """A +-1 potential per vertex such that every balanced edge obeys s(u)s(v)=sign."""
        if mask is None:
            mask = self.full_mask
        find, _ = self._potentials(mask)
        return [find(x)[1] for x in range(self.vertex_count)]

    def is_balanced(self, mask: int | None = None) -> bool:
        return self.component_profile(mask).k_u == 0

    def components(self, mask: int | None = None) -> list[tuple[list[int], int]]:
        """Connected components as (sorted vertex list, edge mask), ordered by least vertex."""
        if mask is None:
            mask = self.full_mask
        find, _ = self._potentials(mask)
        groups: dict[int, list[int]] = {}
        for x in range(self.vertex_count):
            groups.setdefault(find(x)[0], []).append(x)
        out = []
        for verts in sorted(groups.values()):
            vs = set(verts)
            emask = 0
            for e, (u, _, _) in enumerate(self.edges):
                if mask >> e & 1 and u in vs:
                    emask |= 1 << e
            out.append((verts, emask))
        return out

    def _check_mask(self, mask: int):
        if mask < 0 or mask >> len(self.edges):
            raise GraphError("edge subset has bits beyond the edge count")

    # -- rank functions ---------------------------------------------------

    def cycle_rank(self, mask: int | None = None) -> int:
        return self.vertex_count - self.component_profile(mask).k

    def frame_rank(self, mask: int | None = None) -> int:
        return self.vertex_count - self.component_profile(mask).k_b

    # -- transformations --------------------------------------------------

    def switch(self, v: int) -> "SignedGraph":
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"no vertex {v}")
        edges = tuple(
            (a, b, -s if (a == v) != (b == v) else s) for a, b, s in self.edges
        )
        return SignedGraph(self.vertex_count, edges)

    def switch_set(self, vertices: Iterable[int]) -> "SignedGraph":
        g = self
        for v in vertices:
            g = g.switch(v)
        return g

    def delete(self, e: int) -> "SignedGraph":
        self._check_edge(e)
        return SignedGraph(self.vertex_count, self.edges[:e] + self.edges[e + 1:])

    def contract(self, e: int) -> "SignedGraph":
        """Contract a positive edge; the larger endpoint merges into the smaller."""
        self._check_edge(e)
        u, v, s = self.edges[e]
        if s != 1:
            raise GraphError("only positive edges can be contracted; switch first")
        if u == v:
            return self.delete(e)
        keep, gone = min(u, v), max(u, v)

        def relabel(x):
            if x == gone:
                x = keep
            return x - 1 if x > gone else x

        rest = self.edges[:e] + self.edges[e + 1:]
        return SignedGraph(
            self.vertex_count - 1, tuple((relabel(a), relabel(b), t) for a, b, t in rest)
        )

    def permute_edges(self, order: list[int]) -> "SignedGraph":
        return SignedGraph(self.vertex_count, tuple(self.edges[i] for i in order))

    def disjoint_union(self, other: "SignedGraph") -> "SignedGraph":
        n = self.vertex_count
        shifted = tuple((a + n, b + n, s) for a, b, s in other.edges)
        return SignedGraph(n + other.vertex_count, self.edges + shifted)

    def subgraph(self, mask: int) -> "SignedGraph":
        """Spanning subgraph keeping the edges in ``mask`` (edge order preserved)."""
        self._check_mask(mask)
        return SignedGraph(
            self.vertex_count, tuple(ed for i, ed in enumerate(self.edges) if mask >> i & 1)
        )

    def induced_component(self, vertices: list[int], mask: int) -> "SignedGraph":
        index = {x: i for i, x in enumerate(vertices)}
        return SignedGraph(
            len(vertices),
            tuple(
                (index[a], index[b], s)
                for i, (a, b, s) in enumerate(self.edges)
                if mask >> i & 1
            ),
        )

    def _check_edge(self, e: int):
        if not 0 <= e < len(self.edges):
            raise GraphError(f"no edge {e}")

    # -- edge roles -------------------------------------------------------

    def is_bridge(self, e: int) -> bool:
        self._check_edge(e)
        if self.is_loop(e):
            return False
        full = self.full_mask
        return self.component_profile(full & ~(1 << e)).k == self.component_profile(full).k + 1

    def is_circuit_path_edge(self, e: int) -> bool:
        """True iff ``e`` is a bridge whose two sides both contain an unbalanced cycle."""
        if not self.is_bridge(e):
            return False
        u, v, _ = self.edges[e]
        rest = self.full_mask & ~(1 << e)
        find, bad = self._potentials(rest)
        return bad[find(u)[0]] and bad[find(v)[0]]

    def classify_edge(self, e: int) -> EdgeClass:
        self._check_edge(e)
        if self.is_loop(e):
            graph_role = "loop"
        elif self.is_bridge(e):
            graph_role = "bridge"
        else:
            graph_role = "ordinary"
        full = self.full_mask
        if self.frame_rank(1 << e) == 0:
            frame_role = "loop"
        elif self.frame_rank(full & ~(1 << e)) == self.frame_rank(full) - 1:
            frame_role = "coloop"
        else:
            frame_role = "ordinary"
        return EdgeClass(graph_role, frame_role, self.is_circuit_path_edge(e))


def handcuff() -> SignedGraph:
    """Two vertices joined by a positive bridge, with a negative loop at each end."""
    return SignedGraph(2, ((0, 1, 1), (0, 0, -1), (1, 1, -1)))


def bouquet(negative_loops: int, positive_loops: int = 0) -> SignedGraph:
    edges = [(0, 0, -1)] * negative_loops + [(0, 0, 1)] * positive_loops
    return SignedGraph(1, tuple(edges))


def path_with_negative_loops(length: int) -> SignedGraph:
    """Path on ``length`` vertices, each carrying one negative loop."""
    edges = [(i, i + 1, 1) for i in range(length - 1)]
    edges += [(i, i, -1) for i in range(length)]
    return SignedGraph(length, tuple(edges))
