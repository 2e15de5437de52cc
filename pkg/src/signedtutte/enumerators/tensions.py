"""Group-valued tensions and potential differences of signed graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from ..graph import GraphError, SignedGraph
from ..group import Element, FiniteAbelianGroup
from ._assign import all_zero, assignment_chunks, check_budget, combine, in_two_g, nowhere_zero
from .circuits import (
    circuit_walk,
    enumerate_circuits,
    reversed_walk,
    simple_cycles,
    walk_coefficients,
)
from .orientation import Orientation, default_orientation


def tension_constraints(
    g: SignedGraph, omega: Orientation | None = None, reverse: bool = False
) -> np.ndarray:
    """One row of walk coefficients per circuit (shape: circuits x |E|)."""
    rows = []
    for c in enumerate_circuits(g):
        w = circuit_walk(g, c)
        if reverse:
            w = reversed_walk(g, w)
        rows.append(walk_coefficients(g, w, omega))
    return np.array(rows, dtype=np.int64).reshape(len(rows), g.edge_count)


def unbalanced_cycle_indicators(g: SignedGraph) -> np.ndarray:
    rows = []
    for c in simple_cycles(g):
        if not c.balanced:
            rows.append([c.mask >> e & 1 for e in range(g.edge_count)])
    return np.array(rows, dtype=np.int64).reshape(len(rows), g.edge_count)


def _as_residues(group: FiniteAbelianGroup, f: Sequence[Element]) -> np.ndarray:
    return np.array([group.element(x) for x in f], dtype=np.int64).reshape(1, len(f), len(group.moduli))


def is_tension(
    g: SignedGraph, group: FiniteAbelianGroup, f: Sequence[Element], omega: Orientation | None = None
) -> bool:
    res = _as_residues(group, f)
    return bool(all_zero(combine(res, tension_constraints(g, omega), group))[0])


def is_potential_difference(
    g: SignedGraph, group: FiniteAbelianGroup, f: Sequence[Element], omega: Orientation | None = None
) -> bool:
    if not is_tension(g, group, f, omega):
        return False
    res = _as_residues(group, f)
    sums = combine(res, unbalanced_cycle_indicators(g), group)
    return bool(in_two_g(sums, group).all())


def _coset_index(group: FiniteAbelianGroup, values: np.ndarray) -> np.ndarray:
    """(N, r, rank) -> (N, r) index of the coset of 2G, in ``coset_reps`` order."""
    idx = np.zeros(values.shape[:2], dtype=np.int64)
    for i, p in enumerate(group.parity_moduli_array):
        idx = idx * p + values[:, :, i] % p
    return idx


@dataclass
class TensionCounts:
    tensions: int
    potential_differences: int
    nz_tensions: int
    nz_potential_differences: int
    # nowhere-zero tensions per coset u + 2G of the common unbalanced-cycle sum;
    # only for connected unbalanced graphs
    by_coset: Optional[dict[Element, int]] = None
    # for disconnected graphs: the counts of each component
    components: list["TensionCounts"] = field(default_factory=list)


def scan_tensions(
    g: SignedGraph,
    group: FiniteAbelianGroup,
    omega: Orientation | None = None,
    reverse: bool = False,
    budget: int | None = None,
    collect: bool = False,
):
    """Brute force over G^E; returns (TensionCounts, tension codes, PD codes)."""
    cons = tension_constraints(g, omega, reverse)
    cyc = unbalanced_cycle_indicators(g)
    k, _, ku = g.component_profile()
    classify = k == 1 and ku == 1
    reps = group.coset_reps()
    by = np.zeros(len(reps), dtype=np.int64)
    t0 = p0 = t = p = 0
    tcodes: set[int] = set()
    pcodes: set[int] = set()
    for codes, res in assignment_chunks(group, g.edge_count, budget):
        ten = all_zero(combine(res, cons, group))
        sums = combine(res, cyc, group)
        pd = ten & in_two_g(sums, group).all(axis=1)
        nz = nowhere_zero(res)
        t0 += int(ten.sum())
        p0 += int(pd.sum())
        t += int((ten & nz).sum())
        p += int((pd & nz).sum())
        if collect:
            tcodes.update(codes[ten].tolist())
            pcodes.update(codes[pd].tolist())
        if classify:
            sel = ten & nz
            cosets = _coset_index(group, sums[sel])
            if not (cosets == cosets[:, :1]).all():
                raise AssertionError("a tension has unbalanced-cycle sums in different cosets of 2G")
            by += np.bincount(cosets[:, 0], minlength=len(reps))
    counts = TensionCounts(t0, p0, t, p)
    if classify:
        counts.by_coset = {r: int(n) for r, n in zip(reps, by)}
    return counts, tcodes, pcodes


def count_tensions(
    g: SignedGraph,
    group: FiniteAbelianGroup,
    omega: Orientation | None = None,
    reverse: bool = False,
    budget: int | None = None,
) -> TensionCounts:
    counts, _, _ = scan_tensions(g, group, omega, reverse, budget)
    comps = g.components()
    if len(comps) > 1:
        counts.components = [
            count_tensions(g.induced_component(verts, mask), group, budget=budget)
            for verts, mask in comps
        ]
    return counts


# -- connected bases --------------------------------------------------------


@dataclass(frozen=True)
class ConnectedBasis:
    edges: tuple[int, ...]

    @property
    def mask(self) -> int:
        m = 0
        for e in self.edges:
            m |= 1 << e
        return m


def connected_basis(g: SignedGraph) -> ConnectedBasis:
    """Spanning forest (lowest-index edges first) plus, per unbalanced component,
    the first edge closing an unbalanced cycle."""
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    mask = 0
    for e, (u, v, _) in enumerate(g.edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru
            mask |= 1 << e
    for e in range(g.edge_count):
        if mask >> e & 1:
            continue
        if g.component_profile(mask | 1 << e).k_u > g.component_profile(mask).k_u:
            mask |= 1 << e
    return ConnectedBasis(tuple(e for e in range(g.edge_count) if mask >> e & 1))


def validate_basis(g: SignedGraph, basis: ConnectedBasis) -> None:
    profile = g.component_profile()
    if len(set(basis.edges)) != len(basis.edges) or any(
        not 0 <= e < g.edge_count for e in basis.edges
    ):
        raise GraphError("basis edges must be distinct valid edge indices")
    if g.component_profile(basis.mask) != profile or len(basis.edges) != g.vertex_count - profile.k_b:
        raise GraphError(
            "not a connected basis: need a spanning tree per component plus one "
            "unbalanced-cycle edge per unbalanced component"
        )


def extension_matrix(
    g: SignedGraph, basis: ConnectedBasis, omega: Orientation | None = None
) -> np.ndarray:
    """Integer |E| x |B| matrix M such that every tension is f = M f_B."""
    validate_basis(g, basis)
    col = {e: i for i, e in enumerate(basis.edges)}
    m = np.zeros((g.edge_count, len(basis.edges)), dtype=np.int64)
    for e in range(g.edge_count):
        if e in col:
            m[e, col[e]] = 1
            continue
        circuits = [c for c in enumerate_circuits(g, basis.mask | 1 << e) if c.mask >> e & 1]
        if len(circuits) != 1:
            raise AssertionError(f"edge {e} has {len(circuits)} fundamental circuits")
        coef = walk_coefficients(g, circuit_walk(g, circuits[0]), omega)
        if coef[e] not in (1, -1):
            raise AssertionError(f"edge {e} has coefficient {coef[e]} in its fundamental circuit")
        for b, i in col.items():
            m[e, i] = -coef[e] * coef[b]
    return m


def extend_tension_from_basis(
    g: SignedGraph,
    group: FiniteAbelianGroup,
    basis: ConnectedBasis,
    values: Sequence[Element],
    omega: Orientation | None = None,
) -> tuple[Element, ...]:
    if len(values) != len(basis.edges):
        raise ValueError("one value per basis edge is required")
    res = _as_residues(group, values)
    full = combine(res, extension_matrix(g, basis, omega), group)[0]
    return tuple(tuple(int(x) for x in row) for row in full)


def scan_basis_tensions(
    g: SignedGraph,
    group: FiniteAbelianGroup,
    basis: ConnectedBasis | None = None,
    omega: Orientation | None = None,
    budget: int | None = None,
    collect: bool = False,
):
    """Enumerate the |G|^|B| tensions generated from a connected basis.

    Returns (total, nowhere-zero count, codes of the full edge functions).
    """
    from ._assign import encode

    basis = connected_basis(g) if basis is None else basis
    ext = extension_matrix(g, basis, omega)
    check_budget(group.order ** len(basis.edges), budget)
    total = nz = 0
    codes: set[int] = set()
    for _, res in assignment_chunks(group, len(basis.edges), budget):
        full = combine(res, ext, group)
        total += full.shape[0]
        nz += int(nowhere_zero(full).sum())
        if collect:
            codes.update(encode(group, full).tolist())
    return total, nz, codes


# -- the difference operator -------------------------------------------------


def delta_matrix(g: SignedGraph, omega: Orientation | None = None) -> np.ndarray:
    """|E| x |V| integer matrix: (delta c)(e) = w(u,e) c(u) + w(v,e) c(v)."""
    omega = default_orientation(g) if omega is None else omega
    m = np.zeros((g.edge_count, g.vertex_count), dtype=np.int64)
    for e, ((u, v, _), (wu, wv)) in enumerate(zip(g.edges, omega)):
        m[e, u] += wu
        m[e, v] += wv
    return m


def delta(
    g: SignedGraph,
    group: FiniteAbelianGroup,
    coloring: Sequence[Element],
    omega: Orientation | None = None,
) -> tuple[Element, ...]:
    if len(coloring) != g.vertex_count:
        raise ValueError("one group element per vertex is required")
    res = _as_residues(group, coloring)
    out = combine(res, delta_matrix(g, omega), group)[0]
    return tuple(tuple(int(x) for x in row) for row in out)


@dataclass
class DeltaStats:
    kernel_size: int
    expected_kernel_size: int
    image_size: int
    potential_difference_count: int
    image_equals_potential_differences: bool

    @property
    def ok(self) -> bool:
        return (
            self.kernel_size == self.expected_kernel_size
            and self.image_equals_potential_differences
        )


def delta_image_stats(
    g: SignedGraph,
    group: FiniteAbelianGroup,
    omega: Orientation | None = None,
    budget: int | None = None,
) -> DeltaStats:
    from ._assign import encode

    d = delta_matrix(g, omega)
    kernel = 0
    image: set[int] = set()
    for _, res in assignment_chunks(group, g.vertex_count, budget):
        out = combine(res, d, group)
        kernel += int(all_zero(out).sum())
        image.update(encode(group, out).tolist())
    _, _, pds = scan_tensions(g, group, omega, budget=budget, collect=True)
    _, kb, ku = g.component_profile()
    expected = group.order ** kb * group.two_torsion_order ** ku
    return DeltaStats(kernel, expected, len(image), len(pds), image == pds)
