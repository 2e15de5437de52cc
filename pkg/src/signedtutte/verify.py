"""Cross-checks of polynomial evaluations against independent enumerators.

Each ``check_*`` function yields :class:`Outcome` records ``(check, expected,
actual)``; :func:`verify_graph` runs them for one graph and a list of groups and
appends them to a :class:`VerifyReport`.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from . import enumerators as en
from .graph import SignedGraph, bouquet, handcuff
from .group import FiniteAbelianGroup
from .matroid import (
    cycle_matroid,
    duality_same_order_holds,
    duality_swapped_holds,
    frame_matroid,
    is_perspective,
    joint_tutte,
    las_vergnas_candidate,
    matroid_tutte,
    rank_gap_profile,
    specialize_to_m1,
    specialize_to_m2,
)
from .poly import TriPoly
from .tutte import (
    MEANINGS,
    RecipeParams,
    count_via_polynomial,
    dichromatic,
    flow_recipe,
    nz_tensions_two_point,
    potential_difference_recipe,
    recipe_evaluate,
    recipe_via_polynomial,
    recipe_via_subsets,
    signed_tutte_dc,
    signed_tutte_subset,
    tension_recipe,
    tutte_via_matroids,
)

log = logging.getLogger(__name__)

ALL_TOPICS = (
    "polynomial", "matroid", "flows", "colorings", "zaslavsky", "xiota",
    "tensions", "delta", "recipe",
)


class Outcome(NamedTuple):
    check: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


def _show(value) -> str:
    """Compact text for report rows; large code sets are summarized."""
    if isinstance(value, (set, frozenset)):
        return f"<{len(value)} functions>"
    if isinstance(value, tuple) and any(isinstance(v, (set, frozenset)) for v in value):
        return "(" + ", ".join(_show(v) for v in value) + ")"
    return str(value)


@dataclass
class CheckRecord:
    check: str
    graph: str
    group: str
    expected: str
    actual: str
    passed: bool


@dataclass
class VerifyReport:
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, outcome: Outcome, g: SignedGraph, group: Optional[FiniteAbelianGroup] = None):
        self.records.append(CheckRecord(
            outcome.check, repr(g), str(group) if group is not None else "",
            _show(outcome.expected), _show(outcome.actual), outcome.passed,
        ))

    def extend(self, other: "VerifyReport"):
        self.records.extend(other.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def sorted_records(self) -> list[CheckRecord]:
        return sorted(self.records, key=lambda r: (r.check, r.graph, r.group))

    def summary(self) -> dict:
        by_check: dict[str, dict[str, int]] = {}
        for r in self.records:
            entry = by_check.setdefault(r.check, {"passed": 0, "failed": 0})
            entry["passed" if r.passed else "failed"] += 1
        return {
            "total": len(self.records),
            "failed": len(self.failures),
            "ok": self.ok,
            "checks": dict(sorted(by_check.items())),
        }

    def to_json(self, include_records: bool = True) -> str:
        data = {"summary": self.summary()}
        if include_records:
            data["records"] = [asdict(r) for r in self.sorted_records()]
        return json.dumps(data, indent=2)

    def render_text(self, max_failures: int = 20) -> str:
        s = self.summary()
        lines = [f"{name}: {c['passed']} passed, {c['failed']} failed" for name, c in s["checks"].items()]
        for r in self.failures[:max_failures]:
            lines.append(
                f"FAIL {r.check} graph={r.graph} group={r.group or '-'} "
                f"expected={r.expected} actual={r.actual}"
            )
        lines.append(f"{s['total']} checks, {s['failed']} failed")
        return "\n".join(lines)


# -- polynomial layer ---------------------------------------------------------


def _switch_all(g: SignedGraph) -> Iterator[SignedGraph]:
    for v in range(g.vertex_count):
        yield g.switch(v)


def check_polynomial(g: SignedGraph, poly: Optional[TriPoly] = None) -> Iterator[Outcome]:
    t = signed_tutte_subset(g) if poly is None else poly
    yield Outcome("poly.subset_vs_dc", t, signed_tutte_dc(g))
    for v, h in enumerate(_switch_all(g)):
        yield Outcome("poly.switching_invariance", t, signed_tutte_subset(h))
    reordered = g.permute_edges(list(reversed(range(g.edge_count))))
    yield Outcome("poly.edge_order_invariance", t, signed_tutte_subset(reordered))
    yield Outcome("poly.edge_order_invariance_dc", t, signed_tutte_dc(reordered))
    for other in (bouquet(1), handcuff()):
        yield Outcome(
            "poly.disjoint_union",
            t * signed_tutte_subset(other),
            signed_tutte_subset(g.disjoint_union(other)),
        )
    yield Outcome("poly.from_matroids", t, tutte_via_matroids(g))
    if g.is_balanced():
        yield Outcome("poly.balanced_is_classical", matroid_tutte(cycle_matroid(g)), t)
    for mask in range(1 << g.edge_count):
        profile = g.component_profile(mask)
        for h in _switch_all(g):
            if h.component_profile(mask) != profile:
                yield Outcome("graph.switching_preserves_balance", profile, h.component_profile(mask))
                break
    if g.edge_count <= 5:
        circuits = [c.mask for c in en.enumerate_circuits(g)]
        for e in range(g.edge_count):
            cls = g.classify_edge(e)
            in_some = any(c >> e & 1 for c in circuits)
            expected = "loop" if (1 << e) in circuits else ("ordinary" if in_some else "coloop")
            yield Outcome("graph.classify_edge_vs_circuits", expected, cls.frame_role)
        yield Outcome(
            "matroid.frame_circuits_vs_enumeration",
            sorted(frame_matroid(g).circuits()),
            sorted(circuits),
        )
    for u, v in ((Fraction(1), Fraction(1)), (Fraction(-2), Fraction(1, 3)), (Fraction(3, 2), Fraction(-2))):
        expected = sum(
            (u ** g.component_profile(a).k_b
             * v ** (bin(a).count("1") - g.vertex_count + g.component_profile(a).k_b)
             for a in range(1 << g.edge_count)),
            Fraction(0),
        )
        yield Outcome("poly.dichromatic", expected, dichromatic(g, u, v, t))


def check_matroid(g: SignedGraph) -> Iterator[Outcome]:
    m, f = cycle_matroid(g), frame_matroid(g)
    if g.edge_count <= 8:
        yield Outcome("matroid.axioms_cycle", [], m.violations())
        yield Outcome("matroid.axioms_frame", [], f.violations())
    yield Outcome("matroid.rank_gap_is_unbalanced_count", True, rank_gap_profile(g))
    for m1, m2, tag in ((m, f, "MF"), (f, m, "FM")):
        s = joint_tutte(m1, m2)
        yield Outcome(f"matroid.specialize_first[{tag}]", matroid_tutte(m1), specialize_to_m1(s, m1.rank_of_ground))
        yield Outcome(f"matroid.specialize_second[{tag}]", matroid_tutte(m2), specialize_to_m2(s, m2.rank_of_ground))
        yield Outcome(f"matroid.duality_swapped[{tag}]", True, duality_swapped_holds(m1, m2))
        yield Outcome(f"matroid.duality_same_order[{tag}]", True, duality_same_order_holds(m1, m2))
        if is_perspective(m2, m1):
            try:
                las_vergnas_candidate(m1, m2)
                ok = True
            except Exception:  # noqa: BLE001 - reported as a failed check
                ok = False
            yield Outcome(f"matroid.perspective_polynomial[{tag}]", True, ok)
    if g.is_balanced():
        yield Outcome("matroid.balanced_frame_is_cycle", True, m == f and is_perspective(f, m))


def check_matroid_file(m) -> Iterator[Outcome]:
    """Axioms of a user-supplied rank table; identities only once the axioms hold."""
    from .matroid import Matroid, dual

    assert isinstance(m, Matroid)
    bad = m.violations()
    yield Outcome("matroid.axioms", [], bad[:1])
    if bad:
        return
    for m2, tag in ((m, "self"), (dual(m), "dual")):
        s = joint_tutte(m, m2)
        yield Outcome(f"matroid.specialize_first[{tag}]", matroid_tutte(m), specialize_to_m1(s, m.rank_of_ground))
        yield Outcome(f"matroid.specialize_second[{tag}]", matroid_tutte(m2), specialize_to_m2(s, m2.rank_of_ground))
        yield Outcome(f"matroid.duality_swapped[{tag}]", True, duality_swapped_holds(m, m2))
        yield Outcome(f"matroid.duality_same_order[{tag}]", True, duality_same_order_holds(m, m2))


# -- enumerations over a group -------------------------------------------------


def check_flows(g: SignedGraph, group: FiniteAbelianGroup, poly: Optional[TriPoly] = None) -> Iterator[Outcome]:
    t = signed_tutte_subset(g) if poly is None else poly
    yield Outcome("flows.all_closed_form", en.count_flows_closed_form(g, group), en.count_flows(g, group))
    brute = en.count_flows(g, group, nowhere_zero_only=True)
    yield Outcome("flows.nz_subset_sum", brute, en.count_nz_flows_subset(g, group))
    yield Outcome("flows.nz_table1", brute, count_via_polynomial("nz_flows", g, t, group=group))
    if g.edge_count:
        flipped = en.flip_edge(en.default_orientation(g), 0)
        yield Outcome("flows.orientation_independence", brute,
                      en.count_flows(g, group, nowhere_zero_only=True, omega=flipped))


def check_colorings(g: SignedGraph, group: FiniteAbelianGroup, poly: Optional[TriPoly] = None) -> Iterator[Outcome]:
    t = signed_tutte_subset(g) if poly is None else poly
    brute = en.count_group_colorings(g, group)
    yield Outcome("colorings.group_table1", brute, count_via_polynomial("proper_G_colorings", g, t, group=group))
    yield Outcome(
        "colorings.group_as_xiota",
        brute,
        en.count_xiota_colorings(g, group.order, en.negation_involution(group)),
    )


def check_zaslavsky(g: SignedGraph, poly: Optional[TriPoly] = None, ns: Sequence[int] = (1, 2)) -> Iterator[Outcome]:
    t = signed_tutte_subset(g) if poly is None else poly
    for n in ns:
        chi = en.count_colorings_zaslavsky(g, n)
        yield Outcome(f"zaslavsky.chi_subset[n={n}]", chi, en.chromatic_subset(g, 2 * n + 1))
        yield Outcome(f"zaslavsky.chi_table1[n={n}]", chi, count_via_polynomial("proper_n_colorings", g, t, n=n))
        chi0 = en.count_colorings_zaslavsky(g, n, nonzero=True)
        yield Outcome(f"zaslavsky.chi0_subset[n={n}]", chi0, en.chromatic_subset(g, 2 * n, balanced_only=True))
        yield Outcome(
            f"zaslavsky.chi0_table1[n={n}]", chi0,
            count_via_polynomial("proper_nonzero_n_colorings", g, t, n=n),
        )


def xiota_value(g: SignedGraph, x_size: int, fixed: int, poly: TriPoly) -> Fraction:
    k = g.component_profile().k
    return (-1) ** (g.vertex_count - k) * Fraction(x_size) ** k * poly.eval(
        1 - x_size, 0, 1 - Fraction(fixed, x_size)
    )


def sample_involutions(size: int, count: int = 3) -> list[list[int]]:
    """``count`` involutions, covering distinct fixed-point counts first (identity first).

    When there are fewer distinct fixed-point counts than ``count`` (|X| = 3 has only
    t = 3 and t = 1), the remaining slots are filled with further involutions.
    """
    every = list(en.involutions(size))
    by_fixed: dict[int, list[int]] = {}
    for iota in every:
        by_fixed.setdefault(en.fixed_point_count(iota), iota)
    chosen = [by_fixed[k] for k in sorted(by_fixed, reverse=True)]
    chosen += [iota for iota in every if iota not in chosen]
    return chosen[:max(count, 1)]


def check_xiota(g: SignedGraph, poly: Optional[TriPoly] = None, sizes: Sequence[int] = (3, 4, 5)) -> Iterator[Outcome]:
    t = signed_tutte_subset(g) if poly is None else poly
    for size in sizes:
        for iota in sample_involutions(size):
            fixed = en.fixed_point_count(iota)
            tag = f"[|X|={size},iota={''.join(map(str, iota))}]"
            yield Outcome(f"xiota.table1{tag}", xiota_value(g, size, fixed, t), en.count_xiota_colorings(g, size, iota))
            yield Outcome(
                f"xiota.all_improper{tag}",
                en.all_improper_formula(g, size, fixed),
                en.count_all_improper(g, size, iota),
            )


def _component_graphs(g: SignedGraph) -> list[SignedGraph]:
    return [g.induced_component(verts, mask) for verts, mask in g.components()]


def check_tensions(
    g: SignedGraph,
    group: FiniteAbelianGroup,
    poly: Optional[TriPoly] = None,
    walk_length: Optional[int] = None,
) -> Iterator[Outcome]:
    t = signed_tutte_subset(g) if poly is None else poly
    k, kb, ku = g.component_profile()
    nv = g.vertex_count
    order, two = group.order, group.two_g_order
    counts, tcodes, pcodes = en.scan_tensions(g, group, collect=True)
    yield Outcome("tensions.all_count", order ** (nv - kb), counts.tensions)
    yield Outcome("tensions.pd_count", order ** (nv - k) * two ** ku, counts.potential_differences)
    yield Outcome(
        "tensions.nz_pd_table1",
        counts.nz_potential_differences,
        count_via_polynomial("nz_potential_differences", g, t, group=group),
    )
    # coset classes are defined per connected component
    for h in _component_graphs(g):
        hk, _, hku = h.component_profile()
        ht = signed_tutte_subset(h)
        hc = counts if h == g else en.count_tensions(h, group)
        if hku:
            off = [n for rep, n in hc.by_coset.items() if not group.in_two_g(rep)]
            yield Outcome("tensions.zero_coset_is_pd", hc.nz_potential_differences, hc.by_coset[group.zero])
            yield Outcome("tensions.two_point", hc.nz_tensions, nz_tensions_two_point(h, group, ht))
        else:
            off = [hc.nz_tensions] * (group.coset_reps().__len__() - 1)
        for n in off:
            yield Outcome("tensions.offcoset_table1", n, count_via_polynomial("tensions_offcoset", h, ht, group=group))
    rev, _, _ = en.scan_tensions(g, group, reverse=True)
    yield Outcome("tensions.reversed_walks", counts, rev)
    omega = en.default_orientation(g)
    for v in range(nv):
        _, ts, ps = en.scan_tensions(g.switch(v), group, en.switch_orientation(g, omega, v), collect=True)
        yield Outcome("tensions.switching_same_set", (tcodes, pcodes), (ts, ps))
    total, nz, bcodes = en.scan_basis_tensions(g, group, collect=True)
    yield Outcome("tensions.basis_bijection", (len(tcodes), tcodes), (total, bcodes))
    yield Outcome("tensions.basis_nowhere_zero", counts.nz_tensions, nz)
    if walk_length is not None:
        yield from check_closed_walks(g, group, tcodes, walk_length)


def check_closed_walks(g: SignedGraph, group: FiniteAbelianGroup, tcodes: set, max_length: int) -> Iterator[Outcome]:
    """Tensions are exactly the maps vanishing on all bounded positive closed walks."""
    import numpy as np

    from .enumerators._assign import all_zero, assignment_chunks, combine

    vectors = sorted(en.positive_closed_walk_vectors(g, max_length))
    mat = np.array(vectors, dtype=np.int64).reshape(len(vectors), g.edge_count)
    found: set[int] = set()
    for codes, res in assignment_chunks(group, g.edge_count):
        found.update(codes[all_zero(combine(res, mat, group))].tolist())
    yield Outcome(f"tensions.positive_closed_walks[len<={max_length}]", tcodes, found)


def check_delta(g: SignedGraph, group: FiniteAbelianGroup) -> Iterator[Outcome]:
    stats = en.delta_image_stats(g, group)
    yield Outcome("delta.kernel_size", stats.expected_kernel_size, stats.kernel_size)
    yield Outcome("delta.image_is_pd_set", True, stats.image_equals_potential_differences)
    yield Outcome("delta.image_times_kernel", group.order ** g.vertex_count, stats.image_size * stats.kernel_size)
    _, kb, ku = g.component_profile()
    counts = en.count_tensions(g, group)
    yield Outcome(
        "delta.proper_colorings_vs_nz_pd",
        en.count_group_colorings(g, group),
        group.order ** kb * Fraction(group.order, group.two_g_order) ** ku * counts.nz_potential_differences,
    )


def check_recipe(g: SignedGraph, group: FiniteAbelianGroup, poly: Optional[TriPoly] = None) -> Iterator[Outcome]:
    t = signed_tutte_subset(g) if poly is None else poly
    _, kb, ku = g.component_profile()
    yield Outcome(
        "recipe.flows", en.count_nz_flows_subset(g, group), recipe_evaluate(g, flow_recipe(group), t)
    )
    yield Outcome(
        "recipe.pd_all",
        group.order ** g.cycle_rank() * group.two_g_order ** ku,
        recipe_evaluate(g, potential_difference_recipe(group), t),
    )
    yield Outcome(
        "recipe.tensions_all", group.order ** g.frame_rank(), recipe_evaluate(g, tension_recipe(group), t)
    )


def check_recipe_paths(g: SignedGraph, params: Iterable[RecipeParams], poly: Optional[TriPoly] = None) -> Iterator[Outcome]:
    t = signed_tutte_subset(g) if poly is None else poly
    for p in params:
        yield Outcome("recipe.two_paths_agree", recipe_via_subsets(g, p), recipe_via_polynomial(g, p, t))


# -- driver ---------------------------------------------------------------------


def verify_graph(
    g: SignedGraph,
    groups: Sequence[FiniteAbelianGroup],
    topics: Sequence[str] = ALL_TOPICS,
    delta_max_vertices: int = 3,
    delta_max_order: int = 6,
    walk_max_edges: int = 4,
) -> VerifyReport:
    report = VerifyReport()
    t = signed_tutte_subset(g)

    def run(outcomes, group=None):
        for o in outcomes:
            report.add(o, g, group)

    if "polynomial" in topics:
        run(check_polynomial(g, t))
    if "matroid" in topics:
        run(check_matroid(g))
    if "zaslavsky" in topics:
        run(check_zaslavsky(g, t))
    if "xiota" in topics:
        run(check_xiota(g, t))
    for group in groups:
        if "flows" in topics:
            run(check_flows(g, group, t), group)
        if "colorings" in topics:
            run(check_colorings(g, group, t), group)
        if "tensions" in topics:
            walks = 2 * g.edge_count if g.edge_count <= walk_max_edges else None
            run(check_tensions(g, group, t, walk_length=walks), group)
        if "recipe" in topics:
            run(check_recipe(g, group, t), group)
        if "delta" in topics and g.vertex_count <= delta_max_vertices and group.order <= delta_max_order:
            run(check_delta(g, group), group)
    return report


def _verify_job(args):
    g, moduli, topics = args
    return verify_graph(g, [FiniteAbelianGroup(m) for m in moduli], topics)


def verify_many(
    graphs: Iterable[SignedGraph],
    groups: Sequence[FiniteAbelianGroup],
    topics: Sequence[str] = ALL_TOPICS,
    jobs: int = 1,
) -> VerifyReport:
    report = VerifyReport()
    jobs_args = [(g, [grp.moduli for grp in groups], tuple(topics)) for g in graphs]
    if jobs <= 1:
        for args in jobs_args:
            report.extend(_verify_job(args))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_verify_job, jobs_args, chunksize=16):
                report.extend(part)
    return report


def table1_rows_covered(report: VerifyReport) -> set[str]:
    """Which counting evaluations (``MEANINGS``) were exercised by the report."""
    ids = {
        "nz_flows": "flows.nz_table1",
        "proper_G_colorings": "colorings.group_table1",
        "nz_potential_differences": "tensions.nz_pd_table1",
        "tensions_offcoset": "tensions.offcoset_table1",
        "dichromatic": "poly.dichromatic",
        "proper_n_colorings": "zaslavsky.chi_table1",
        "proper_nonzero_n_colorings": "zaslavsky.chi0_table1",
    }
    present = {r.check.split("[")[0] for r in report.records}
    return {m for m in MEANINGS if ids[m] in present}

