"""Command-line interface: ``signedtutte {poly,eval,count,joint,verify}``."""
from __future__ import annotations

import argparse
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import enumerators as en
from .battery import battery
from .graph import SignedGraph
from .group import FiniteAbelianGroup, GroupError
from .io import ParseError, load_graph
from .matroid import MatroidError, joint_tutte, parse_matroid
from .poly import TriPoly
from .tutte import (
    MEANINGS,
    MethodMismatch,
    count_via_polynomial,
    signed_tutte,
    signed_tutte_dc,
    signed_tutte_subset,
    table1_point,
)
from .verify import ALL_TOPICS, VerifyReport, check_matroid_file, verify_graph, verify_many

log = logging.getLogger("signedtutte")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class CliError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise CliError(f"not a rational number: {text!r}") from None


def _group(text: Optional[str]) -> FiniteAbelianGroup:
    if text is None:
        raise CliError("this command needs --group")
    return FiniteAbelianGroup.parse(text)


def _graph(path: str) -> SignedGraph:
    return load_graph(path).graph


# -- poly -------------------------------------------------------------------


def cmd_poly(args) -> int:
    g = _graph(args.file)
    if args.trace:
        trace: list = []
        signed_tutte_dc(g, trace)
        for depth, case, h in trace:
            print(f"{'  ' * depth}{case}: {h!r}", file=sys.stderr)
    try:
        poly = signed_tutte(g, args.method)
    except MethodMismatch as exc:
        print("methods disagree; coefficient (subset, dc) by monomial X^i Y^j Z^k:", file=sys.stderr)
        for mono, (a, b) in sorted(exc.diff.items()):
            print(f"  {mono}: {a} vs {b}", file=sys.stderr)
        return EXIT_FAIL
    print(poly.render())
    return EXIT_OK


# -- eval -------------------------------------------------------------------


def cmd_eval(args) -> int:
    g = _graph(args.file)
    poly = signed_tutte_subset(g)
    if args.point:
        parts = args.point.split(",")
        if len(parts) != 3:
            raise CliError("--point needs three comma-separated rationals x,y,z")
        x, y, z = (_rational(p) for p in parts)
        print(poly.eval(x, y, z))
        return EXIT_OK
    if not args.meaning:
        raise CliError("give --point x,y,z or --meaning")
    group = FiniteAbelianGroup.parse(args.group) if args.group else None
    pt = table1_point(
        args.meaning, g, group=group, n=args.n,
        u=_rational(args.u) if args.u else None, v=_rational(args.v) if args.v else None,
    )
    print(f"point=({pt.x}, {pt.y}, {pt.z}) prefactor={pt.prefactor}")
    print(pt.apply(poly))
    return EXIT_OK


# -- count ------------------------------------------------------------------


def _tension_formula(g: SignedGraph, group: FiniteAbelianGroup, nowhere_zero: bool) -> int:
    """Nowhere-zero tensions multiply over components; each from the polynomial."""
    from .tutte import nz_tensions_two_point

    if not nowhere_zero:
        return group.order ** (g.vertex_count - g.component_profile().k_b)
    total = 1
    for verts, mask in g.components():
        h = g.induced_component(verts, mask)
        if h.component_profile().k_u:
            total *= nz_tensions_two_point(h, group)
        else:
            # balanced and connected: every class of the coset split is the whole count
            total *= count_via_polynomial("tensions_offcoset", h, group=group)
    return total


def _print_coset_tables(g: SignedGraph, group: FiniteAbelianGroup, budget) -> None:
    comps = g.components()
    for i, (verts, mask) in enumerate(comps):
        h = g.induced_component(verts, mask)
        c = en.count_tensions(h, group, budget=budget)
        label = f"component {i} (vertices {verts})" if len(comps) > 1 else "graph"
        if c.by_coset is None:
            print(f"{label}: balanced, nowhere-zero tensions {c.nz_tensions}")
            continue
        table = ", ".join(f"{'+'.join(map(str, rep)) or '0'}: {n}" for rep, n in c.by_coset.items())
        print(f"{label}: nowhere-zero tensions by coset of 2G {{{table}}}")


def cmd_count(args) -> int:
    g = _graph(args.file)
    what, nz, budget = args.what, args.nowhere_zero, args.budget
    formula = brute = None
    if what in ("ncolorings",):
        if args.n is None:
            raise CliError("ncolorings needs --n")
        meaning = "proper_nonzero_n_colorings" if nz else "proper_n_colorings"
        formula = count_via_polynomial(meaning, g, n=args.n)
        if args.brute or args.both:
            brute = en.count_colorings_zaslavsky(g, args.n, nonzero=nz, budget=budget)
    else:
        group = _group(args.group)
        if what == "flows":
            formula = (
                count_via_polynomial("nz_flows", g, group=group) if nz
                else en.count_flows_closed_form(g, group)
            )
            if args.brute or args.both:
                brute = en.count_flows(g, group, nowhere_zero_only=nz, budget=budget)
        elif what == "colorings":
            formula = count_via_polynomial("proper_G_colorings", g, group=group)
            if args.brute or args.both:
                brute = en.count_group_colorings(g, group, budget=budget)
        elif what in ("tensions", "pd"):
            if what == "pd":
                _, _, ku = g.component_profile()
                formula = (
                    count_via_polynomial("nz_potential_differences", g, group=group) if nz
                    else group.order ** g.cycle_rank() * group.two_g_order ** ku
                )
            else:
                formula = _tension_formula(g, group, nz)
            if args.brute or args.both:
                c = en.count_tensions(g, group, budget=budget)
                brute = {
                    ("tensions", False): c.tensions,
                    ("tensions", True): c.nz_tensions,
                    ("pd", False): c.potential_differences,
                    ("pd", True): c.nz_potential_differences,
                }[(what, nz)]
                if what == "tensions" and nz:
                    _print_coset_tables(g, group, budget)
        else:  # pragma: no cover - argparse restricts choices
            raise CliError(f"unknown count target {what!r}")
    if args.brute and not args.both:
        print(brute)
        return EXIT_OK
    if args.both:
        print(f"polynomial: {formula}")
        print(f"brute force: {brute}")
        return EXIT_OK if formula == brute else EXIT_FAIL
    print(formula)
    return EXIT_OK


# -- joint ------------------------------------------------------------------


def cmd_joint(args) -> int:
    m1 = parse_matroid(Path(args.m1).read_text())
    m2 = parse_matroid(Path(args.m2).read_text())
    for name, m in (("first", m1), ("second", m2)):
        bad = m.violations()
        if bad:
            raise CliError(f"{name} matroid violates {bad[0]}")
    poly: TriPoly = joint_tutte(m1, m2)
    print(poly.render())
    return EXIT_OK


# -- verify -----------------------------------------------------------------


def cmd_verify(args) -> int:
    groups = [FiniteAbelianGroup.parse(s) for s in args.groups.split(",") if s.strip()]
    topics = tuple(args.topics.split(",")) if args.topics else ALL_TOPICS
    unknown = set(topics) - set(ALL_TOPICS)
    if unknown:
        raise CliError(f"unknown topics {sorted(unknown)}; choose from {ALL_TOPICS}")
    report = VerifyReport()
    if args.battery:
        graphs = list(battery(args.max_vertices, args.max_edges))
        log.info("verifying %d battery graphs over %s", len(graphs), ", ".join(map(str, groups)))
        report.extend(verify_many(graphs, groups, topics, jobs=args.jobs))
    for path in args.files:
        text = Path(path).read_text()
        if _looks_like_matroid(text):
            try:
                m = parse_matroid(text)
            except MatroidError as exc:
                report.records.append(_error_record(path, str(exc)))
                continue
            for o in check_matroid_file(m):
                report.add(o, SignedGraph(0), None)
                report.records[-1].graph = path
        else:
            report.extend(verify_graph(load_graph(path).graph, groups, topics))
    if not report.records:
        raise CliError("nothing to verify: give files or --battery")
    if args.report:
        Path(args.report).write_text(report.to_json() + "\n")
    if args.json:
        print(report.to_json(include_records=not args.summary_only))
    else:
        print(report.render_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def _looks_like_matroid(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.split()[0] == "ground"
    return False


def _error_record(path: str, message: str):
    from .verify import CheckRecord

    return CheckRecord("input.parse", path, "", "valid input", message, False)


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="signedtutte",
        description="Signed Tutte polynomial, joint matroid Tutte polynomial, and "
        "brute-force cross-checks for flows, colorings and tensions.",
    )
    # shared options are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="log progress to stderr")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help=f"max candidate functions for brute force (default ${en.BUDGET_ENV} "
                        f"or {en.DEFAULT_BUDGET})")
    for action in common._actions:
        p._add_action(action)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("poly", parents=[common], help="print the signed Tutte polynomial of a graph file")
    sp.add_argument("file")
    sp.add_argument("--method", choices=("subset", "dc", "both"), default="subset")
    sp.add_argument("--trace", action="store_true", help="print the deletion-contraction steps to stderr")
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("eval", parents=[common], help="evaluate the polynomial at a point or a named evaluation")
    sp.add_argument("file")
    sp.add_argument("--point", help="x,y,z as rationals, e.g. 0,-1,1/2")
    sp.add_argument("--meaning", choices=MEANINGS)
    sp.add_argument("--group")
    sp.add_argument("--n", type=int)
    sp.add_argument("--u")
    sp.add_argument("--v")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("count", parents=[common], help="count flows, colorings, tensions or potential differences")
    sp.add_argument("file")
    sp.add_argument("what", choices=("flows", "colorings", "ncolorings", "tensions", "pd"))
    sp.add_argument("--group", help="e.g. Z4xZ2")
    sp.add_argument("--n", type=int, help="color range {0, +-1, ..., +-n} for ncolorings")
    sp.add_argument("--nowhere-zero", action="store_true")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--brute", action="store_true", help="count by enumeration only")
    mode.add_argument("--both", action="store_true", help="print both counts; exit 1 if they differ")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("joint", parents=[common], help="joint Tutte polynomial of two matroid files")
    sp.add_argument("m1")
    sp.add_argument("m2")
    sp.set_defaults(func=cmd_joint)

    sp = sub.add_parser("verify", parents=[common], help="run the cross-check suite")
    sp.add_argument("files", nargs="*", help="graph files (.txt/.json) or matroid files")
    sp.add_argument("--battery", action="store_true", help="all small signed multigraphs")
    sp.add_argument("--groups", default="Z2,Z3,Z4,Z2xZ2")
    sp.add_argument("--max-edges", type=int, default=4)
    sp.add_argument("--max-vertices", type=int, default=3)
    sp.add_argument("--topics", help=f"comma-separated subset of {','.join(ALL_TOPICS)}")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true", help="print the JSON report")
    sp.add_argument("--summary-only", action="store_true", help="omit per-check records from --json")
    sp.add_argument("--report", help="also write the JSON report to this path")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.verbose = getattr(args, "verbose", False)
    args.budget = getattr(args, "budget", None)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    saved = os.environ.get(en.BUDGET_ENV)
    if args.budget is not None:
        # picked up by every enumerator, including verify worker processes
        os.environ[en.BUDGET_ENV] = str(args.budget)
    try:
        return args.func(args)
    except en.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CliError, ParseError, GroupError, MatroidError, ValueError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.budget is not None:
            if saved is None:
                os.environ.pop(en.BUDGET_ENV, None)
            else:
                os.environ[en.BUDGET_ENV] = saved

