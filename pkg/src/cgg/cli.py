"""Command-line interface: enumerate, verify, count, render, transversal.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input or
domain contract violation, 3 a resource guard or search budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .blockers import enumerate_blockers, validate_blocker, witness_missed_blocker
from .counting import (
    blocker_count,
    catalan,
    coblocker_bounds,
    count_table,
)
from .errors import BudgetExceededError, CGGError, DomainError
from .geometry import Edge, GraphContext, edge_order, edges_cross
from .matchings import (
    Family,
    Matching,
    check_halfplane_property,
    check_quadrant_property,
    enumerate_odd_matchings,
    enumerate_perfect_matchings,
    enumerate_semi_simple,
    enumerate_spms,
    is_semi_simple,
)
from .render import RenderSpec, render_count_figure, render_svg
from .serialize import (
    count_table_to_csv,
    count_table_to_markdown,
    family_to_csv,
    family_to_json,
    parse_edge_list,
    parse_edge_token,
    parse_family,
)
from .transversal import (
    TransversalProblem,
    derive_sequence,
    solve_min_transversals,
)

ENUMERATORS = {
    "spm": enumerate_spms,
    "blockers": enumerate_blockers,
    "coblockers": enumerate_semi_simple,
    "odd": enumerate_odd_matchings,
}

VERIFY_CHECKS = (
    "blocker-formula",
    "characterization",
    "fixed-point",
    "counts",
    "lemma32",
    "witness",
)

# Default per-check caps on m; --allow-m6 lifts the oracle-bound ones to 6.
CHECK_CAPS = {
    "blocker-formula": 5,
    "characterization": 5,
    "fixed-point": 4,
    "counts": 10,
    "lemma32": 6,
    "witness": 5,
}
ORACLE_CHECKS = ("blocker-formula", "characterization", "fixed-point", "witness")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_enumerate(args: argparse.Namespace) -> int:
    ctx = GraphContext(args.m)
    family = ENUMERATORS[args.family](ctx)
    text = family_to_json(family) if args.format == "json" else family_to_csv(family)
    _emit(text, args.out)
    return 0


def _assertion(name: str, passed: bool, detail: str) -> dict:
    return {"name": name, "passed": bool(passed), "detail": detail}


def _families_equal(left: Family, right: Family) -> bool:
    return left == right


def _check_blocker_formula(ctx: GraphContext, max_nodes: int | None) -> list[dict]:
    solution = solve_min_transversals(TransversalProblem(enumerate_spms(ctx)), max_nodes)
    formula = enumerate_blockers(ctx)
    return [
        _assertion(
            "minimum transversal size",
            solution.min_size == ctx.m,
            f"oracle minimum {solution.min_size}, expected {ctx.m}",
        ),
        _assertion(
            "oracle equals caterpillar family",
            _families_equal(solution.family, formula),
            f"oracle found {solution.solutions} sets, formula builds {len(formula)}",
        ),
        _assertion(
            "count formula",
            len(formula) == blocker_count(ctx.m),
            f"{len(formula)} vs m*2^(m-1) = {blocker_count(ctx.m)}",
        ),
    ]


def _check_characterization(ctx: GraphContext, max_nodes: int | None) -> list[dict]:
    solution = solve_min_transversals(TransversalProblem(enumerate_blockers(ctx)), max_nodes)
    semi = enumerate_semi_simple(ctx)
    return [
        _assertion(
            "minimum transversal size",
            solution.min_size == ctx.m,
            f"oracle minimum {solution.min_size}, expected {ctx.m}",
        ),
        _assertion(
            "oracle equals semi-simple family",
            _families_equal(solution.family, semi),
            f"oracle found {solution.solutions} sets, direct enumeration finds {len(semi)}",
        ),
    ]


def _check_fixed_point(ctx: GraphContext, max_nodes: int | None) -> list[dict]:
    first = derive_sequence(ctx, 1, max_m=ctx.m, max_nodes=max_nodes)
    third = derive_sequence(ctx, 3, max_m=ctx.m, max_nodes=max_nodes)
    return [
        _assertion(
            "third derivation equals first",
            _families_equal(third, first),
            f"|A1| = {len(first)}, |A3| = {len(third)}",
        )
    ]


def _check_counts(ctx: GraphContext, max_nodes: int | None) -> list[dict]:
    spms = enumerate_spms(ctx)
    blockers = enumerate_blockers(ctx)
    semi = enumerate_semi_simple(ctx)
    lower, upper = coblocker_bounds(ctx.m)
    return [
        _assertion(
            "simple matching count",
            len(spms) == catalan(ctx.m),
            f"{len(spms)} vs Catalan {catalan(ctx.m)}",
        ),
        _assertion(
            "blocker count",
            len(blockers) == blocker_count(ctx.m),
            f"{len(blockers)} vs m*2^(m-1) = {blocker_count(ctx.m)}",
        ),
        _assertion(
            "co-blocker bounds",
            lower <= len(semi) <= upper,
            f"{lower} <= {len(semi)} <= {upper}",
        ),
    ]


def _check_lemma32(ctx: GraphContext, max_nodes: int | None) -> list[dict]:
    halfplane_checked = halfplane_failed = 0
    quadrant_checked = quadrant_failed = 0
    for member in enumerate_semi_simple(ctx):
        matching = Matching(ctx, member)
        edges = matching.edge_list()
        for e in edges:
            if edge_order(ctx, e) >= 2:
                halfplane_checked += 1
                if not check_halfplane_property(matching, e):
                    halfplane_failed += 1
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if edges_cross(ctx, edges[i], edges[j]):
                    quadrant_checked += 1
                    if not check_quadrant_property(matching, edges[i], edges[j]):
                        quadrant_failed += 1
    return [
        _assertion(
            "interior edges see boundary edges on both sides",
            halfplane_failed == 0,
            f"{halfplane_failed} failures over {halfplane_checked} interior edges",
        ),
        _assertion(
            "crossing pairs see boundary edges in all four arcs",
            quadrant_failed == 0,
            f"{quadrant_failed} failures over {quadrant_checked} crossing pairs",
        ),
    ]


def _check_witness(ctx: GraphContext, max_nodes: int | None) -> list[dict]:
    checked = invalid = overlapping = 0
    for member in enumerate_perfect_matchings(ctx):
        matching = Matching(ctx, member)
        if is_semi_simple(matching):
            continue
        checked += 1
        witness = witness_missed_blocker(ctx, matching)
        if validate_blocker(ctx, witness) is None:
            invalid += 1
        if not witness.isdisjoint(member):
            overlapping += 1
    return [
        _assertion(
            "every witness is a caterpillar blocker",
            invalid == 0,
            f"{invalid} unparseable over {checked} witnesses",
        ),
        _assertion(
            "every witness avoids its matching",
            overlapping == 0,
            f"{overlapping} overlapping over {checked} witnesses",
        ),
    ]


CHECK_RUNNERS = {
    "blocker-formula": _check_blocker_formula,
    "characterization": _check_characterization,
    "fixed-point": _check_fixed_point,
    "counts": _check_counts,
    "lemma32": _check_lemma32,
    "witness": _check_witness,
}


def cmd_verify(args: argparse.Namespace) -> int:
    cap = CHECK_CAPS[args.check]
    if args.allow_m6 and args.check in ORACLE_CHECKS:
        cap = max(cap, 6)
    if args.m > cap:
        raise BudgetExceededError(
            f"check '{args.check}' is limited to m <= {cap}"
            + ("" if args.allow_m6 else " (see --allow-m6 for the oracle checks)")
        )
    ctx = GraphContext(args.m)
    assertions = CHECK_RUNNERS[args.check](ctx, args.max_nodes)
    passed = all(a["passed"] for a in assertions)
    report = {"m": args.m, "check": args.check, "passed": passed, "assertions": assertions}
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0 if passed else 1


def _parse_m_range(text: str) -> tuple[int, int]:
    first, sep, last = text.partition("..")
    if not sep:
        raise DomainError(f"m-range must look like A..B, got {text!r}")
    try:
        lo, hi = int(first), int(last)
    except ValueError as exc:
        raise DomainError(f"m-range bounds must be integers, got {text!r}") from exc
    if lo > hi:
        raise DomainError(f"empty m-range {text!r}")
    return lo, hi


def cmd_count(args: argparse.Namespace) -> int:
    lo, hi = _parse_m_range(args.m_range)
    reports = count_table(lo, hi)
    text = count_table_to_csv(reports) if args.format == "csv" else count_table_to_markdown(reports)
    _emit(text, args.out)
    if args.plot is not None:
        render_count_figure(reports, args.plot)
    return 0


def _parse_highlights(ctx: GraphContext, text: str | None) -> dict[str, tuple[Edge, ...]]:
    if not text:
        return {}
    highlights: dict[str, tuple[Edge, ...]] = {}
    for clause in text.split(","):
        name, sep, tokens = clause.partition("=")
        if not sep:
            raise DomainError(f"highlight clause {clause!r} is not of the form class=u-v;u-v")
        name = name.strip()
        if name in highlights:
            raise DomainError(f"highlight class {name!r} appears twice")
        pairs = [parse_edge_token(tok.strip()) for tok in tokens.split(";") if tok.strip()]
        if not pairs:
            raise DomainError(f"highlight class {name!r} lists no edges")
        highlights[name] = tuple(ctx.edge(u, v) for u, v in pairs)
    return highlights


def cmd_render(args: argparse.Namespace) -> int:
    ctx = GraphContext(args.m)
    edges = tuple(ctx.edge(u, v) for u, v in parse_edge_list(args.edges))
    highlights = _parse_highlights(ctx, args.highlight)
    spec = RenderSpec(ctx, edges, highlights, out=args.out)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_svg(spec))
    return 0


def cmd_transversal(args: argparse.Namespace) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        family = parse_family(fh.read())
    solution = solve_min_transversals(TransversalProblem(family), args.max_nodes)
    if args.format == "json":
        text = family_to_json(solution.family, stats=solution.stats())
    else:
        text = family_to_csv(solution.family)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cgg",
        description="Matchings, blockers, and minimum transversals of the "
        "complete convex geometric graph on 2m vertices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="emit a family of edge sets")
    p_enum.add_argument("--m", type=int, required=True, help="half the vertex count (m >= 2)")
    p_enum.add_argument("--family", choices=sorted(ENUMERATORS), required=True)
    p_enum.add_argument("--format", choices=("json", "csv"), default="json")
    p_enum.add_argument("--out", help="output path (default: stdout)")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run one verification check")
    p_verify.add_argument("--m", type=int, required=True)
    p_verify.add_argument("--check", choices=VERIFY_CHECKS, required=True)
    p_verify.add_argument("--max-nodes", type=int, default=None, help="search node budget")
    p_verify.add_argument(
        "--allow-m6",
        action="store_true",
        help="lift the oracle checks' m-cap to 6 (slow)",
    )
    p_verify.add_argument("--out", help="report path (default: stdout)")
    p_verify.set_defaults(func=cmd_verify)

    p_count = sub.add_parser("count", help="emit the counts table")
    p_count.add_argument("--m-range", required=True, metavar="A..B")
    p_count.add_argument("--format", choices=("csv", "md"), default="csv")
    p_count.add_argument("--out", help="table path (default: stdout)")
    p_count.add_argument("--plot", help="also draw the growth chart to this image path")
    p_count.set_defaults(func=cmd_count)

    p_render = sub.add_parser("render", help="draw edges on the labeled circle as SVG")
    p_render.add_argument("--m", type=int, required=True)
    p_render.add_argument("--edges", required=True, help='comma-separated "u-v" tokens')
    p_render.add_argument(
        "--highlight",
        help='class assignments like "spine=0-1;1-2,legs=1-4"',
    )
    p_render.add_argument("--out", required=True)
    p_render.set_defaults(func=cmd_render)

    p_trans = sub.add_parser(
        "transversal", help="enumerate all minimum transversals of a family file"
    )
    p_trans.add_argument("--input", required=True, help="family JSON path")
    p_trans.add_argument("--format", choices=("json", "csv"), default="json")
    p_trans.add_argument("--max-nodes", type=int, default=None)
    p_trans.add_argument("--out", help="output path (default: stdout)")
    p_trans.set_defaults(func=cmd_transversal)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"cgg: budget exceeded: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"cgg: invalid input: {exc}", file=sys.stderr)
        return 2
    except CGGError as exc:  # internal invariant breach: report loudly
        print(f"cgg: internal check failed: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cgg: i/o error: {exc}", file=sys.stderr)
        return 2
