"""Command-line front end.

One subcommand per invocation:

    solve          invariants of a single graph
    product        build a product graph, emit graph6
    construct      run an upper-bound construction, emit the labeling
    verify         run a bound-checking suite, emit/write a JSON report
    families       emit graph6 lines for a parameter range of one family
    premise-check  probe the path/cycle 2-set premise

stdout carries only machine-readable payload (JSON, JSONL, or graph6
lines); everything else goes to stderr. Exit codes: 0 success, 1 a checked
bound failed to hold, 2 usage, parse, capacity, or budget errors.

Graph sources: ``--g6 <text>`` (one graph6 string), ``--file <path>``
(graph6 lines, one result line each), ``--family <spec>`` with the
mini-grammar ``kind:params``, e.g. ``path:4``, ``cycle:5``, ``star:3``,
``spider:3:1``, ``hypercube:3``, ``random:6:1/2:42``. Where a flag takes a
single graph (``--a``/``--b``), pass a family spec or ``g6:<text>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from typing import Optional

from .bounds import (
    THEOREM_ORDER,
    SuiteSpec,
    check_pncn_premise,
    default_corpus,
    exhaustive_corpus,
    random_corpus,
    report_to_csv,
    report_to_json,
    resolve_theorem_ids,
    run_suite,
    suite_ok,
)
from .constructions import (
    cross_construction,
    replicate_construction,
    strong_case_construction,
    swap_construction,
)
from .errors import BudgetExceeded, CapacityError, ParameterError, RomdomError
from .families import make_family, parse_family
from .graph6 import parse_graph6, write_graph6
from .graphs import CARTESIAN, PRODUCT_KINDS, STRONG, Graph, bits, product
from .solvers import (
    domination_number,
    efficient_dominating_sets,
    enumerate_optimal_rdfs,
    is_roman,
    roman_domination_number,
    two_packing_number,
)

_CONSTRUCTIONS = {
    "superior": replicate_construction,
    "eldek": swap_construction,
    "flojito": cross_construction,
    "strong": strong_case_construction,
}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _graph_arg(text: str) -> Graph:
    if text.startswith("g6:"):
        return parse_graph6(text[3:])
    return make_family(parse_family(text))


def _solve_sources(args) -> list[Graph]:
    given = [s for s in ("g6", "file", "family") if getattr(args, s.replace("-", "_")) is not None]
    if len(given) != 1:
        raise ParameterError("give exactly one of --g6, --file, --family")
    if args.g6 is not None:
        return [parse_graph6(args.g6)]
    if args.family is not None:
        return [make_family(parse_family(args.family))]
    graphs = []
    with open(args.file, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(parse_graph6(line))
    if not graphs:
        raise ParameterError(f"no graph6 lines in {args.file}")
    return graphs


def _solve_one(g: Graph, invariant: str, budget: Optional[int]) -> dict:
    value: object
    witness: object
    node_count: Optional[int]
    if invariant == "gamma":
        res = domination_number(g, budget)
        value, witness, node_count = res.value, sorted(bits(res.witness)), res.node_count
    elif invariant == "gamma-r":
        res = roman_domination_number(g, budget)
        value, witness, node_count = res.value, list(res.witness.labels), res.node_count
    elif invariant == "p2":
        res = two_packing_number(g, budget)
        value, witness, node_count = res.value, sorted(bits(res.witness)), res.node_count
    elif invariant == "codes":
        codes = efficient_dominating_sets(g, budget)
        value, witness, node_count = len(codes), [sorted(bits(c)) for c in codes], None
    elif invariant == "roman":
        value, witness, node_count = is_roman(g, budget), None, None
    else:  # enumerate-rdfs
        optima = enumerate_optimal_rdfs(g, budget=budget)
        value, witness, node_count = len(optima), [list(f.labels) for f in optima], None
    return {
        "graph": g.name(),
        "invariant": invariant,
        "value": value,
        "witness": witness,
        "node_count": node_count,
    }


def _cmd_solve(args) -> int:
    for g in _solve_sources(args):
        _emit(_solve_one(g, args.invariant, args.budget or None))
    return 0


def _cmd_product(args) -> int:
    prod = product(_graph_arg(args.a), _graph_arg(args.b), args.kind)
    sys.stdout.write(write_graph6(prod) + "\n")
    return 0


def _cmd_construct(args) -> int:
    fn = _CONSTRUCTIONS[args.theorem]
    outcome = fn(_graph_arg(args.a), _graph_arg(args.b), budget=args.budget or None)
    _emit(
        {
            "labels": list(outcome.rdf.labels),
            "weight": outcome.rdf.weight,
            "claimed_bound": outcome.claimed_bound,
            "selection_mode": outcome.selection_mode,
        }
    )
    return 0


def _verify_corpus(args) -> list[Graph]:
    if args.corpus == "exhaustive":
        return exhaustive_corpus(args.max_n)
    if args.corpus == "random":
        return random_corpus(args.count, args.n_min, args.n_max, args.seed)
    if args.family:
        return [make_family(parse_family(spec)) for spec in args.family]
    return default_corpus()


def _cmd_verify(args) -> int:
    theorems = (
        tuple(resolve_theorem_ids(args.theorems.split(",")))
        if args.theorems
        else THEOREM_ORDER
    )
    products = tuple(args.products.split(","))
    for kind in products:
        if kind not in PRODUCT_KINDS:
            raise ParameterError(f"unknown product kind {kind!r}")
    spec = SuiteSpec(
        graphs=tuple(_verify_corpus(args)),
        theorems=theorems,
        products=products,
        budget=args.budget if args.budget > 0 else None,
        max_product=args.max_product,
    )
    report = run_suite(spec, jobs=args.jobs)
    payload = report_to_json(report)
    if args.report:
        with open(args.report, "w", encoding="ascii") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(report_to_csv(report))
    if args.log:
        with open(args.log, "a", encoding="ascii") as fh:
            ts = datetime.now(timezone.utc).isoformat()
            for rec in report["records"]:
                fh.write(json.dumps({"ts": ts, "record": rec}, sort_keys=True) + "\n")
    summary = report["summary"]
    sys.stderr.write(
        "checked={checked} held={held} tight={tight} "
        "hypothesis_skipped={hypothesis_skipped} budget_skipped={budget_skipped}\n".format(
            **summary
        )
    )
    return 0 if suite_ok(report) else 1


def _cmd_families(args) -> int:
    if args.end is not None and args.end < args.start:
        raise ParameterError("--end must be >= --start")
    end = args.end if args.end is not None else args.start
    for param in range(args.start, end + 1):
        g = make_family(parse_family(f"{args.kind}:{param}"))
        sys.stdout.write(write_graph6(g) + "\n")
    return 0


def _cmd_premise_check(args) -> int:
    report = check_pncn_premise(args.n, args.kind)
    _emit(report.to_dict())
    return 0 if report.inequality_holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="romdom",
        description="Exact Roman domination invariants and bound checking "
        "on Cartesian and strong graph products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p, default=None):
        p.add_argument(
            "--budget",
            type=int,
            default=default,
            help="solver node cap per call (0 or omitted = unlimited for solve/construct)",
        )

    p_solve = sub.add_parser("solve", help="compute one invariant of one or more graphs")
    p_solve.add_argument("--g6", help="graph6 string")
    p_solve.add_argument("--file", help="path to a file of graph6 lines (JSONL output)")
    p_solve.add_argument("--family", help="family spec, e.g. path:4 or random:6:1/2:42")
    p_solve.add_argument(
        "--invariant",
        required=True,
        choices=["gamma", "gamma-r", "p2", "codes", "roman", "enumerate-rdfs"],
    )
    add_budget(p_solve)
    p_solve.set_defaults(fn=_cmd_solve)

    p_prod = sub.add_parser("product", help="emit a product graph as graph6")
    p_prod.add_argument("--a", required=True, help="family spec or g6:<text>")
    p_prod.add_argument("--b", required=True, help="family spec or g6:<text>")
    p_prod.add_argument("--kind", required=True, choices=[CARTESIAN, STRONG])
    p_prod.set_defaults(fn=_cmd_product)

    p_con = sub.add_parser("construct", help="run an upper-bound construction")
    p_con.add_argument("--theorem", required=True, choices=sorted(_CONSTRUCTIONS))
    p_con.add_argument("--a", required=True, help="family spec or g6:<text>")
    p_con.add_argument("--b", required=True, help="family spec or g6:<text>")
    add_budget(p_con)
    p_con.set_defaults(fn=_cmd_construct)

    p_ver = sub.add_parser("verify", help="run a bound-checking suite")
    p_ver.add_argument(
        "--corpus", choices=["families", "exhaustive", "random"], default="families"
    )
    p_ver.add_argument(
        "--family",
        action="append",
        help="with --corpus families: replace the default corpus (repeatable)",
    )
    p_ver.add_argument("--max-n", type=int, default=4, help="exhaustive corpus order cap")
    p_ver.add_argument("--count", type=int, default=20, help="random corpus size")
    p_ver.add_argument("--n-min", type=int, default=4)
    p_ver.add_argument("--n-max", type=int, default=6)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--theorems", help="comma-separated ids or unambiguous prefixes")
    p_ver.add_argument(
        "--products",
        default=f"{CARTESIAN},{STRONG}",
        help="comma-separated product kinds to sweep",
    )
    p_ver.add_argument("--max-product", type=int, help="skip pairs whose product exceeds this order")
    p_ver.add_argument(
        "--budget",
        type=int,
        default=10**8,
        help="solver node cap per call; 0 = unlimited",
    )
    p_ver.add_argument("--jobs", type=int, default=1, help="parallel workers; output is identical")
    p_ver.add_argument("--report", help="write the JSON report here instead of stdout")
    p_ver.add_argument("--csv", help="also write a CSV projection here")
    p_ver.add_argument("--log", help="append timestamped JSONL record lines here")
    p_ver.set_defaults(fn=_cmd_verify)

    p_fam = sub.add_parser("families", help="emit graph6 lines for a family parameter range")
    p_fam.add_argument(
        "--kind", required=True, choices=["path", "cycle", "complete", "star", "hypercube"]
    )
    p_fam.add_argument("--start", type=int, required=True)
    p_fam.add_argument("--end", type=int)
    p_fam.set_defaults(fn=_cmd_families)

    p_pre = sub.add_parser("premise-check", help="probe the path/cycle 2-set premise")
    p_pre.add_argument("--n", type=int, required=True)
    p_pre.add_argument("--kind", required=True, choices=["path", "cycle"])
    p_pre.set_defaults(fn=_cmd_premise_check)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its codes.
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (ParameterError, CapacityError, BudgetExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except RomdomError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
