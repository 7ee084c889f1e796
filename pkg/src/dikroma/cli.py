"""Command-line front end.

Exit codes: 0 success; 1 theorem-violation finding (sweep violation or a
missing interpolation witness); 2 input or configuration error; 3 solver
cap or time budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from dikroma.coloring import PairMode, format_coloring
from dikroma.digraph import check_ordering
from dikroma.errors import CapExceeded, DikromaError, ParseError, SolverTimeout
from dikroma.formats import read_digraph
from dikroma.greedy import greedy_color, parsimonious_min_colors
from dikroma.solvers import (
    DCO_CAP,
    complete_interpolation_witnesses,
    deadline_from_env,
    greedy_interpolation_witnesses,
    parameter_report,
)
from dikroma.sweep import (
    CSV_COLUMNS,
    DEFAULT_PS,
    Family,
    SweepRefused,
    find_extremal,
    run_sweep,
)

EXIT_OK, EXIT_FINDING, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class UsageError(DikromaError):
    pass


def _parse_order(text: str, n: int) -> tuple[int, ...]:
    try:
        order = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--order expects comma-separated vertex numbers, got {text!r}")
    try:
        return check_ordering(order, n)
    except DikromaError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, payload, text: str | None = None, rows: list[dict] | None = None,
          columns=None) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(columns), extrasaction="ignore",
                                lineterminator="\n")
        writer.writeheader()
        for row in rows or []:
            writer.writerow(row)
        out = buf.getvalue()
    else:
        out = text if text is not None else json.dumps(payload) + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def cmd_params(args) -> int:
    d = read_digraph(args.input)
    with_dco = args.with_dco
    if with_dco and d.n > DCO_CAP:
        raise CapExceeded(f"--with-dco needs n <= {DCO_CAP}")
    rep = parameter_report(d, args.pair_mode, with_dco=with_dco,
                           deadline=deadline_from_env())
    data = rep.to_json()
    text = "\n".join(f"{key}: {data[key]}" for key in
                     ("n", "m", "dc", "dg", "dac", "dco", "delta_out", "delta_in", "pair_mode")
                     if key in data) + "\n"
    cols = ("n", "m", "dc", "dg", "dac", "dco", "delta_in", "delta_out", "pair_mode")
    _emit(args, data, text, [data], cols)
    return EXIT_OK


def cmd_greedy(args) -> int:
    d = read_digraph(args.input)
    order = _parse_order(args.order, d.n) if args.order else tuple(range(d.n))
    col = greedy_color(d, order)
    data = {"order": list(order), "k": col.k, "coloring": list(col.colors)}
    _emit(args, data, format_coloring(col),
          [{"vertex": v, "color": c} for v, c in enumerate(col.colors)], ("vertex", "color"))
    return EXIT_OK


def cmd_parsimonious(args) -> int:
    d = read_digraph(args.input)
    order = _parse_order(args.order, d.n) if args.order else tuple(range(d.n))
    k, run = parsimonious_min_colors(d, order, deadline_from_env())
    col = run.coloring()
    data = {
        "order": list(order), "k": k, "coloring": list(col.colors),
        "trace": [{"step": i, "vertex": v, "color": c}
                  for i, (v, c) in enumerate(zip(run.ordering, run.trace))],
    }
    text = f"k = {k}\n" + "".join(
        f"step {i}: vertex {v} -> {c}\n" for i, (v, c) in enumerate(zip(run.ordering, run.trace)))
    _emit(args, data, text, data["trace"], ("step", "vertex", "color"))
    return EXIT_OK


def cmd_interpolate(args) -> int:
    d = read_digraph(args.input)
    deadline = deadline_from_env()
    if args.kind == "greedy":
        res = greedy_interpolation_witnesses(d, deadline)
    else:
        res = complete_interpolation_witnesses(d, args.pair_mode, deadline)
    data = {
        "kind": res.kind, "low": res.low, "high": res.high,
        "witnesses": {str(k): list(c.colors) for k, c in sorted(res.witnesses.items())},
        "missing": res.missing,
    }
    text = f"{res.kind} interpolation on [{res.low}, {res.high}]\n" + "".join(
        f"k={k}: {' '.join(map(str, c.colors))}\n" for k, c in sorted(res.witnesses.items()))
    if res.missing:
        text += f"MISSING: {res.missing}\n"
    rows = [{"k": k, "coloring": " ".join(map(str, c.colors))}
            for k, c in sorted(res.witnesses.items())]
    _emit(args, data, text, rows, ("k", "coloring"))
    return EXIT_FINDING if res.missing else EXIT_OK


def _family(args) -> Family:
    if args.n is None:
        raise UsageError("--n is required")
    if args.exhaustive:
        if args.samples:
            raise UsageError("--exhaustive and --samples are mutually exclusive")
        return Family.exhaustive(args.n)
    if not args.samples:
        raise UsageError("choose --exhaustive or --samples COUNT")
    return Family.sampled(args.n, args.samples, args.p or DEFAULT_PS, args.seed)


def cmd_sweep(args) -> int:
    family = _family(args)
    report = run_sweep(family, args.check, args.pair_mode, heavy_sample=args.heavy_sample,
                       seed=args.seed, workers=args.workers,
                       keep_rows=args.format == "csv")
    data = report.to_json()
    lines = [f"family: {data['family']}", f"digraphs: {report.total}",
             f"heavy-checked: {report.heavy}"]
    for c, st in report.stats.items():
        lines.append(f"{c}: {st.passed}/{st.evaluated} passed")
    for c, e in sorted(report.extremal.items()):
        lines.append(f"{c}: max sum {e.max_sum} (bound {e.bound}) at {e.digraph6}")
    lines.append(f"violations: {len(report.violations)}")
    for v in report.violations[:20]:
        lines.append(f"  {v.check} {v.digraph6} {v.values}")
    _emit(args, data, "\n".join(lines) + "\n", report.rows, CSV_COLUMNS)
    return EXIT_OK if report.passed else EXIT_FINDING


def cmd_witness(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    res = find_extremal(args.n, args.target, limit=args.limit, mode=args.pair_mode,
                        samples=args.samples or 2000, seed=args.seed)
    data = res.to_json()
    lines = [f"{res.check} n={res.n}: max sum {res.max_sum}, bound {res.bound}, "
             f"attained by {len(res.indices)} digraphs"]
    for w in data["witnesses"]:
        lines.append(f"  {w['digraph6']} sum={w['sum']} m={w['report']['m']}")
    rows = [{"digraph6": w["digraph6"], "sum": w["sum"], "index": w["index"]}
            for w in data["witnesses"]]
    _emit(args, data, "\n".join(lines) + "\n", rows, ("digraph6", "sum", "index"))
    return EXIT_FINDING if res.max_sum > res.bound else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pair-mode", choices=[m.value for m in PairMode],
                        default=PairMode.ORDERED.value,
                        help="class pairs a complete coloring must join (default: ordered)")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="dikroma",
        description="Acyclic-coloring parameters of digraphs and Nordhaus-Gaddum sweeps. "
                    "Set DIKROMA_TIME_BUDGET_MS to cap solver time.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", help="edge-list file, digraph6 file, or inline digraph6 "
                                     "string starting with '&'")
        return p

    p = with_input(sub.add_parser("params", parents=[common],
                                  help="dc, dG, dac (and dc-o) with witnesses"))
    p.add_argument("--with-dco", action="store_true",
                   help=f"also compute the diochromatic number (n <= {DCO_CAP})")
    p.set_defaults(func=cmd_params)

    for name, func, hlp in (("greedy", cmd_greedy, "First-Fit coloring along an ordering"),
                            ("parsimonious", cmd_parsimonious,
                             "fewest colors over parsimonious runs along an ordering")):
        p = with_input(sub.add_parser(name, parents=[common], help=hlp))
        p.add_argument("--order", help="comma-separated vertex ordering, e.g. 2,0,1,3")
        p.set_defaults(func=func)

    p = with_input(sub.add_parser("interpolate", parents=[common],
                                  help="one witness per k in the interpolation interval"))
    p.add_argument("--kind", choices=("greedy", "complete"), default="greedy")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("sweep", parents=[common], help="verify bounds over a digraph family")
    p.add_argument("--n", type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=int, help="total sampled digraphs, split over --p")
    p.add_argument("--p", type=float, action="append",
                   help="arc probability; repeat for a grid (default 0.1,0.3,0.5,0.7,0.9)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check", default="all", help="'all' or comma-separated check ids")
    p.add_argument("--heavy-sample", type=int,
                   help="digraphs receiving the dc-o and interpolation-witness checks")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("witness", parents=[common],
                       help="digraphs maximizing a Nordhaus-Gaddum sum")
    p.add_argument("--n", type=int)
    p.add_argument("--target", choices=("ng-dc", "ng-dac", "ng-dg"), default="ng-dc")
    p.add_argument("--limit", type=int, default=3)
    p.add_argument("--samples", type=int, help="sample size when n > 5")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapExceeded, SolverTimeout) as exc:
        print(f"dikroma: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, UsageError, SweepRefused, OSError, DikromaError) as exc:
        print(f"dikroma: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
