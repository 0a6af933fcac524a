"""Command-line interface.

Exit status: 0 success, 1 usage or parse error, 2 precondition error,
3 cross-check or theorem-check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import curvature as cv
from .errors import CrossCheckError, GraphError, ParseError, PreconditionError
from .graph import Graph, ProductGraph, format_edge_list
from .graphspec import as_graph, load, split_pair
from .rational import as_rational, format_rational
from .theorems import TheoremCheckReport, default_jobs, summarize, sweep

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_CHECK = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rat(q: Fraction | int, approx: bool, doc: dict, key: str) -> None:
    doc[key] = format_rational(q)
    if approx:
        doc[key + "_approx"] = f"~{float(q):.12g}"


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _edge(g: Graph, selector: str) -> tuple[int, int]:
    a, b = split_pair(selector)
    return g.index(a), g.index(b)


# --------------------------------------------------------------------------


def cmd_curvature(args: argparse.Namespace) -> int:
    g = as_graph(load(args.graph))
    edges = list(g.edges()) if args.all else [_edge(g, args.edge)]
    alpha = as_rational(args.alpha) if args.alpha is not None else None
    reports = []
    failed = False
    for x, y in edges:
        r = cv.edge_report(g, x, y)
        item: dict = {"edge": [g.label(x), g.label(y)], "degree": r.degree, "triangle_size": r.triangle_size,
                      "opt": r.opt, "max": r.max}
        _rat(r.kappa_lly, args.approx, item, "kappa_lly")
        _rat(r.kappa_zero, args.approx, item, "kappa_zero")
        if alpha is not None:
            _rat(cv.kappa_alpha(g, x, y, alpha), args.approx, item, "kappa_alpha")
        item["route"] = {
            "kappa_lly": {"formula": r.route["kappa_lly"], "value": format_rational(r.kappa_lly)},
            "kappa_lly_transport": {"formula": r.route["kappa_lly_transport"],
                                    "value": format_rational(r.kappa_lly_transport)},
            "kappa_zero": {"formula": r.route["kappa_zero"], "value": format_rational(r.kappa_zero)},
            "kappa_zero_transport": {"formula": r.route["kappa_zero_transport"],
                                     "value": format_rational(r.kappa_zero_transport)},
        }
        item["cross_check"] = r.cross_check
        failed |= not r.cross_check
        reports.append(item)
    doc = {"schema_version": SCHEMA_VERSION, "command": "curvature", "graph": args.graph,
           "vertices": g.n, "edges": g.num_edges}
    if alpha is not None:
        doc["alpha"] = format_rational(alpha)
    doc["reports"] = reports
    _emit(doc)
    if failed:
        print("error: assignment and transport routes disagree", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def _report_doc(rep: TheoremCheckReport, approx: bool) -> dict:
    item: dict = {"theorem_id": rep.theorem_id, "quantity": rep.quantity, "instance": rep.instance}
    _rat(rep.lhs, approx, item, "lhs")
    _rat(rep.rhs, approx, item, "rhs")
    item["relation"] = rep.relation.value
    item["holds"] = rep.holds
    _rat(rep.slack, approx, item, "slack")
    if rep.error is not None:
        item["error"] = rep.error
    return item


def cmd_verify(args: argparse.Namespace) -> int:
    kind = "strong" if args.strong else "cartesian"
    a, b = args.strong or args.cartesian
    spec = f"{kind}({a},{b})"
    p = load(spec)
    assert isinstance(p, ProductGraph)
    theorems = [t for t in args.theorems.split(",") if t.strip()] if args.theorems else None
    jobs = args.jobs if args.jobs is not None else default_jobs()
    reports = sweep(p, theorems, names=(a, b), jobs=jobs)
    summary = summarize(reports)
    attained = [r for r in reports if r.theorem_id == "T3" and r.error is None and r.slack == 0]
    doc: dict = {"schema_version": SCHEMA_VERSION, "command": "verify", "graph": spec,
                 "factors": {"G": a, "H": b}, "theorems": theorems or "all"}
    doc["summary"] = {
        "checks": len(reports),
        "failures": summary.failures,
        "by_theorem": {
            tid: {"passed": passed, "total": total,
                  "worst_slack": format_rational(summary.worst_slack[tid]) if tid in summary.worst_slack else None}
            for tid, (passed, total) in summary.counts.items()
        },
    }
    if args.require_attained:
        doc["attained"] = [r.instance["edge"] for r in attained]
    shown = [r for r in reports if not r.holds] if args.failures_only else reports
    doc["reports"] = [_report_doc(r, args.approx) for r in shown]
    _emit(doc)
    if summary.failures:
        print(f"error: {summary.failures} check(s) failed", file=sys.stderr)
        return EXIT_CHECK
    if args.require_attained and not attained:
        print("error: no T3 instance attains the bound", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def cmd_idleness(args: argparse.Namespace) -> int:
    if args.samples < 1:
        raise ParseError("--samples must be a positive integer")
    g = as_graph(load(args.graph))
    x, y = _edge(g, args.edge)
    f = cv.idleness_function(g, x, y)
    alphas = sorted({Fraction(k, args.samples) for k in range(args.samples + 1)} | {f.breakpoint})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["alpha", "kappa_alpha", "formula_kappa_alpha"])
    mismatch = False
    for a in alphas:
        transport = cv.kappa_alpha(g, x, y, a)
        formula = f(a)
        mismatch |= transport != formula
        writer.writerow([format_rational(a), format_rational(transport), format_rational(formula)])
    sys.stdout.write(buf.getvalue())
    if mismatch:
        print("error: transport and closed-form idleness values disagree", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    g = as_graph(load(args.graph))
    if args.dump_edges:
        sys.stdout.write(format_edge_list(g))
        return EXIT_OK
    degrees = sorted({g.degree(v) for v in range(g.n)})
    _emit({"schema_version": SCHEMA_VERSION, "command": "graph", "graph": args.graph,
           "vertices": g.n, "edges": g.num_edges, "degrees": degrees,
           "regular": g.is_regular(), "labels": list(g.labels)})
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ricci", description="Exact Ollivier / Lin-Lu-Yau curvature of graph edges.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("curvature", help="per-edge curvature report")
    p.add_argument("--graph", required=True, help='graph spec, e.g. "strong(cycle:4,h1)"')
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--edge", help='vertex pair "u,v" (product labels like "(0,y1),(1,y2)")')
    sel.add_argument("--all", action="store_true", help="report every edge")
    p.add_argument("--alpha", help="also report kappa_alpha at this rational idleness (p/q)")
    p.add_argument("--approx", action="store_true", help="add decimal approximations (marked with ~)")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("verify", help="sweep theorem checks over a product")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--strong", nargs=2, metavar=("G", "H"))
    kind.add_argument("--cartesian", nargs=2, metavar=("G", "H"))
    p.add_argument("--theorems", help="comma-separated ids (T1,T2,T3,T4,COR1,COR2,L1..L4,P1,P2); default all")
    p.add_argument("--require-attained", action="store_true",
                   help="fail unless some T3 instance has zero slack")
    p.add_argument("--failures-only", action="store_true", help="list only failing reports")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $RICCI_JOBS or 1)")
    p.add_argument("--approx", action="store_true", help="add decimal approximations (marked with ~)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("idleness", help="sample the idleness function as CSV")
    p.add_argument("--graph", required=True)
    p.add_argument("--edge", required=True)
    p.add_argument("--samples", type=int, default=10)
    p.set_defaults(func=cmd_idleness)

    p = sub.add_parser("graph", help="describe or dump a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--dump-edges", action="store_true", help="print the graph in edge-list format")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CrossCheckError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (PreconditionError, GraphError) as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
