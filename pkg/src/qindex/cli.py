"""Command-line front end.

Exit codes: 0 success, 1 a verification sweep found a violation, 2 bad input
or out-of-scope parameters.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import bounds, search
from .graph import (
    Graph6Error,
    GraphError,
    decode_graph6,
    encode_graph6,
    format_edge_list,
    is_k_degenerate,
    make_snk,
    parse_edge_list,
)
from .spectral import DEFAULT_TOL, SpectralError

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _read_graphs(args) -> list:
    """Graphs from exactly one of --g6, --edges, --file, --stdin."""
    sources = [s for s in ("g6", "edges", "file", "stdin") if getattr(args, s, None)]
    if len(sources) != 1:
        raise InputError("give exactly one input source: --g6, --edges, --file or --stdin")
    if args.g6:
        return [_decode_line(line, i + 1) for i, line in enumerate(args.g6)]
    if args.edges:
        try:
            return [parse_edge_list(Path(args.edges).read_text())]
        except OSError as exc:
            raise InputError(str(exc)) from None
        except GraphError as exc:
            raise InputError(f"{args.edges}: {exc}") from None
    if args.file:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise InputError(str(exc)) from None
    else:
        text = sys.stdin.read()
    return [_decode_line(line, no) for no, line in enumerate(text.splitlines(), 1) if line.strip()]


def _decode_line(line: str, no: int):
    try:
        return decode_graph6(line)
    except (Graph6Error, GraphError) as exc:
        raise InputError(f"line {no}: {exc}") from None


def _human(x) -> str:
    return f"{x:.6g}" if isinstance(x, float) else str(x)


def _error(msg) -> None:
    print(f"qindex: error: {msg}", file=sys.stderr)


def cmd_analyze(args) -> int:
    if not args.tol >= 1e-12:
        raise InputError(f"--tol must be at least 1e-12, got {args.tol}")
    graphs = _read_graphs(args)
    reports = [bounds.bound_report(g, args.tol) for g in graphs]
    out = sys.stdout
    if args.format == "csv":
        out.write(bounds.csv_header())
        for r in reports:
            out.write(r.to_csv_row())
    elif args.format == "json":
        out.write(json.dumps([r.row() for r in reports], indent=2) + "\n")
    else:
        for r in reports:
            row = r.row()
            out.write("  ".join(f"{key}={_human(row[key])}" for key in bounds.CSV_COLUMNS) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    workers = args.workers if args.workers is not None else search.default_workers()
    report = search.run_sweep(
        args.target, args.n, args.k, iso_reduce=args.iso, workers=workers,
        long_run=args.long_run, checkpoint=args.checkpoint,
    )
    _emit_report(report, args.format)
    if args.histogram:
        Path(args.histogram).write_text(report.histogram_csv())
    if not report.verified:
        _error(f"{report.violation_count} violation(s) found")
        return EXIT_VIOLATION
    return EXIT_OK


def _emit_report(report, fmt):
    out = sys.stdout
    if fmt == "json":
        out.write(report.to_json())
    elif fmt == "csv":
        out.write(report.histogram_csv())
    else:
        out.write(f"target={report.target} n={report.n} k={report.k} mode={report.mode}\n")
        out.write(f"graphs scanned={report.graphs_scanned} in scope={report.graphs_in_scope}\n")
        out.write(f"violations={report.violation_count}\n")
        if report.closed_form is not None:
            out.write(f"closed form={_human(report.closed_form)}\n")
        if report.extremal_value is not None:
            out.write(f"extremal={report.extremal_graph} value={_human(report.extremal_value)}"
                      f" unique={report.unique_up_to_iso}\n")
        for v in report.violations:
            out.write(f"  {v['kind']}: {v['graph6']} {v['detail']}\n")
        out.write(report.note + "\n")


def cmd_search_extremal(args) -> int:
    workers = args.workers if args.workers is not None else search.default_workers()
    rows = []
    status = EXIT_OK
    for target in ("q", "mu"):
        rep = search.run_sweep(target, args.n, args.k, iso_reduce=args.iso, workers=workers)
        if not rep.verified:
            _error(f"{target}: {rep.violation_count} violation(s) found")
            status = EXIT_VIOLATION
        rows.append({"index": target, "n": args.n, "k": args.k, "extremal_graph": rep.extremal_graph,
                     "extremal_value": rep.extremal_value, "closed_form": rep.closed_form,
                     "unique_up_to_iso": rep.unique_up_to_iso, "violations": rep.violation_count})
    if args.format == "json":
        sys.stdout.write(json.dumps(rows, indent=2) + "\n")
    elif args.format == "csv":
        cols = list(rows[0])
        sys.stdout.write(",".join(cols) + "\n")
        for r in rows:
            sys.stdout.write(",".join(repr(r[c]) if isinstance(r[c], float) else str(r[c]) for c in cols) + "\n")
    else:
        for r in rows:
            sys.stdout.write("  ".join(f"{c}={_human(v)}" for c, v in r.items()) + "\n")
    return status


def cmd_gen(args) -> int:
    if args.kind == "snk":
        if args.k is None:
            raise InputError("gen snk needs --k")
        graphs = [make_snk(args.n, args.k)]
    else:
        if args.k is None or args.k < 0 or args.n < 1 or args.count < 0:
            raise InputError("gen random-degenerate needs --n >= 1, --k >= 0, --count >= 0")
        graphs = [search.random_k_degenerate(args.n, args.k, args.seed + i) for i in range(args.count)]
        assert all(is_k_degenerate(g, args.k) for g in graphs)
    for g in graphs:
        sys.stdout.write(encode_graph6(g) + "\n")
    return EXIT_OK


def cmd_encode(args) -> int:
    if args.edges:
        try:
            text = Path(args.edges).read_text()
        except OSError as exc:
            raise InputError(str(exc)) from None
    else:
        text = sys.stdin.read()
    try:
        g = parse_edge_list(text)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(encode_graph6(g) + "\n")
    return EXIT_OK


def cmd_decode(args) -> int:
    for g in _read_graphs(args):
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qindex", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_inputs(p, edges=True):
        p.add_argument("--g6", action="append", metavar="LINE", help="inline graph6 (repeatable)")
        if edges:
            p.add_argument("--edges", metavar="PATH", help="edge-list file: 'n m' then m lines 'u v'")
        p.add_argument("--file", metavar="PATH", help="file of graph6 lines")
        p.add_argument("--stdin", action="store_true", help="read graph6 lines from stdin")

    def add_format(p, default="human"):
        p.add_argument("--format", choices=("human", "csv", "json"), default=default)

    p = sub.add_parser("analyze", help="spectral radii, all bounds and equality certificates per graph")
    add_inputs(p)
    add_format(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="exhaustive verification sweep")
    p.add_argument("--target", choices=search.TARGETS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--iso", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--workers", type=int, help="default: $QINDEX_WORKERS or CPU count")
    p.add_argument("--long-run", action="store_true", help="allow n = 8 (2^28 graphs)")
    p.add_argument("--checkpoint", metavar="PATH")
    p.add_argument("--histogram", metavar="PATH", help="also write the gap histogram as CSV")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-extremal", help="maximisers of q and mu over k-degenerate graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--iso", action="store_true")
    p.add_argument("--workers", type=int)
    add_format(p)
    p.set_defaults(func=cmd_search_extremal)

    p = sub.add_parser("gen", help="generate graph6 lines")
    p.add_argument("kind", choices=("snk", "random-degenerate"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("encode", help="edge list (file or stdin) to graph6")
    p.add_argument("--edges", metavar="PATH")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="graph6 to edge list")
    add_inputs(p, edges=False)
    p.set_defaults(func=cmd_decode)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, search.ScopeError, GraphError, bounds.FormulaDomainError, SpectralError) as exc:
        _error(exc)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
