"""Command-line interface: solve, verify, gen, bench, trace.

Exit codes: 0 success, 1 verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence, TextIO

from .certificate import (Verdict, format_certificate, parse_certificate,
                          verify_certificate)
from .generators import FAMILIES, GenSpec
from .graph import (Graph, ParseError, format_matching, matching_size,
                    parse_graph, parse_matching, validate_matching)
from .matcher import max_matching

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

log = logging.getLogger("sapmatch")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


class _LineSink:
    """Collects trace lines and writes them to a stream."""

    def __init__(self, out: TextIO) -> None:
        self.out = out

    def __call__(self, line: str) -> None:
        self.out.write(line + "\n")


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    initial = None
    if args.matching_in:
        initial = parse_matching(_read_text(args.matching_in), g.n)
        ok, problems = validate_matching(g, initial)
        if not ok:
            raise ParseError("starting matching is invalid: " + problems[0])
    trace_fh = open(args.trace, "w", encoding="utf-8") if args.trace else None
    try:
        tracer = _LineSink(trace_fh) if trace_fh else None
        res = max_matching(g, want_certificate=bool(args.certificate),
                           initial=initial, tracer=tracer)
    finally:
        if trace_fh:
            trace_fh.close()
    sys.stdout.write(format_matching(res.matching))
    if args.certificate and res.certificate is not None:
        with open(args.certificate, "w", encoding="utf-8") as fh:
            fh.write(format_certificate(res.certificate))
    if args.stats:
        print(json.dumps(res.stats(g)), file=sys.stderr)
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    initial = None
    if args.matching_in:
        initial = parse_matching(_read_text(args.matching_in), g.n)
    max_matching(g, initial=initial, tracer=_LineSink(sys.stdout))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    m = parse_matching(_read_text(args.matching), g.n)
    ok, problems = validate_matching(g, m)
    if not ok:
        for p in problems:
            print(f"invalid matching: {p}", file=sys.stderr)
        return EXIT_FAILED
    status = EXIT_OK
    if args.certificate:
        c = parse_certificate(_read_text(args.certificate), g.n)
        res = verify_certificate(g, m, c)
        print(res.verdict.value)
        if res.verdict is Verdict.INVALID:
            print(res.reason, file=sys.stderr)
            status = EXIT_FAILED
        elif res.verdict is Verdict.OK_BOUND_ONLY:
            print(res.reason, file=sys.stderr)
    else:
        print(f"valid matching of size {matching_size(m)}")
    if args.oracle:
        from .oracle import OracleLimitError, oracle_max_matching
        try:
            best = oracle_max_matching(g)
        except OracleLimitError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_USAGE
        size = matching_size(m)
        if size != best:
            print(f"oracle: maximum is {best}, matching has {size}",
                  file=sys.stderr)
            status = EXIT_FAILED
        else:
            print(f"oracle: maximum {best} confirmed")
    return status


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(args.family, args.n, args.m, args.seed)
    sys.stdout.write(spec.to_dimacs())
    return EXIT_OK


BENCH_FIELDS = ["family", "n_target", "n", "m", "matching_size", "iterations",
                "seconds", "delta_breaks"]


def bench_one(spec: GenSpec) -> dict:
    """Generate and solve one instance; returns a bench record."""
    g = spec.build()
    t0 = time.perf_counter()
    res = max_matching(g)
    dt = time.perf_counter() - t0
    return {
        "family": spec.family,
        "n_target": spec.n,
        "n": g.n,
        "m": g.m,
        "matching_size": res.size,
        "iterations": res.iterations,
        "seconds": round(dt, 4),
        "delta_breaks": res.delta_breaks,
    }


def cmd_bench(args: argparse.Namespace) -> int:
    specs = []
    for n in args.n:
        m = args.m if args.m is not None else (3 * n if args.family == "random"
                                               else None)
        specs.append(GenSpec(args.family, n, m, args.seed))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            records = list(ex.map(bench_one, specs))
    else:
        records = [bench_one(s) for s in specs]
    if args.format == "json":
        for r in records:
            print(json.dumps(r))
    else:
        w = csv.DictWriter(sys.stdout, fieldnames=BENCH_FIELDS,
                           lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({**r, "delta_breaks": " ".join(map(str, r["delta_breaks"]))})
    if args.plot:
        from .report import plot_bench
        plot_bench(records, args.plot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sapmatch",
        description="Maximum-cardinality matching in general graphs.")
    p.add_argument("-v", "--verbose", action="store_true",
                   help="log parser warnings")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute a maximum matching")
    s.add_argument("input", help="DIMACS edge file, or - for stdin")
    s.add_argument("--certificate", metavar="PATH",
                   help="write an optimality certificate")
    s.add_argument("--matching-in", metavar="PATH",
                   help="start from this matching instead of the empty one")
    s.add_argument("--stats", action="store_true",
                   help="print a JSON stats record to stderr")
    s.add_argument("--trace", metavar="PATH", help="write the event trace")
    s.set_defaults(func=cmd_solve)

    t = sub.add_parser("trace", help="print the event trace of a solve")
    t.add_argument("input")
    t.add_argument("--matching-in", metavar="PATH")
    t.set_defaults(func=cmd_trace)

    v = sub.add_parser("verify", help="check a matching and certificate")
    v.add_argument("graph")
    v.add_argument("matching")
    v.add_argument("--certificate", metavar="PATH")
    v.add_argument("--oracle", action="store_true",
                   help="compare with a brute-force maximum (small graphs)")
    v.set_defaults(func=cmd_verify)

    gp = sub.add_parser("gen", help="write a generated graph to stdout")
    gp.add_argument("--family", choices=FAMILIES, required=True)
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--m", type=int)
    gp.add_argument("--seed", type=int, default=0)
    gp.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="solve generated instances and report")
    b.add_argument("--family", choices=FAMILIES, required=True)
    b.add_argument("--n", type=int, nargs="+", required=True)
    b.add_argument("--m", type=int, help="edge count for random graphs "
                   "(default 3n)")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--format", choices=("csv", "json"), default="csv")
    b.add_argument("--plot", metavar="PATH",
                   help="also render iterations and time against n")
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
