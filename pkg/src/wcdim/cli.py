"""Command line interface: ``wcdim {wcdim,mis,construct,scan}``.

Machine-readable output (JSON / JSONL) goes to stdout, human-readable
summaries to stderr.  Exit codes: 0 success, 1 partial result (malformed scan
lines, failed ``--verify``), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from wcdim import constructions as cons
from wcdim.core import WcdimProfile, well_covered_space_basis, wcdim, wcdim_profile
from wcdim.graph import Graph, Graph6Error, contract_clique, parse_graph6, to_graph6
from wcdim.linalg import QQ, FieldSpec, prime_factors
from wcdim.mis import maximal_independent_sets
from wcdim.search import generate_all_graphs, iter_scan, min_order_report, ScanSummary, write_records

EXIT_OK, EXIT_PARTIAL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_graph(arg: str) -> Graph:
    text = sys.stdin.readline() if arg == "-" else arg
    try:
        return parse_graph6(text.strip())
    except Graph6Error as exc:
        raise UsageError(f"bad graph6 {text.strip()!r}: {exc}") from None


def _field(value: str) -> FieldSpec:
    try:
        return FieldSpec(int(value))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vertex_list(value: str) -> list[int]:
    try:
        return [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {value!r}") from None


# -- wcdim --------------------------------------------------------------------


def cmd_wcdim(args, out) -> int:
    g = _read_graph(args.graph6)
    fields = [QQ] + ([args.char] if args.char and args.char.characteristic else [])
    if args.profile:
        report = wcdim_profile(g).to_dict(to_graph6(g))
    else:
        report = {"graph6": to_graph6(g), "order": g.order}
    report["wcdim"] = {str(f): wcdim(g, f) for f in fields}
    if args.basis:
        f = fields[-1]
        report["basis"] = {"field": str(f), "vectors": [list(v) for v in well_covered_space_basis(g, f)]}
    out.write(_dump(report) + "\n")
    return EXIT_OK


# -- mis ----------------------------------------------------------------------


def cmd_mis(args, out) -> int:
    g = _read_graph(args.graph6)
    mis = maximal_independent_sets(g)
    for members in mis.as_lists():
        out.write(_dump(members) + "\n")
    out.write(_dump({"count": len(mis)}) + "\n")
    return EXIT_OK


# -- construct ----------------------------------------------------------------


def _profile_dict(p: WcdimProfile) -> dict:
    d = p.to_dict()
    d.pop("graph6")
    return d


def _same_profile(a: WcdimProfile, b: WcdimProfile) -> bool:
    return (
        a.wcdim_generic == b.wcdim_generic
        and a.critical_primes == b.critical_primes
        and a.wcdim_at == b.wcdim_at
    )


_WITNESS = {"g7": (cons.g7, 2, (2,), 3), "g8": (cons.g8, 1, (3,), 2), "g10": (cons.g10, 0, (5,), 1)}


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"construct {args.kind} needs --{', --'.join(missing)}")


def cmd_construct(args, out) -> int:
    kind = args.kind
    source = None
    labels: dict
    failures = []
    try:
        if kind in _WITNESS:
            named = _WITNESS[kind][0]()
        elif kind == "gk2":
            named = cons.g_k2()
        elif kind == "gn":
            _need(args, "n")
            named = cons.gn_family(args.n)
        elif kind == "h-of":
            _need(args, "input")
            source = _read_graph(args.input)
            named = cons.h_of(source)
        elif kind == "prime":
            _need(args, "p", "order")
            named = cons.graph_for_prime(args.p, args.order)
        elif kind == "inflate":
            _need(args, "input", "vertex", "size")
            source = _read_graph(args.input)
            base = cons.NamedGraph(source, {str(v): v for v in source.vertices()})
            named = cons.named_inflate(base, str(args.vertex), args.size)
        elif kind == "contract":
            _need(args, "input", "clique")
            source = _read_graph(args.input)
            if args.verify and not all(
                source.closed_neighborhood(args.clique[0]) == source.closed_neighborhood(v)
                for v in args.clique
            ):
                raise UsageError("clique members do not share closed neighbourhoods; nothing to verify")
            g, mapping = contract_clique(source, args.clique)
            named = None
            labels = {str(old): new for old, new in sorted(mapping.items())}
        else:  # pragma: no cover - argparse restricts choices
            raise UsageError(f"unknown construction {kind!r}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if named is not None:
        g, labels = named.graph, named.labels
    report = {"kind": kind, "graph6": to_graph6(g), "labels": labels}

    if args.verify:
        prof = wcdim_profile(g)
        report["profile"] = _profile_dict(prof)
        if kind in _WITNESS:
            _, generic, crit, at = _WITNESS[kind]
            if (prof.wcdim_generic, prof.critical_primes) != (generic, crit) or prof.wcdim_at[crit[0]] != at:
                failures.append(f"{kind}: expected generic {generic}, critical {crit} -> {at}")
        elif kind == "gn":
            crit = tuple(prime_factors(2 * args.n - 1))
            if prof.wcdim_generic != 1 or prof.critical_primes != crit or set(prof.wcdim_at.values()) != {2}:
                failures.append(f"gn: expected dimension 1, and 2 exactly at primes {crit}")
            if prof.mis_count != 2 * args.n + 4:
                failures.append(f"gn: expected {2 * args.n + 4} maximal independent sets")
        elif kind == "h-of":
            base = wcdim_profile(source)
            report["input_profile"] = _profile_dict(base)
            primes = sorted({2, *base.critical_primes, *prof.critical_primes})
            shifts = {"0": prof.wcdim_generic - base.wcdim_generic}
            shifts.update({str(p): prof.wcdim_over(p) - base.wcdim_over(p) for p in primes})
            report["shift"] = shifts
            for p, d in shifts.items():
                if d != (2 if p == "2" else 1):
                    failures.append(f"h-of: dimension shift {d} in characteristic {p}")
        elif kind == "prime":
            if args.p not in prof.critical_primes or g.order != args.order:
                failures.append(f"prime: {args.p} not critical or order != {args.order}")
        elif kind in ("inflate", "contract"):
            base = wcdim_profile(source)
            report["input_profile"] = _profile_dict(base)
            if not _same_profile(base, prof):
                failures.append(f"{kind}: profile changed")
        report["verified"] = not failures

    out.write(_dump(report) + "\n")
    for msg in failures:
        print(f"verification failed: {msg}", file=sys.stderr)
    return EXIT_PARTIAL if failures else EXIT_OK


# -- scan ---------------------------------------------------------------------


def _graph_source(args):
    if args.order is not None:
        return generate_all_graphs(args.order)
    if args.input == "-":
        return sys.stdin
    try:
        return open(args.input, "r", encoding="ascii", errors="replace")
    except OSError as exc:
        raise OSError(f"cannot read {args.input}: {exc}") from None


def cmd_scan(args, out) -> int:
    if (args.order is None) == (args.input is None):
        raise UsageError("scan needs exactly one of --order or --input")
    if args.order is not None and not 1 <= args.order <= 8:
        raise UsageError("--order must be in 1..8; use --input for larger orders")
    summary = ScanSummary()
    source = _graph_source(args)
    records = []

    def tracked():
        for rec in iter_scan(source, jobs=args.jobs, summary=summary):
            records.append(rec)
            yield rec

    try:
        write_records(tracked(), args.output, stream=out)
    finally:
        if hasattr(source, "close") and source is not sys.stdin:
            source.close()
    report = min_order_report(records, args.primes)
    summary_obj = json.loads(summary.to_json())
    summary_obj["report"] = {str(p): (None if v is None else {"order": v[0], "graph6": v[1]}) for p, v in report.items()}
    text = _dump(summary_obj)
    if args.summary:
        with open(args.summary, "w") as fh:
            fh.write(text + "\n")
    print(
        f"scanned {summary.graphs_scanned} graphs, {summary.dependent_found} characteristic-dependent, "
        f"{len(summary.malformed)} malformed, {summary.wall_time:.2f}s",
        file=sys.stderr,
    )
    for p, v in report.items():
        found = "none" if v is None else f"order {v[0]} ({v[1]})"
        print(f"  smallest with critical prime {p}: {found}", file=sys.stderr)
    if not args.summary:
        print(text, file=sys.stderr)
    return EXIT_PARTIAL if summary.malformed else EXIT_OK


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wcdim", description="Well-covered dimension of graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wcdim", help="well-covered dimension of one graph")
    p.add_argument("graph6", help="graph6 string, or - for stdin")
    p.add_argument("--char", type=_field, default=None, help="also report over GF(p)")
    p.add_argument("--profile", action="store_true", help="print the full profile")
    p.add_argument("--basis", action="store_true", help="append a well-covered space basis")
    p.set_defaults(func=cmd_wcdim)

    p = sub.add_parser("mis", help="list maximal independent sets")
    p.add_argument("graph6", help="graph6 string, or - for stdin")
    p.set_defaults(func=cmd_mis)

    p = sub.add_parser("construct", help="build a witness or constructed graph")
    p.add_argument("kind", choices=["g7", "g8", "g10", "gk2", "gn", "h-of", "prime", "inflate", "contract"])
    p.add_argument("--n", type=int, help="family parameter for gn")
    p.add_argument("--p", type=int, help="prime for the prime construction")
    p.add_argument("--order", type=int, help="target order for the prime construction")
    p.add_argument("--input", help="graph6 input for h-of / inflate / contract (- for stdin)")
    p.add_argument("--vertex", type=int, help="vertex to inflate")
    p.add_argument("--size", type=int, help="clique size for inflate")
    p.add_argument("--clique", type=_vertex_list, help="comma-separated clique for contract")
    p.add_argument("--verify", action="store_true", help="recompute the profile and check the expected formula")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("scan", help="scan graphs for characteristic-dependent dimension")
    p.add_argument("--order", type=int, help="scan every graph of this order (1..8)")
    p.add_argument("--input", help="graph6 file, one graph per line (- for stdin)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", help="JSONL output path (default stdout)")
    p.add_argument("--summary", help="write the summary JSON here instead of stderr")
    p.add_argument("--primes", type=_vertex_list, default=[2, 3, 5], help="primes for the minimum-order report")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
