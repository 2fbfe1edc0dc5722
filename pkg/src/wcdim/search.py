"""Exhaustive search for graphs whose well-covered dimension depends on the
field characteristic.

Graphs of order <= 8 are generated here; larger orders are read from
isomorph-free graph6 files produced by an external generator.
"""
from __future__ import annotations

import json
import logging
import multiprocessing
import os
import tempfile
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import IO, Iterable, Iterator

from wcdim.core import wcdim_profile
from wcdim.graph import CANONICAL_MAX_ORDER, Graph, Graph6Error, canonical_form, parse_graph6, to_graph6

__all__ = [
    "ScanRecord",
    "ScanSummary",
    "generate_all_graphs",
    "scan_stream",
    "min_order_report",
    "write_records",
    "read_records",
]

log = logging.getLogger(__name__)

KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


@lru_cache(maxsize=None)
def _representatives(order: int) -> tuple[bytes, ...]:
    """Canonical forms of all graphs on ``order`` vertices, sorted.

    Every graph arises from a graph on one vertex fewer by adding a vertex of
    maximum degree, so only neighbourhoods that leave the new vertex with
    maximum degree are tried.
    """
    if order == 1:
        return (canonical_form(Graph.empty(1)),)
    seen = set()
    for code in _representatives(order - 1):
        base = parse_graph6(code)
        n = base.order
        degs = [base.degree(v) for v in range(n)]
        for nb in range(1 << n):
            d = nb.bit_count()
            if any(degs[v] + (nb >> v & 1) > d for v in range(n)):
                continue
            adj = [row | ((nb >> v & 1) << n) for v, row in enumerate(base.adj)]
            adj.append(nb)
            seen.add(canonical_form(Graph(order, adj)))
    return tuple(sorted(seen))


def generate_all_graphs(order: int) -> Iterator[Graph]:
    """One graph per isomorphism class on ``order`` vertices (order <= 8),
    in increasing order of canonical form."""
    if not 1 <= order <= CANONICAL_MAX_ORDER:
        raise ValueError(
            f"built-in generation covers orders 1..{CANONICAL_MAX_ORDER}; "
            "feed larger orders to scan_stream from a graph6 file"
        )
    for code in _representatives(order):
        yield parse_graph6(code)


@dataclass(frozen=True)
class ScanRecord:
    graph6: str
    order: int
    mis_count: int
    wcdim_generic: int
    invariant_factors: list[int]
    critical: list[dict[str, int]]
    source_index: int

    def critical_primes(self) -> list[int]:
        return [c["p"] for c in self.critical]

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "ScanRecord":
        return cls(**json.loads(line))


@dataclass
class ScanSummary:
    graphs_scanned: int = 0
    dependent_found: int = 0
    min_order_per_prime: dict[int, int] = field(default_factory=dict)
    malformed: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    def to_json(self) -> str:
        d = asdict(self)
        d["min_order_per_prime"] = {str(p): o for p, o in sorted(self.min_order_per_prime.items())}
        return json.dumps(d, separators=(",", ":"))


def _profile_line(item: tuple[int, str]):
    """Worker task: ``(index, graph6)`` -> record dict, None, or an error."""
    index, text = item
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        return index, "error", str(exc)
    prof = wcdim_profile(g)
    if not prof.critical_primes:
        return index, None, None
    return index, "record", ScanRecord(
        graph6=to_graph6(g),
        order=prof.order,
        mis_count=prof.mis_count,
        wcdim_generic=prof.wcdim_generic,
        invariant_factors=list(prof.invariant_factors),
        critical=[{"p": p, "wcdim": prof.wcdim_at[p]} for p in prof.critical_primes],
        source_index=index,
    )


def _as_lines(graphs: Iterable[Graph | str | bytes]) -> Iterator[tuple[int, str]]:
    for i, item in enumerate(graphs):
        if isinstance(item, Graph):
            yield i, to_graph6(item)
        else:
            text = item.decode("ascii", "replace") if isinstance(item, bytes) else item
            yield i, text.rstrip("\r\n")


def iter_scan(
    graphs: Iterable[Graph | str | bytes],
    jobs: int = 1,
    summary: ScanSummary | None = None,
    chunksize: int = 64,
) -> Iterator[ScanRecord]:
    """Profile every graph and yield records for the dependent ones, in input
    order.  ``summary`` (if given) is filled in as the scan proceeds.

    Blank lines are skipped; lines that fail to parse are logged in
    ``summary.malformed`` with their 1-based line number.
    """
    if summary is None:
        summary = ScanSummary()
    start = time.perf_counter()
    lines = ((i, t) for i, t in _as_lines(graphs) if t.strip())
    if jobs > 1:
        ctx = multiprocessing.get_context("fork" if hasattr(os, "fork") else "spawn")
        pool = ctx.Pool(jobs)
        results = pool.imap(_profile_line, lines, chunksize=chunksize)
    else:
        pool = None
        results = map(_profile_line, lines)
    try:
        for index, kind, payload in results:
            if kind == "error":
                summary.malformed.append({"line": index + 1, "error": payload})
                log.warning("line %d: %s", index + 1, payload)
                continue
            summary.graphs_scanned += 1
            if kind == "record":
                summary.dependent_found += 1
                for p in payload.critical_primes():
                    cur = summary.min_order_per_prime.get(p)
                    if cur is None or payload.order < cur:
                        summary.min_order_per_prime[p] = payload.order
                yield payload
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()
        summary.wall_time = time.perf_counter() - start


def scan_stream(
    graphs: Iterable[Graph | str | bytes], jobs: int = 1
) -> tuple[list[ScanRecord], ScanSummary]:
    summary = ScanSummary()
    records = list(iter_scan(graphs, jobs=jobs, summary=summary))
    return records, summary


def min_order_report(
    records: Iterable[ScanRecord], primes: Iterable[int]
) -> dict[int, tuple[int, str] | None]:
    """Smallest-order record per prime; ties go to the smaller graph6 string."""
    wanted = list(primes)
    best: dict[int, tuple[int, str] | None] = {p: None for p in wanted}
    for rec in records:
        for p in rec.critical_primes():
            if p in best:
                cand = (rec.order, rec.graph6)
                if best[p] is None or cand < best[p]:
                    best[p] = cand
    return best


def write_records(records: Iterable[ScanRecord], path: str | os.PathLike | None, stream: IO | None = None) -> int:
    """Write JSONL, atomically replacing ``path``; return the record count."""
    if path is None:
        n = 0
        for rec in records:
            stream.write(rec.to_json() + "\n")
            n += 1
        return n
    path = os.fspath(path)
    fd, tmp = tempfile.mkstemp(prefix=".scan-", dir=os.path.dirname(os.path.abspath(path)))
    n = 0
    try:
        with os.fdopen(fd, "w") as fh:
            for rec in records:
                fh.write(rec.to_json() + "\n")
                n += 1
        # mkstemp creates 0600; give the result ordinary permissions
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return n


def read_records(path: str | os.PathLike) -> list[ScanRecord]:
    with open(path) as fh:
        return [ScanRecord.from_json(line) for line in fh if line.strip()]
