"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json]

Each kernel is fed identical inputs through both implementations.  The
end-to-end row scans every order-7 graph in a fresh interpreter, once with
the default backend and once with WCDIM_PURE_PYTHON=1.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time

from wcdim import _pure
from wcdim.core import associated_matrix
from wcdim.graph import Graph

try:
    from wcdim import _kernels
except ImportError:
    sys.exit("compiled kernels are not built; run `pip install --no-build-isolation -e .` first")


def random_graph(rng, order, density):
    edges = [(u, v) for u in range(order) for v in range(u + 1, order) if rng.random() < density]
    return Graph.from_edges(order, edges)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def workloads(rng):
    mis_graphs = [random_graph(rng, 22, 0.25) for _ in range(20)]
    canon_graphs = [random_graph(rng, 8, 0.5) for _ in range(200)]
    mats = [associated_matrix(random_graph(rng, 10, 0.4)) for _ in range(200)]
    mats = [(m.entries, m.cols) for m in mats if m.rows]

    def mis(k):
        return lambda: [k.maximal_independent_sets(g.adj, g.order) for g in mis_graphs]

    def canon(k):
        return lambda: [k.canonical_bits(g.adj, g.order) for g in canon_graphs]

    def rank(k):
        return lambda: [k.rank_mod_p(e, c, 3) for e, c in mats]

    def snf(k):
        return lambda: [k.invariant_factors(e, c) for e, c in mats]

    return [
        ("maximal_independent_sets (20 graphs, n=22)", mis),
        ("canonical_bits (200 graphs, n=8)", canon),
        ("rank_mod_p (200 matrices, p=3)", rank),
        ("invariant_factors (200 matrices)", snf),
    ]


SCAN_SNIPPET = (
    "import time; from wcdim.search import generate_all_graphs, scan_stream;"
    "g = list(generate_all_graphs(7)); t = time.perf_counter(); scan_stream(g);"
    "print(time.perf_counter() - t)"
)


def scan_time(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("WCDIM_PURE_PYTHON", None)
    if pure:
        env["WCDIM_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", SCAN_SNIPPET], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    args = ap.parse_args()

    rng = random.Random(1)
    rows = []
    for name, make in workloads(rng):
        assert make(_pure)() == make(_kernels)(), name
        rows.append((name, best_of(make(_pure), args.repeat), best_of(make(_kernels), args.repeat)))
    rows.append(("scan all order-7 graphs (end to end)", scan_time(True), scan_time(False)))

    if args.json:
        print(json.dumps([{"workload": n, "python_s": p, "cython_s": c, "speedup": p / c} for n, p, c in rows], indent=2))
        return
    width = max(len(n) for n, _, _ in rows)
    print(f"{'workload':<{width}}  {'python':>9}  {'cython':>9}  {'speedup':>7}")
    for n, p, c in rows:
        print(f"{n:<{width}}  {p:9.4f}  {c:9.4f}  {p / c:6.1f}x")


if __name__ == "__main__":
    main()
