"""Benchmark the compiled kernels against the pure-Python fallback.

Kernel-level timings call both backends directly on identical inputs;
the end-to-end section times the full facet pipeline in subprocesses, one
with the compiled backend and one forced to pure Python.

Usage: python benchmarks/bench_kernels.py [--scale N] [--skip-e2e]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time


def make_workload(scale: int, rng: random.Random):
    n_refs = 4000 * scale
    n_symbols = 1500 * scale
    n_values = 800 * scale
    rows = []
    for _ in range(n_refs):
        k = rng.randint(1, 12)
        rows.append(sorted(rng.sample(range(n_symbols), k)))
    groups = []
    for _ in range(n_values):
        k = rng.randint(1, 20)
        groups.append(sorted(rng.sample(range(n_refs), k)))
    return n_symbols, rows, groups


def time_call(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(scale: int) -> None:
    from hyperfacet._kernels import py_kernels

    try:
        from hyperfacet._kernels import _ckernels
    except ImportError:
        print("compiled kernels not built; kernel comparison skipped")
        return

    rng = random.Random(1)
    n_symbols, rows, groups = make_workload(scale, rng)
    edge_rows = groups  # reuse as hyperedges over the ref universe

    cases = [
        ("union_rows", (groups, rows, n_symbols)),
        ("group_rows", (rows,)),
        ("edge_components", (len(rows), edge_rows)),
    ]
    print(f"kernel-level ({len(rows)} rows, {len(groups)} groups, {n_symbols} symbols)")
    print(f"{'kernel':<18}{'python':>12}{'compiled':>12}{'speedup':>10}")
    for name, args in cases:
        py_fn = getattr(py_kernels, name)
        c_fn = getattr(_ckernels, name)
        assert py_fn(*args) == c_fn(*args), f"backend mismatch in {name}"
        t_py = time_call(py_fn, *args)
        t_c = time_call(c_fn, *args)
        print(f"{name:<18}{t_py * 1e3:>10.1f}ms{t_c * 1e3:>10.1f}ms{t_py / t_c:>9.1f}x")


E2E_SNIPPET = r"""
import json, random, sys, time
from hyperfacet import (DatasetStore, FacetPair, Hyperedge, Hypergraph,
                        PhysicalEntity, SchemaHypergraph, SearchResult,
                        KERNEL_BACKEND, build_raw_facet,
                        build_reference_index, reduce_facet)

scale = int(sys.argv[1])
rng = random.Random(5)
n_refs, n_kw, n_org = 4000 * scale, 1200 * scale, 400 * scale
types = ("kw", "org")
schema = SchemaHypergraph(Hypergraph(types, (Hyperedge("e1", types),)))
entities = {}
for i in range(n_refs):
    kws = frozenset(f"kw{rng.randint(0, n_kw - 1)}" for _ in range(rng.randint(1, 8)))
    orgs = frozenset(f"org{rng.randint(0, n_org - 1)}" for _ in range(rng.randint(2, 10)))
    entities[f"r{i:06d}"] = PhysicalEntity(f"r{i:06d}", {"kw": kws, "org": orgs})
store = DatasetStore(schema, entities)
refs = SearchResult(frozenset(store.refs))
t0 = time.perf_counter()
index = build_reference_index(store, refs, FacetPair("kw", "org"))
raw = build_raw_facet(index, store)
red = reduce_facet(raw)
elapsed = time.perf_counter() - t0
print(json.dumps({"backend": KERNEL_BACKEND, "seconds": elapsed,
                  "edges": len(raw.carrier.edges),
                  "reduced_edges": len(red.carrier.base.edges)}))
"""


def bench_end_to_end(scale: int) -> None:
    results = {}
    for label, env_extra in (("compiled", {}), ("python", {"HYPERFACET_PURE_PYTHON": "1"})):
        env = dict(os.environ, **env_extra)
        proc = subprocess.run(
            [sys.executable, "-c", E2E_SNIPPET, str(scale)],
            capture_output=True,
            text=True,
            env=env,
            check=True,
        )
        results[label] = json.loads(proc.stdout)
    print("\nend-to-end facet pipeline (index -> raw -> reduced)")
    for label, r in results.items():
        print(
            f"{label:<10} backend={r['backend']:<7} {r['seconds'] * 1e3:8.1f}ms"
            f"  ({r['edges']} edges, {r['reduced_edges']} reduced)"
        )
    assert results["compiled"]["edges"] == results["python"]["edges"]
    speedup = results["python"]["seconds"] / results["compiled"]["seconds"]
    print(f"speedup: {speedup:.1f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", type=int, default=1, help="workload multiplier")
    parser.add_argument("--skip-e2e", action="store_true")
    args = parser.parse_args()
    bench_kernels(args.scale)
    if not args.skip_e2e:
        bench_end_to_end(args.scale)


if __name__ == "__main__":
    main()
