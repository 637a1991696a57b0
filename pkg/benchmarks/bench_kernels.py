"""Benchmark the enumeration kernels (compiled vs pure Python) on the facet
oracle's real workload, then show how far the shedding engine reaches past
brute-force enumeration.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from ferrers3d import _purecomplex, box, has_projection_property, kernels, validate
from ferrers3d.engine import Engine
from ferrers3d.errors import TooLarge
from ferrers3d.families import enumerate_diagrams
from ferrers3d.minors import leading_edges
from ferrers3d.oracle import complex_summary

try:
    from ferrers3d import _fastcomplex
except ImportError:
    _fastcomplex = None


def adjacency(diagram):
    verts = sorted(diagram.points())
    index = {p: t for t, p in enumerate(verts)}
    adj = [0] * len(verts)
    for e in leading_edges(verts):
        p, q = tuple(e)
        adj[index[p]] |= 1 << index[q]
        adj[index[q]] |= 1 << index[p]
    return adj


def time_kernel(module, graphs, repeat):
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        for adj in graphs:
            module.maximal_independent_sets(adj)
            module.count_independent_sets_by_size(adj)
        best = min(best, time.perf_counter() - started)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    graphs = [adjacency(d) for d in enumerate_diagrams(3, 3, 3) if has_projection_property(d)]
    print(f"workload: {len(graphs)} projection-property diagrams in [3]^3 "
          f"(facet enumeration + face counts each)")

    pure = time_kernel(_purecomplex, graphs, args.repeat)
    print(f"  pure python : {pure * 1000:9.1f} ms")
    if _fastcomplex is not None:
        fast = time_kernel(_fastcomplex, graphs, args.repeat)
        print(f"  cython      : {fast * 1000:9.1f} ms   ({pure / fast:5.1f}x faster)")
    else:
        print("  cython      : not built (pip install -e . rebuilds it)")
    print(f"  selected at import: {kernels.IMPLEMENTATION}")

    print("\nrecursion vs enumeration:")
    cases = [
        ("[3]^3 box (27 points)", box(3, 3, 3)),
        ("[4]^3 box (64 points)", box(4, 4, 4)),
        ("30-point staircase", validate([[5, 5, 5, 4, 1], [4, 4, 2]])),
    ]
    for label, diagram in cases:
        engine = Engine()
        started = time.perf_counter()
        rep = engine.invariants(diagram)
        engine_time = time.perf_counter() - started
        started = time.perf_counter()
        try:
            complex_summary(diagram.points(), limit=27)
            oracle_time = f"{time.perf_counter() - started:8.3f}s"
        except TooLarge:
            oracle_time = "refused (too large)"
        print(f"  {label:24s} engine {engine_time:8.3f}s   facet oracle {oracle_time}   "
              f"reg={rep.reg} e={rep.mult}")


if __name__ == "__main__":
    main()
