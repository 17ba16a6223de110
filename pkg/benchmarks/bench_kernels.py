"""Benchmark the compiled search kernels against their pure-Python twins.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import itertools
import random
import time

from hardgadget._kernels import pure
from hardgadget.cc_engine import _bfs_order
from hardgadget.cc_reduction import reduce_cc
from hardgadget.generators import gen_h3
from hardgadget.instances import Hypergraph3


def _random_signed_graph(rng, n, p=0.5):
    from hardgadget.instances import SignedGraph

    edges = [
        (u, v)
        for u, v in itertools.combinations(range(1, n + 1), 2)
        if rng.random() < p
    ]
    return SignedGraph(n, edges)


def time_call(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    try:
        from hardgadget._kernels import speed
    except ImportError:
        raise SystemExit("compiled kernels are not built; run pip install -e .")

    rng = random.Random(1)
    rows = []

    # l_inf feasibility on reduced flower/bouquet instances
    for name, h in [
        ("reduce(n=4,m=3 chain)", Hypergraph3(4, [(1, 2, 3), (2, 3, 4), (3, 4, 1)])),
        ("reduce(n=6,m=3 mixed)", gen_h3(6, 3, 17, "2colorable")),
    ]:
        g, _ = reduce_cc(h)
        adj = g.adjacency_masks()
        order = _bfs_order(g)
        t_pure = time_call(pure.linf_feasible, g.n, adj, 3, order, None)
        t_fast = time_call(speed.linf_feasible, g.n, adj, 3, order, None)
        rows.append((f"linf_feasible {name} n_G={g.n}", t_pure, t_fast))

    # brute-force partition enumeration
    sizes = (9, 10) if args.quick else (10, 11, 12)
    for n in sizes:
        g = _random_signed_graph(rng, n)
        adj = g.adjacency_masks()
        t_pure = time_call(pure.partition_opt, n, adj, None, repeat=1)
        t_fast = time_call(speed.partition_opt, n, adj, None, repeat=1)
        rows.append((f"partition_opt n={n}", t_pure, t_fast))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, t_pure, t_fast in rows:
        print(f"{name:<{width}}  {t_pure:>9.4f}s  {t_fast:>9.4f}s  {t_pure / t_fast:>7.1f}x")


if __name__ == "__main__":
    main()
