"""Backend agreement: the compiled kernels must reproduce the pure twins."""

import math
import random

import pytest

from hardgadget._kernels import IMPLEMENTATION, pure
from tests.conftest import random_signed_graph

try:
    from hardgadget._kernels import speed
except ImportError:
    speed = None

needs_compiled = pytest.mark.skipif(speed is None, reason="compiled kernels not built")


def bfs_order(g):
    from hardgadget.cc_engine import _bfs_order

    return _bfs_order(g)


@needs_compiled
def test_linf_feasible_backends_agree():
    rng = random.Random(99)
    for _ in range(120):
        n = rng.randint(1, 12)
        g = random_signed_graph(rng, n)
        adj = g.adjacency_masks()
        order = bfs_order(g)
        for t in (0, 1, 2, 3):
            got_p = pure.linf_feasible(n, adj, t, order, None)
            got_c = speed.linf_feasible(n, adj, t, order, None)
            assert got_p == got_c  # identical verdict and identical witness


@needs_compiled
def test_partition_opt_backends_agree():
    rng = random.Random(1234)
    for _ in range(60):
        n = rng.randint(1, 9)
        g = random_signed_graph(rng, n)
        adj = g.adjacency_masks()
        vp, lp = pure.partition_opt(n, adj, None)
        vc, lc = speed.partition_opt(n, adj, None)
        assert (vp, lp) == (vc, lc)
        for q in (1.0, 2.0):
            vp, lp = pure.partition_opt(n, adj, q)
            vc, lc = speed.partition_opt(n, adj, q)
            assert lp == lc
            assert vp == pytest.approx(vc, abs=1e-12)


@needs_compiled
def test_linf_feasible_multiword_masks():
    # exercises the multi-word bitset path (n > 64) on both backends
    rng = random.Random(5)
    n = 90
    edges = []
    for v in range(2, n + 1):
        edges.append((rng.randint(1, v - 1), v))  # random spanning tree
    extra = {(rng.randint(1, n - 1), n) for _ in range(40)}
    from hardgadget.instances import SignedGraph

    g = SignedGraph(n, set(edges) | {(min(a, b), max(a, b)) for a, b in extra if a != b})
    adj = g.adjacency_masks()
    order = bfs_order(g)
    for t in (2, 3):
        assert pure.linf_feasible(n, adj, t, order, None) == speed.linf_feasible(
            n, adj, t, order, None
        )


def test_backend_selected():
    assert IMPLEMENTATION in ("pure", "compiled")
