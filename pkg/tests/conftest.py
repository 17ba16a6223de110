"""Shared fixtures and independent reference implementations (oracles).

Every oracle here deliberately avoids the code path it checks: plain loops
instead of bitmasks, parent walks instead of binary lifting, series instead
of quadrature, partition recursion independent of the search kernels.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

import pytest

from hardgadget.instances import BinaryTree, Partition, SignedGraph, WeightedGraph


def random_signed_graph(rng: random.Random, n: int, p: float | None = None) -> SignedGraph:
    if p is None:
        p = rng.choice([0.2, 0.35, 0.5, 0.65, 0.8])
    edges = [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < p]
    return SignedGraph(n, edges)


def naive_disagreements(g: SignedGraph, p: Partition) -> list[int]:
    """Direct per-pair double loop."""
    counts = [0] * g.n
    for u in range(1, g.n + 1):
        for v in range(u + 1, g.n + 1):
            positive = (u, v) in g.positive_edges
            together = p.cluster_of(u) == p.cluster_of(v)
            if positive != together:
                counts[u - 1] += 1
                counts[v - 1] += 1
    return counts


def all_partitions(n: int):
    """Every set partition of [1..n] as a list of blocks."""
    if n == 0:
        yield []
        return
    for smaller in all_partitions(n - 1):
        for i in range(len(smaller)):
            yield smaller[:i] + [smaller[i] + [n]] + smaller[i + 1 :]
        yield smaller + [[n]]


def linf_opt_by_enumeration(g: SignedGraph) -> int:
    """Independent l_inf optimum: try every partition, plain counting."""
    best = g.n
    for blocks in all_partitions(g.n):
        assignment = {v: i for i, block in enumerate(blocks) for v in block}
        counts = naive_disagreements(g, Partition(g.n, assignment))
        best = min(best, max(counts, default=0))
    return best


def naive_hc_value(g: WeightedGraph, t: BinaryTree) -> float:
    """Pair-by-pair lca via explicit ancestor chains."""
    parents: dict[int, object] = {}
    leafcnt: dict[int, int] = {}
    node_of_leaf = {}
    ids = {}

    def walk(node) -> int:
        me = ids.setdefault(id(node), len(ids))
        if isinstance(node, int):
            node_of_leaf[node] = me
            leafcnt[me] = 1
            return 1
        total = 0
        for child in node:
            walk(child)
            parents[ids[id(child)]] = me
            total += leafcnt[ids[id(child)]]
        leafcnt[me] = total
        return total

    walk(t.root)

    def ancestors(x: int) -> list[int]:
        chain = [x]
        while chain[-1] in parents:
            chain.append(parents[chain[-1]])
        return chain

    terms = []
    for u, v, w in g.weighted_edges:
        au = ancestors(node_of_leaf[u])
        av = set(ancestors(node_of_leaf[v]))
        lca = next(x for x in au if x in av)
        terms.append(w * leafcnt[lca])
    return math.fsum(terms)


def random_tree(rng: random.Random, n: int) -> BinaryTree:
    """Random leaf-labeled binary tree by uniform random edge insertion."""
    root = 1
    for leaf in range(2, n + 1):
        root = _insert_at(root, leaf, rng)
    return BinaryTree(root)


def _insert_at(node, leaf: int, rng: random.Random):
    """Insert `leaf` above a uniformly chosen edge (or the root)."""
    edges = _count_positions(node)
    choice = rng.randrange(edges)
    new_node, _ = _insert_pos(node, leaf, choice)
    return new_node


def _count_positions(node) -> int:
    if isinstance(node, int):
        return 1
    return 1 + _count_positions(node[0]) + _count_positions(node[1])


def _insert_pos(node, leaf: int, k: int):
    if k == 0:
        return (node, leaf), -1
    if isinstance(node, int):
        return node, k - 1
    k -= 1
    left, k = _insert_pos(node[0], leaf, k)
    if k < 0:
        return (left, node[1]), -1
    right, k = _insert_pos(node[1], leaf, k)
    if k < 0:
        return (node[0], right), -1
    return node, k


def tetrachoric_gamma(rho: float, a: float, b: float, terms: int = 220) -> float:
    """Independent bivariate quadrant probability via the tetrachoric series:
    Phi2(h, k, rho) = Phi(h)Phi(k) + pdf(h)pdf(k) * sum rho^{j+1}/(j+1)! He_j(h) He_j(k)."""
    h = _phi_inv_bisect(a)
    k = _phi_inv_bisect(b)
    phi_h = 0.5 * math.erfc(-h / math.sqrt(2))
    phi_k = 0.5 * math.erfc(-k / math.sqrt(2))
    pdf_h = math.exp(-0.5 * h * h) / math.sqrt(2 * math.pi)
    pdf_k = math.exp(-0.5 * k * k) / math.sqrt(2 * math.pi)
    total = phi_h * phi_k
    he_h_prev, he_h = 0.0, 1.0
    he_k_prev, he_k = 0.0, 1.0
    rho_pow = rho
    factorial = 1.0
    for j in range(terms):
        total += rho_pow / factorial * he_h * he_k * pdf_h * pdf_k
        he_h, he_h_prev = h * he_h - j * he_h_prev, he_h
        he_k, he_k_prev = k * he_k - j * he_k_prev, he_k
        rho_pow *= rho
        factorial *= j + 2
    return total


def _phi_inv_bisect(p: float, iters: int = 200) -> float:
    lo, hi = -10.0, 10.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if 0.5 * math.erfc(-mid / math.sqrt(2)) < p:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
