"""Dissimilarity hierarchical clustering engine: the maximization objective,
an exhaustive small-scale tree solver, and the bound curves behind the
0.9189-vs-0.9159 gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

from .gaussian import DEFAULT_TOL, gamma
from .instances import BinaryTree, Node, WeightedGraph, serialize_instance

TREE_BRUTEFORCE_MAX_N = 10


def _index_tree(t: BinaryTree):
    """Parent array, depth array, leaf-count array, and leaf -> node-id map."""
    parents = [-1]
    depths = [0]
    leafcnt = [0]
    leaf_node: dict[int, int] = {}

    def walk(node: Node, me: int) -> int:
        if isinstance(node, int):
            leaf_node[node] = me
            leafcnt[me] = 1
            return 1
        total = 0
        for child in node:
            cid = len(parents)
            parents.append(me)
            depths.append(depths[me] + 1)
            leafcnt.append(0)
            total += walk(child, cid)
        leafcnt[me] = total
        return total

    walk(t.root, 0)
    return parents, depths, leafcnt, leaf_node


def hc_value(g: WeightedGraph, t: BinaryTree, normalized: bool = False) -> float:
    """Sum over weighted pairs of w * (#leaves under the pair's lowest common
    ancestor); divide by n when `normalized`."""
    if t.n != g.n:
        raise ValueError(f"tree has {t.n} leaves, graph has {g.n} vertices")
    parents, depths, leafcnt, leaf_node = _index_tree(t)
    # binary lifting table for lca queries
    max_pow = max(1, math.ceil(math.log2(max(depths) + 1)) if max(depths) else 1)
    up = [parents]
    for _ in range(max_pow):
        prev = up[-1]
        up.append([prev[x] if x >= 0 else -1 for x in prev])

    def lca(x: int, y: int) -> int:
        if depths[x] < depths[y]:
            x, y = y, x
        diff = depths[x] - depths[y]
        level = 0
        while diff:
            if diff & 1:
                x = up[level][x]
            diff >>= 1
            level += 1
        if x == y:
            return x
        for level in range(len(up) - 1, -1, -1):
            if up[level][x] != up[level][y]:
                x, y = up[level][x], up[level][y]
        return parents[x]

    total = math.fsum(
        w * leafcnt[lca(leaf_node[u], leaf_node[v])] for u, v, w in g.weighted_edges
    )
    return total / g.n if normalized else total


def enumerate_trees(n: int) -> Iterator[Node]:
    """All (2n-3)!! leaf-labeled binary trees on leaves 1..n, generated by
    inserting leaf k into every edge (and above the root) of each tree on
    k-1 leaves."""
    if n < 1:
        raise ValueError("need at least one leaf")

    def insertions(node: Node, leaf: int) -> Iterator[Node]:
        yield (node, leaf)
        if not isinstance(node, int):
            for left in insertions(node[0], leaf):
                yield (left, node[1])
            for right in insertions(node[1], leaf):
                yield (node[0], right)

    def build(k: int) -> Iterator[Node]:
        if k == 1:
            yield 1
            return
        for smaller in build(k - 1):
            yield from insertions(smaller, k)

    return build(n)


def _subset_weight_table(g: WeightedGraph) -> list[float]:
    """W[S] = total weight inside vertex subset S (bitmask over 1..n)."""
    n = g.n
    wmat = [[0.0] * n for _ in range(n)]
    for u, v, w in g.weighted_edges:
        wmat[u - 1][v - 1] = w
        wmat[v - 1][u - 1] = w
    table = [0.0] * (1 << n)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        acc = table[rest]
        row = wmat[low]
        r = rest
        while r:
            v = (r & -r).bit_length() - 1
            r &= r - 1
            acc += row[v]
        table[s] = acc
    return table


def _tree_value_masks(node: Node, table: list[float]) -> tuple[int, float]:
    """(leaf bitmask, objective value) of a subtree via the subset table."""
    if isinstance(node, int):
        return 1 << (node - 1), 0.0
    lmask, lval = _tree_value_masks(node[0], table)
    rmask, rval = _tree_value_masks(node[1], table)
    mask = lmask | rmask
    cross = table[mask] - table[lmask] - table[rmask]
    return mask, lval + rval + mask.bit_count() * cross


def hc_opt_bruteforce(g: WeightedGraph) -> tuple[BinaryTree, float]:
    """Maximizing tree by exhaustive enumeration (n <= 10); ties broken by
    canonical serialization order."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    if g.n > TREE_BRUTEFORCE_MAX_N:
        raise ValueError(f"tree brute force limited to n <= {TREE_BRUTEFORCE_MAX_N}")
    table = _subset_weight_table(g)
    best_val = -1.0
    best_key: str | None = None
    best_tree: BinaryTree | None = None
    for root in enumerate_trees(g.n):
        _, val = _tree_value_masks(root, table)
        if val > best_val:
            best_val, best_tree = val, BinaryTree(root)
            best_key = serialize_instance(best_tree)
        elif val == best_val:
            tree = BinaryTree(root)
            key = serialize_instance(tree)
            if key < best_key:
                best_key, best_tree = key, tree
    assert best_tree is not None
    return best_tree, best_val


# ---------------------------------------------------------------------------
# bound curves


def no_case_single_bound(beta: float, rho: float, tolerance: float = DEFAULT_TOL) -> float:
    """Objective cap when some tree node holds a beta fraction of leaves:
    (1 - G) + beta * G with G the quadrant probability at (beta, beta)."""
    g = gamma(rho, beta, beta, tolerance)
    return (1.0 - g) + beta * g


def no_case_split_bound(
    beta1: float, beta2: float, rho: float, tolerance: float = DEFAULT_TOL
) -> float:
    """Objective cap when a node's two children hold beta1 and beta2
    fractions: (1 - G1 - G2) + beta1 * G1 + beta2 * G2."""
    if beta1 < 0 or beta2 < 0 or beta1 + beta2 > 1.0 + 1e-12:
        raise ValueError("children fractions must be nonnegative with sum <= 1")
    g1 = gamma(rho, beta1, beta1, tolerance)
    g2 = gamma(rho, beta2, beta2, tolerance)
    return (1.0 - g1 - g2) + beta1 * g1 + beta2 * g2


def yes_case_value_limit(alpha: float) -> float:
    """Limit of the completion-certificate level series: alpha / (1 - (1-alpha)/2)."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha {alpha} outside [0, 1]")
    return alpha / (1.0 - (1.0 - alpha) / 2.0)


class HardnessRatio(NamedTuple):
    ratio: float
    no_case_bound: float
    yes_case_bound: float


def hardness_ratio() -> HardnessRatio:
    """The gap constant 9159/9189 with its two source bounds."""
    return HardnessRatio(9159 / 9189, 0.9159, 0.9189)


@dataclass(frozen=True)
class ExpansionReport:
    induced_weight: float
    beta: float
    gamma_value: float

    @property
    def margin(self) -> float:
        return self.induced_weight - self.gamma_value


def check_expansion(g: WeightedGraph, subset: set[int], rho: float) -> ExpansionReport:
    """Total weight induced by a vertex subset, reported against the quadrant
    probability at its size fraction (observational; no pass/fail)."""
    for v in subset:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} out of range [1..{g.n}]")
    induced = math.fsum(w for u, v, w in g.weighted_edges if u in subset and v in subset)
    beta = len(subset) / g.n if g.n else 0.0
    return ExpansionReport(induced, beta, gamma(rho, beta, beta))


def locate_max(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    coarse_step: float = 1e-3,
    fine_step: float = 1e-5,
) -> tuple[float, float]:
    """Argmax on [lo, hi]: coarse grid, then a fine grid around the best point."""
    if hi < lo:
        raise ValueError("empty interval")

    def grid_best(a: float, b: float, step: float) -> tuple[float, float]:
        count = max(1, round((b - a) / step))
        best_x, best_v = a, f(a)
        for i in range(1, count + 1):
            x = a + (b - a) * i / count
            v = f(x)
            if v > best_v:
                best_x, best_v = x, v
        return best_x, best_v

    x0, _ = grid_best(lo, hi, coarse_step)
    return grid_best(max(lo, x0 - coarse_step), min(hi, x0 + coarse_step), fine_step)


def single_bound_curve(
    rho: float, lo: float = 0.6, hi: float = 0.88, step: float = 1e-3
) -> list[tuple[float, float]]:
    count = max(1, round((hi - lo) / step))
    return [
        (beta, no_case_single_bound(beta, rho))
        for beta in (lo + (hi - lo) * i / count for i in range(count + 1))
    ]


def split_bound_curve(
    rho: float,
    lo: float = 0.44,
    hi: float = 0.88,
    cap: float = 0.88,
    step: float = 1e-3,
) -> list[tuple[float, float, float]]:
    count = max(1, round((hi - lo) / step))
    rows = []
    for i in range(count + 1):
        beta1 = lo + (hi - lo) * i / count
        beta2 = max(0.0, cap - beta1)
        rows.append((beta1, beta2, no_case_split_bound(beta1, beta2, rho)))
    return rows
