"""Max-2Lin(q) to dissimilarity hierarchical clustering reduction.

The product instance lives on vertices (variable, sign vector): variable x_i
paired with f in {±1}^{Z_q}.  The weight of an unordered vertex pair is the
exact probability of the sampling procedure: pick a uniform variable x_i, two
independent uniform constraints incident to it (with replacement), written as
x_j - x_i = a and x_k - x_i = b, then draw f, g with each coordinate pair
(f_{r+a}, g_{r+b}) independently rho-correlated over {±1}.  Output
{(x_j, f), (x_k, g)}; identical-vertex outputs are discarded and the
remaining mass renormalized to total 1 (the dropped mass is recorded in the
graph metadata).

Sign vectors are encoded as integers: bit r of the code is 1 iff f_r = +1.
Vertex ids are 1-based: id(x_i, f) = (i - 1) * 2^q + code(f) + 1.
"""

from __future__ import annotations

import math

import numpy as np

from .instances import Assignment, BinaryTree, Lin2Instance, WeightedGraph

MAX_Q = 6
MAX_PRODUCT_VERTICES = 4096
DEFAULT_RHO = -0.7


def product_vertex_id(variable: int, fcode: int, q: int) -> int:
    return (variable - 1) * (1 << q) + fcode + 1


def product_vertex_decode(vid: int, q: int) -> tuple[int, int]:
    """Inverse of product_vertex_id: (variable, fcode)."""
    block = 1 << q
    return (vid - 1) // block + 1, (vid - 1) % block


def sat_fraction(inst: Lin2Instance, assignment: Assignment) -> float:
    """Fraction of equations x_j - x_k = a satisfied; vacuously 1 when empty."""
    if assignment.n0 != inst.n0 or assignment.q != inst.q:
        raise ValueError("assignment shape does not match the instance")
    if inst.m == 0:
        return 1.0
    sat = sum(
        1
        for j, k, a in inst.equations
        if (assignment.value(j) - assignment.value(k)) % inst.q == a
    )
    return sat / inst.m


def _incident(inst: Lin2Instance) -> list[list[tuple[int, int]]]:
    """For each variable i (1-based), the incident constraints oriented as
    x_other - x_i = offset, in canonical equation order."""
    inc: list[list[tuple[int, int]]] = [[] for _ in range(inst.n0 + 1)]
    for j, k, a in inst.equations:
        inc[k].append((j, a))            # x_j - x_k = a
        inc[j].append((k, (-a) % inst.q))  # x_k - x_j = -a
    return inc


def _check_reducible(inst: Lin2Instance) -> None:
    if not inst.is_regular():
        raise ValueError("reduction requires a regular instance")
    if inst.m == 0:
        raise ValueError("reduction requires at least one equation")
    if inst.q > MAX_Q:
        raise ValueError(f"exact enumeration limited to q <= {MAX_Q}")
    if inst.n0 * (1 << inst.q) > MAX_PRODUCT_VERTICES:
        raise ValueError(
            f"product instance would have {inst.n0 * (1 << inst.q)} vertices "
            f"(limit {MAX_PRODUCT_VERTICES})"
        )


def _rotate_right(code: int, delta: int, q: int) -> int:
    """Bit u of the result is bit (u + delta) mod q of code."""
    if delta == 0:
        return code
    mask = (1 << q) - 1
    return ((code >> delta) | (code << (q - delta))) & mask


def reduce_hc_exact(inst: Lin2Instance, rho: float = DEFAULT_RHO) -> WeightedGraph:
    """Exact pair weights of the sampling procedure, renormalized to sum 1."""
    _check_reducible(inst)
    if not -1.0 <= rho <= 0.0:
        raise ValueError(f"correlation {rho} outside [-1, 0]")
    q, n0 = inst.q, inst.n0
    block = 1 << q
    inc = _incident(inst)
    p_same = (1.0 + rho) / 4.0
    p_diff = (1.0 - rho) / 4.0
    pow_same = [p_same**k for k in range(q + 1)]
    pow_diff = [p_diff**k for k in range(q + 1)]

    weights: dict[tuple[int, int], float] = {}
    dropped = 0.0
    for i in range(1, n0 + 1):
        d = len(inc[i])
        base = 1.0 / (n0 * d * d)
        for j, a in inc[i]:
            for k, b in inc[i]:
                delta = (b - a) % q
                # coordinate u of f is coupled with coordinate u + delta of g
                rotated = [_rotate_right(gcode, delta, q) for gcode in range(block)]
                for fcode in range(block):
                    vj = product_vertex_id(j, fcode, q)
                    for gcode in range(block):
                        matches = q - (fcode ^ rotated[gcode]).bit_count()
                        mass = base * pow_same[matches] * pow_diff[q - matches]
                        vk = product_vertex_id(k, gcode, q)
                        if vj == vk:
                            dropped += mass
                        else:
                            pair = (vj, vk) if vj < vk else (vk, vj)
                            weights[pair] = weights.get(pair, 0.0) + mass
    total = math.fsum(weights.values()) + dropped
    if abs(total - 1.0) > 1e-9:
        raise AssertionError(f"pre-normalization mass {total!r} not 1")
    scale = 1.0 / (1.0 - dropped)
    edges = [(u, v, w * scale) for (u, v), w in sorted(weights.items())]
    meta = (
        ("dropped-selfpair-mass", format(dropped, ".17g")),
        ("rho", format(rho, ".17g")),
        ("constraint-sampling", "with-replacement"),
    )
    return WeightedGraph(n0 * block, edges, normalized=True, meta=meta)


def sample_pairs(
    inst: Lin2Instance, rho: float, n_samples: int, seed: int, chunk: int = 1_000_000
) -> tuple[dict[tuple[int, int], int], int]:
    """Monte Carlo twin of reduce_hc_exact: run the sampling procedure
    n_samples times; returns (pair counts, kept sample count) with
    identical-vertex outputs discarded."""
    _check_reducible(inst)
    q, n0 = inst.q, inst.n0
    inc = _incident(inst)
    d = len(inc[1])
    other = np.array([[c[0] for c in inc[i]] for i in range(1, n0 + 1)])
    offset = np.array([[c[1] for c in inc[i]] for i in range(1, n0 + 1)])
    rng = np.random.default_rng(seed)
    p_agree = (1.0 + rho) / 2.0
    counts: dict[tuple[int, int], int] = {}
    kept = 0
    remaining = n_samples
    while remaining > 0:
        size = min(chunk, remaining)
        remaining -= size
        i = rng.integers(0, n0, size)
        c1 = rng.integers(0, d, size)
        c2 = rng.integers(0, d, size)
        j = other[i, c1]
        a = offset[i, c1]
        k = other[i, c2]
        b = offset[i, c2]
        f = rng.integers(0, 2, (size, q), dtype=np.int8)
        agree = rng.random((size, q)) < p_agree
        g = np.empty_like(f)
        rows = np.arange(size)
        for r in range(q):
            fa = f[rows, (r + a) % q]
            g[rows, (r + b) % q] = np.where(agree[:, r], fa, 1 - fa)
        fcode = np.zeros(size, dtype=np.int64)
        gcode = np.zeros(size, dtype=np.int64)
        for r in range(q):
            fcode |= f[:, r].astype(np.int64) << r
            gcode |= g[:, r].astype(np.int64) << r
        vj = (j - 1) * (1 << q) + fcode + 1
        vk = (k - 1) * (1 << q) + gcode + 1
        keep = vj != vk
        lo = np.minimum(vj[keep], vk[keep])
        hi = np.maximum(vj[keep], vk[keep])
        kept += int(keep.sum())
        keys, tallies = np.unique(lo * (MAX_PRODUCT_VERTICES + 1) + hi, return_counts=True)
        for key, tally in zip(keys.tolist(), tallies.tolist()):
            pair = (key // (MAX_PRODUCT_VERTICES + 1), key % (MAX_PRODUCT_VERTICES + 1))
            counts[pair] = counts.get(pair, 0) + tally
    return counts, kept


def both_satisfied_probability(inst: Lin2Instance, assignment: Assignment) -> float:
    """Exact probability that both sampled constraints are satisfied."""
    if assignment.n0 != inst.n0 or assignment.q != inst.q:
        raise ValueError("assignment shape does not match the instance")
    inc = _incident(inst)
    total = 0.0
    for i in range(1, inst.n0 + 1):
        if not inc[i]:
            raise ValueError(f"variable {i} occurs in no equation")
        sat = sum(
            1
            for j, a in inc[i]
            if (assignment.value(j) - assignment.value(i)) % inst.q == a
        )
        total += (sat / len(inc[i])) ** 2
    return total / inst.n0


def level_shift(r: int, q: int) -> int:
    """Shift used at tree level r: c = r for r < q, and 0 at level q."""
    if not 1 <= r <= q:
        raise ValueError(f"level {r} outside [1, {q}]")
    return r % q


def yes_tree(inst: Lin2Instance, assignment: Assignment) -> BinaryTree:
    """Completion-certificate tree: level r (1..q) splits by the sign of
    coordinate sigma(x_i) + c_r of the vertex's sign vector; groups below
    level q are split by balanced recursive bisection in id order."""
    if assignment.n0 != inst.n0 or assignment.q != inst.q:
        raise ValueError("assignment shape does not match the instance")
    q, n0 = inst.q, inst.n0
    block = 1 << q
    if n0 * block > MAX_PRODUCT_VERTICES:
        raise ValueError("product instance too large")

    def bisect(ids: list[int]):
        if len(ids) == 1:
            return ids[0]
        half = (len(ids) + 1) // 2
        return (bisect(ids[:half]), bisect(ids[half:]))

    def split(ids: list[int], r: int):
        if r > q:
            return bisect(sorted(ids))
        c = level_shift(r, q)
        plus, minus = [], []
        for vid in ids:
            variable, fcode = product_vertex_decode(vid, q)
            coord = (assignment.value(variable) + c) % q
            (plus if fcode >> coord & 1 else minus).append(vid)
        return (split(plus, r + 1), split(minus, r + 1))

    all_ids = list(range(1, n0 * block + 1))
    return BinaryTree(split(all_ids, 1))


def yes_tree_level_bound(inst: Lin2Instance, assignment: Assignment, rho: float) -> float:
    """Per-vertex lower bound on the tree value: n * W_sat * sum over levels
    r = 1..q of alpha * ((1 - alpha) / 2)^(r-1), alpha = (1 - rho) / 2,
    in the pre-renormalization weight scale."""
    alpha = (1.0 - rho) / 2.0
    w_sat = both_satisfied_probability(inst, assignment)
    n = inst.n0 * (1 << inst.q)
    series = sum(alpha * ((1.0 - alpha) / 2.0) ** (r - 1) for r in range(1, inst.q + 1))
    return n * w_sat * series
