"""Seeded test-corpus generators for both problem families."""

from __future__ import annotations

import itertools
import random

from .instances import Assignment, Hypergraph3, Lin2Instance

H3_MODES = ("random", "2colorable", "odd-cycle-style")
LIN2_MODES = ("random", "satisfiable")


def gen_h3(n: int, m: int, seed: int, mode: str = "random") -> Hypergraph3:
    """Deterministic 3-uniform hypergraph generator.

    random         m distinct triples sampled uniformly.
    2colorable     plants a balanced-ish 2-coloring and samples only
                   bichromatic triples.
    odd-cycle-style  the tight cyclic chain {v_j, v_j+1, v_j+2} (mod n),
                   giving overlapping occurrences (s_i up to 3).
    """
    if mode not in H3_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {H3_MODES}")
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rng = random.Random(seed)
    if mode == "odd-cycle-style":
        limit = n if n >= 4 else 1
        if m > limit:
            raise ValueError(f"tight cycle on {n} vertices has at most {limit} distinct triples")
        edges = [
            tuple(sorted(((j + k) % n + 1 for k in range(3))))
            for j in range(m)
        ]
        return Hypergraph3(n, edges)
    universe = list(itertools.combinations(range(1, n + 1), 3))
    if mode == "2colorable":
        while True:
            orange = {v for v in range(1, n + 1) if rng.random() < 0.5}
            if 0 < len(orange) < n:
                break
        universe = [
            e for e in universe if 0 < len([v for v in e if v in orange]) < 3
        ]
    if m > len(universe):
        raise ValueError(f"only {len(universe)} admissible triples exist, requested {m}")
    return Hypergraph3(n, rng.sample(universe, m))


def gen_lin2(
    q: int, n0: int, m: int, seed: int, mode: str = "random"
) -> tuple[Lin2Instance, Assignment | None]:
    """Deterministic regular Max-2Lin(q) generator via configuration pairing.

    Every variable gets degree 2m/n0 (must be integral).  `satisfiable` mode
    plants a uniform assignment and sets each offset to satisfy it; the
    planted assignment is returned alongside (None in random mode).
    """
    if mode not in LIN2_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {LIN2_MODES}")
    if q < 1 or n0 < 2 or m < 1:
        raise ValueError("need q >= 1, n0 >= 2, m >= 1")
    if (2 * m) % n0 != 0:
        raise ValueError(f"2m = {2 * m} not divisible by n0 = {n0}: no regular instance")
    rng = random.Random(seed)
    degree = 2 * m // n0
    for _ in range(10_000):
        stubs = [v for v in range(1, n0 + 1) for _ in range(degree)]
        rng.shuffle(stubs)
        pairs = [(stubs[2 * i], stubs[2 * i + 1]) for i in range(m)]
        if all(j != k for j, k in pairs):
            break
    else:
        raise ValueError("could not pair variables without self-loops")
    planted = Assignment(q, [rng.randrange(q) for _ in range(n0)]) if mode == "satisfiable" else None
    equations = []
    for j, k in pairs:
        if planted is not None:
            a = (planted.value(j) - planted.value(k)) % q
        else:
            a = rng.randrange(q)
        equations.append((j, k, a))
    return Lin2Instance(q, n0, equations), planted
