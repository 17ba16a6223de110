"""Local correlation clustering engine: objective evaluation, exact solvers,
the constructive clustering for 2-colorable inputs, its decoder, and the
structural checks that make the 3-vs-4 mistake gap work.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence, Union

from . import _kernels
from .cc_reduction import Flower, GadgetLayout
from .instances import (
    Coloring,
    DisagreementsVector,
    Hypergraph3,
    Partition,
    SignedGraph,
)

BRUTEFORCE_MAX_N = 13
TWO_COLORING_MAX_N = 24
DEFAULT_BUDGET = 60.0


def disagreements(g: SignedGraph, p: Partition) -> DisagreementsVector:
    """Mistakes at each vertex: positive edges cut plus negative pairs kept."""
    if p.n != g.n:
        raise ValueError(f"partition over {p.n} vertices, graph has {g.n}")
    adj = g.adjacency_masks()
    cl_masks = [0] * p.k
    for v0, c in enumerate(p.labels):
        cl_masks[c] |= 1 << v0
    counts = [
        (adj[v0] ^ (cl_masks[p.labels[v0]] & ~(1 << v0))).bit_count()
        for v0 in range(g.n)
    ]
    return DisagreementsVector(counts)


def lq_norm(d: "DisagreementsVector | Sequence[int]", q: float) -> float:
    """l_q norm of a disagreement vector (or any count sequence);
    q = math.inf returns the integer max."""
    if q != math.inf and q < 1:
        raise ValueError(f"norm order {q} must be >= 1")
    counts = d.counts if isinstance(d, DisagreementsVector) else tuple(d)
    if q == math.inf:
        return max(counts, default=0)
    return sum(float(c) ** q for c in counts) ** (1.0 / q)


def _bfs_order(g: SignedGraph) -> list[int]:
    """0-based vertex order: BFS from vertex 1 over positive edges, neighbours
    in ascending id, restarting from the smallest unvisited vertex."""
    adj_lists: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in sorted(g.positive_edges):
        adj_lists[u - 1].append(v - 1)
        adj_lists[v - 1].append(u - 1)
    for lst in adj_lists:
        lst.sort()
    seen = [False] * g.n
    order = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in adj_lists[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return order


def cc_opt_bruteforce(g: SignedGraph, q: float = math.inf) -> tuple[Partition, float]:
    """Optimal clustering by enumeration of all set partitions (n <= 13)."""
    if g.n > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTEFORCE_MAX_N}, got {g.n}")
    if q != math.inf and q < 1:
        raise ValueError(f"norm order {q} must be >= 1")
    value, labels = _kernels.partition_opt(
        g.n, g.adjacency_masks(), None if q == math.inf else q
    )
    partition = Partition(g.n, labels)
    if q == math.inf:
        return partition, int(value)
    return partition, float(value) ** (1.0 / q)


@dataclass(frozen=True)
class FeasibleResult:
    status: str  # "feasible" | "infeasible" | "timeout"
    partition: Partition | None = None

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


def feasible_linf(g: SignedGraph, t: int, budget: float | None = DEFAULT_BUDGET) -> FeasibleResult:
    """Exact decision: does some clustering make at most t mistakes per vertex?

    Backtracking search in BFS order over positive edges; any returned witness
    is re-verified against disagreements().
    """
    if t < 0:
        raise ValueError("mistake budget must be nonnegative")
    status, labels = _kernels.linf_feasible(
        g.n, g.adjacency_masks(), t, _bfs_order(g), budget
    )
    if status == _kernels.TIMEOUT:
        return FeasibleResult("timeout")
    if status == _kernels.INFEASIBLE:
        return FeasibleResult("infeasible")
    partition = Partition(g.n, labels)
    witness_max = disagreements(g, partition).max()
    if witness_max > t:
        raise RuntimeError(
            f"search returned a witness with {witness_max} > {t} mistakes; kernel bug"
        )
    return FeasibleResult("feasible", partition)


# ---------------------------------------------------------------------------
# hypergraph 2-coloring oracle


def find_two_coloring(h: Hypergraph3) -> Coloring | None:
    """First 2-coloring (by orange-set code order) leaving no triple
    monochromatic, via exhaustive enumeration; None if not 2-colorable."""
    if h.n > TWO_COLORING_MAX_N:
        raise ValueError(f"exhaustive 2-coloring limited to n <= {TWO_COLORING_MAX_N}")
    masks = [
        (1 << (a - 1)) | (1 << (b - 1)) | (1 << (c - 1)) for a, b, c in h.edges
    ]
    for code in range(1 << h.n):
        if all(0 < code & m < m for m in masks):
            return Coloring(h.n, [v for v in range(1, h.n + 1) if code >> (v - 1) & 1])
    return None


def is_two_colorable(h: Hypergraph3) -> bool:
    return find_two_coloring(h) is not None


# ---------------------------------------------------------------------------
# YES-case construction and decoding


def _occurrence_of(position: int) -> int:
    """Occurrence index using the petal at this 1-based cycle position."""
    return (position + 1) // 2


def yes_clustering(h: Hypergraph3, coloring: Coloring, layout: GadgetLayout) -> Partition:
    """Clustering with at most 3 mistakes per vertex, from a valid 2-coloring.

    Orange flowers keep their odd diamonds (even inner petals become
    singletons), Blue flowers the even ones.  Each bouquet forms one cluster
    around its alpha edge plus the free odd petals of its Blue endpoints, and
    one around its beta edge plus the free even petals of its Orange
    endpoints.  Padded petal pairs follow the same parity rule with no
    bouquet to join: diamond on the matching side, singleton otherwise.
    """
    if coloring.n != h.n:
        raise ValueError(f"coloring over {coloring.n} vertices, hypergraph has {h.n}")
    if not coloring.makes_bichromatic(h):
        raise ValueError("coloring leaves a monochromatic triple")
    clusters: list[list[int]] = []
    for i in sorted(layout.flowers):
        fl = layout.flowers[i]
        orange = coloring.is_orange(i)
        for pos in range(1, 2 * fl.t + 1):
            if (pos % 2 == 1) == orange:
                clusters.append(sorted(fl.diamond(pos)))
            else:
                clusters.append([fl.inner[pos - 1]])
                if _occurrence_of(pos) > fl.s:  # padded petal, nothing to join
                    clusters.append([fl.outer[pos - 1]])
    for j in sorted(layout.bouquets):
        bq = layout.bouquets[j]
        alpha, beta = [bq.a1, bq.a2], [bq.b1, bq.b2]
        for v, o in bq.slots:
            fl = layout.flowers[v]
            odd_petal, even_petal = layout.attached_pair(fl, o)
            if coloring.is_orange(v):
                beta.append(even_petal)
            else:
                alpha.append(odd_petal)
        clusters.append(alpha)
        clusters.append(beta)
    assignment = {}
    for cid, members in enumerate(clusters):
        for v in members:
            assignment[v] = cid
    return Partition(layout.n_gadget, assignment)


@dataclass(frozen=True)
class DecodeFailure:
    flower: int
    reason: str


def _cluster_sets(p: Partition) -> dict[int, frozenset[int]]:
    blocks = [frozenset(b) for b in p.blocks()]
    return {v: blocks[p.labels[v - 1]] for v in range(1, p.n + 1)}


def _flower_parity(fl: Flower, cluster_of: dict[int, frozenset[int]]) -> str | None:
    """'odd' if all odd outer petals sit in their exact diamond clusters,
    'even' symmetrically, None if neither (both at once is impossible:
    diamonds of adjacent positions share a cycle vertex)."""
    for parity, name in ((1, "odd"), (0, "even")):
        if all(
            cluster_of[fl.outer[pos - 1]] == fl.diamond(pos)
            for pos in range(1, 2 * fl.t + 1)
            if pos % 2 == parity
        ):
            return name
    return None


def decode_coloring(
    p: Partition, layout: GadgetLayout
) -> Union[Coloring, DecodeFailure]:
    """Recover a 2-coloring from a clustering: Orange where the odd petals
    form diamonds, Blue where the even ones do; failure value otherwise.
    Vertices without a flower never constrain any triple and decode to Blue."""
    if p.n != layout.n_gadget:
        raise ValueError(f"partition over {p.n} vertices, layout has {layout.n_gadget}")
    cluster_of = _cluster_sets(p)
    orange = []
    for i in sorted(layout.flowers):
        parity = _flower_parity(layout.flowers[i], cluster_of)
        if parity is None:
            return DecodeFailure(i, "no full odd or even diamond collection")
        if parity == "odd":
            orange.append(i)
    return Coloring(layout.n_hyper, orange)


# ---------------------------------------------------------------------------
# structural lemma verification


@dataclass
class LemmaReport:
    """Outcome of the structural checks for clusterings with <= 3 mistakes.

    Lemma numbering follows the chain of constraints on any such clustering:
    4 = unaccompanied outer petals form diamonds, 5 = petals joining a
    bouquet edge isolate their flower (singleton inner petal, adjacent
    diamonds), 6 = each attached outer petal's cluster is one of four shapes,
    7 = per-flower parity, 8 = per-hyperedge parity non-uniformity.
    """

    linf: int
    vacuous: bool
    passes: dict[int, bool] = field(default_factory=dict)
    witnesses: dict[int, str] = field(default_factory=dict)
    flower_parity: dict[int, str] = field(default_factory=dict)

    def all_pass(self) -> bool:
        return all(self.passes.values())

    def to_text(self) -> str:
        lines = []
        if self.vacuous:
            lines.append(f"vacuous linf {self.linf}")
        for k in sorted(self.passes):
            if self.passes[k]:
                lines.append(f"lemma {k} pass")
            else:
                lines.append(f"lemma {k} fail {self.witnesses[k]}")
        for i in sorted(self.flower_parity):
            lines.append(f"flower {i} parity {self.flower_parity[i]}")
        return "\n".join(lines) + "\n"


def _fail(report: LemmaReport, k: int, witness: str) -> None:
    if report.passes.get(k, True):
        report.passes[k] = False
        report.witnesses[k] = witness


def verify_lemmas(g: SignedGraph, p: Partition, layout: GadgetLayout) -> LemmaReport:
    """Check the lemma chain on a clustering; vacuous when some vertex has
    more than 3 mistakes (the constraints only bind below 4)."""
    linf = disagreements(g, p).max()
    report = LemmaReport(linf=linf, vacuous=linf > 3)
    for k in range(4, 9):
        report.passes[k] = True
    cluster_of = _cluster_sets(p)

    for j in sorted(layout.bouquets):
        bq = layout.bouquets[j]
        bouquet_set = frozenset((bq.a1, bq.a2, bq.b1, bq.b2))
        for slot_idx, (v, o) in enumerate(bq.slots):
            fl = layout.flowers[v]
            flower_set = frozenset(fl.cycle + fl.outer + fl.inner)
            for petal, pos, pair in (
                (fl.outer[2 * o - 2], 2 * o - 1, (bq.a1, bq.a2)),
                (fl.outer[2 * o - 1], 2 * o, (bq.b1, bq.b2)),
            ):
                cluster = cluster_of[petal]
                diamond = fl.diamond(pos)
                where = f"flower {v} petal {pos} (bouquet {j})"
                if not cluster & bouquet_set:
                    if cluster != diamond:
                        _fail(report, 4, f"{where} cluster {sorted(cluster)} is not its diamond")
                else:
                    if cluster & flower_set != {petal}:
                        _fail(report, 5, f"{where} carries other vertices of its flower")
                    inner = fl.inner[pos - 1]
                    if cluster_of[inner] != {inner}:
                        _fail(report, 5, f"{where} inner petal {inner} not singleton")
                    prev_pos = pos - 1 if pos > 1 else 2 * fl.t
                    next_pos = pos + 1 if pos < 2 * fl.t else 1
                    for adj_pos in (prev_pos, next_pos):
                        adj_diamond = fl.diamond(adj_pos)
                        if cluster_of[fl.outer[adj_pos - 1]] != adj_diamond:
                            _fail(
                                report, 5,
                                f"{where} adjacent diamond at position {adj_pos} missing",
                            )
                # lemma 6: the four admissible shapes
                side = 0 if pos % 2 == 1 else 1  # same-parity petals of the other slots
                partners = {
                    layout.attached_pair(layout.flowers[v2], o2)[side]
                    for v2, o2 in bq.slots
                    if (v2, o2) != (v, o)
                }
                x1, x2 = pair
                allowed = [
                    {petal, x1},
                    {petal, x2},
                    {petal, x1, x2},
                    diamond,
                ] + [{petal, x1, x2, p2} for p2 in sorted(partners)]
                if not any(cluster == frozenset(shape) for shape in allowed):
                    _fail(report, 6, f"{where} cluster {sorted(cluster)} not an admissible shape")

    parities: dict[int, str | None] = {}
    for i in sorted(layout.flowers):
        parity = _flower_parity(layout.flowers[i], cluster_of)
        parities[i] = parity
        report.flower_parity[i] = f"{parity}-diamonds" if parity else "none"
        if parity is None:
            _fail(report, 7, f"flower {i} has neither full diamond collection")

    for j in sorted(layout.bouquets):
        slot_parities = [parities[v] for v, _ in layout.bouquets[j].slots]
        if None not in slot_parities and len(set(slot_parities)) == 1:
            _fail(report, 8, f"bouquet {j}: all three flowers are {slot_parities[0]}-diamonds")
    return report
