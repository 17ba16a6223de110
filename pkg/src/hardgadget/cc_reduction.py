"""Flower/bouquet gadget reduction: 3-uniform hypergraph -> signed complete graph.

Each hypergraph vertex i occurring in s_i >= 1 triples becomes a flower of
6*t_i gadget vertices with t_i = max(s_i, 2): a cycle of 2*t_i vertices plus
an outer and an inner petal per cycle edge.  A vertex occurring only once is
padded to t_i = 2 with the extra petal pair attached to nothing outside its
flower; vertices with s_i = 0 produce no gadget.  Each hyperedge becomes a
bouquet of two independent edges alpha = (A1, A2) and beta = (B1, B2): A1 and
A2 join the designated odd outer petal of each of the three incident flowers,
B1 and B2 the designated even outer petals.  The o-th triple containing
vertex i (in canonical edge order) uses petal pair (2o-1, 2o) of flower i.

Gadget ids are assigned deterministically: flowers in vertex order (cycle
block, then outer petals, then inner petals, each in position order), then
bouquets in hyperedge order (A1, A2, B1, B2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .instances import Hypergraph3, ParseError, SignedGraph


@dataclass(frozen=True)
class Flower:
    vertex: int            # hypergraph vertex this flower encodes
    s: int                 # true occurrence count
    t: int                 # padded size: max(s, 2)
    cycle: tuple[int, ...]  # 2t cycle vertex ids, cyclic order = id order
    outer: tuple[int, ...]  # 2t outer petal ids, outer[k] sits on cycle edge k+1
    inner: tuple[int, ...]  # 2t inner petal ids

    def cycle_edge(self, position: int) -> tuple[int, int]:
        """Endpoints of cycle edge `position` (1-based, wraps around)."""
        k = position - 1
        return self.cycle[k], self.cycle[(k + 1) % len(self.cycle)]

    def diamond(self, position: int) -> frozenset[int]:
        """The diamond 4-set of cycle edge `position`: outer petal, both
        cycle endpoints, inner petal."""
        u, v = self.cycle_edge(position)
        return frozenset((self.outer[position - 1], u, v, self.inner[position - 1]))


@dataclass(frozen=True)
class Bouquet:
    hyperedge: int         # 1-based index into the hypergraph edge list
    a1: int
    a2: int
    b1: int
    b2: int
    slots: tuple[tuple[int, int], ...]  # three (vertex, occurrence) pairs


@dataclass(frozen=True)
class RoleRecord:
    kind: str              # "flower" or "bouquet"
    owner: int             # hypergraph vertex / hyperedge index
    role: str              # cycle|outer|inner|A1|A2|B1|B2
    index: int | None      # 1-based position within the flower, None for bouquets


@dataclass(frozen=True)
class GadgetLayout:
    n_hyper: int                   # vertex count of the source hypergraph
    n_gadget: int
    flowers: dict[int, Flower]     # keyed by hypergraph vertex
    bouquets: dict[int, Bouquet]   # keyed by hyperedge index

    def attached_pair(self, flower: Flower, occurrence: int) -> tuple[int, int]:
        """(odd outer petal, even outer petal) used by the given occurrence."""
        return flower.outer[2 * occurrence - 2], flower.outer[2 * occurrence - 1]


def reduce_cc(h: Hypergraph3) -> tuple[SignedGraph, GadgetLayout]:
    """Build the signed complete graph and its named gadget layout."""
    s = h.occurrence_counts()
    next_id = 1
    flowers: dict[int, Flower] = {}
    positive: list[tuple[int, int]] = []

    for i in range(1, h.n + 1):
        si = s[i - 1]
        if si == 0:
            continue
        t = max(si, 2)
        cycle = tuple(range(next_id, next_id + 2 * t))
        outer = tuple(range(next_id + 2 * t, next_id + 4 * t))
        inner = tuple(range(next_id + 4 * t, next_id + 6 * t))
        next_id += 6 * t
        flower = Flower(i, si, t, cycle, outer, inner)
        flowers[i] = flower
        for k in range(2 * t):
            u, v = cycle[k], cycle[(k + 1) % (2 * t)]
            positive.append((u, v))
            positive.append((outer[k], u))
            positive.append((outer[k], v))
            positive.append((inner[k], u))
            positive.append((inner[k], v))

    occurrence_seen = [0] * (h.n + 1)
    bouquets: dict[int, Bouquet] = {}
    for j, edge in enumerate(h.edges, start=1):
        a1, a2, b1, b2 = next_id, next_id + 1, next_id + 2, next_id + 3
        next_id += 4
        positive.append((a1, a2))
        positive.append((b1, b2))
        slots = []
        for v in edge:
            occurrence_seen[v] += 1
            o = occurrence_seen[v]
            slots.append((v, o))
            odd_petal, even_petal = flowers[v].outer[2 * o - 2], flowers[v].outer[2 * o - 1]
            positive.append((a1, odd_petal))
            positive.append((a2, odd_petal))
            positive.append((b1, even_petal))
            positive.append((b2, even_petal))
        bouquets[j] = Bouquet(j, a1, a2, b1, b2, tuple(slots))

    layout = GadgetLayout(h.n, next_id - 1, flowers, bouquets)
    return SignedGraph(next_id - 1, positive), layout


def layout_role(layout: GadgetLayout, v: int) -> RoleRecord:
    """Identify the gadget role of vertex id v; total inverse of id assignment."""
    if not 1 <= v <= layout.n_gadget:
        raise ValueError(f"gadget vertex {v} out of range [1..{layout.n_gadget}]")
    for flower in layout.flowers.values():
        base = flower.cycle[0]
        if base <= v < base + 6 * flower.t:
            offset = v - base
            block, index = divmod(offset, 2 * flower.t)
            role = ("cycle", "outer", "inner")[block]
            return RoleRecord("flower", flower.vertex, role, index + 1)
    for bq in layout.bouquets.values():
        if bq.a1 <= v <= bq.b2:
            role = ("A1", "A2", "B1", "B2")[v - bq.a1]
            return RoleRecord("bouquet", bq.hyperedge, role, None)
    raise AssertionError(f"id {v} not covered by any gadget block")


def serialize_layout(layout: GadgetLayout) -> str:
    lines = [f"hyper {layout.n_hyper}"]
    for i in sorted(layout.flowers):
        flower = layout.flowers[i]
        lines.append(f"flower {i} cycle " + " ".join(map(str, flower.cycle)))
        lines.append(f"flower {i} outer " + " ".join(map(str, flower.outer)))
        lines.append(f"flower {i} inner " + " ".join(map(str, flower.inner)))
    for j in sorted(layout.bouquets):
        bq = layout.bouquets[j]
        slot_part = " ".join(f"{v} {o}" for v, o in bq.slots)
        lines.append(f"bouquet {j} {bq.a1} {bq.a2} {bq.b1} {bq.b2} {slot_part}")
    return "\n".join(lines) + "\n"


def parse_layout(text: str) -> GadgetLayout:
    flower_parts: dict[int, dict[str, tuple[int, ...]]] = {}
    bouquets: dict[int, Bouquet] = {}
    max_id = 0
    n_hyper = 0
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "hyper":
            if len(parts) != 2:
                raise ParseError(no, f"malformed hyper line {line!r}")
            n_hyper = int(parts[1])
        elif parts[0] == "flower":
            if len(parts) < 4 or parts[2] not in ("cycle", "outer", "inner"):
                raise ParseError(no, f"malformed flower line {line!r}")
            i = int(parts[1])
            ids = tuple(int(p) for p in parts[3:])
            flower_parts.setdefault(i, {})[parts[2]] = ids
            max_id = max(max_id, max(ids))
        elif parts[0] == "bouquet":
            if len(parts) != 12:
                raise ParseError(no, f"malformed bouquet line {line!r}")
            j = int(parts[1])
            a1, a2, b1, b2 = (int(p) for p in parts[2:6])
            nums = [int(p) for p in parts[6:]]
            slots = tuple((nums[2 * k], nums[2 * k + 1]) for k in range(3))
            bouquets[j] = Bouquet(j, a1, a2, b1, b2, slots)
            max_id = max(max_id, b2)
        else:
            raise ParseError(no, f"unknown layout record {parts[0]!r}")
    occurrences: dict[int, int] = {}
    for bq in bouquets.values():
        for v, o in bq.slots:
            occurrences[v] = max(occurrences.get(v, 0), o)
    flowers = {}
    for i, blocks in flower_parts.items():
        if set(blocks) != {"cycle", "outer", "inner"}:
            raise ParseError(1, f"flower {i} is missing a block")
        t2 = len(blocks["cycle"])
        if t2 % 2 or len(blocks["outer"]) != t2 or len(blocks["inner"]) != t2:
            raise ParseError(1, f"flower {i} has inconsistent block sizes")
        flowers[i] = Flower(i, occurrences.get(i, 0), t2 // 2,
                            blocks["cycle"], blocks["outer"], blocks["inner"])
    if n_hyper == 0:
        n_hyper = max(flowers, default=0)
    return GadgetLayout(n_hyper, max_id, flowers, bouquets)
