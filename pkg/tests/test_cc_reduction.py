import itertools

import pytest

from hardgadget.cc_reduction import (
    layout_role,
    parse_layout,
    reduce_cc,
    serialize_layout,
)
from hardgadget.instances import Hypergraph3, SignedGraph, serialize_instance


def posdeg_histogram(g: SignedGraph) -> dict[int, int]:
    hist: dict[int, int] = {}
    for mask in g.adjacency_masks():
        hist[mask.bit_count()] = hist.get(mask.bit_count(), 0) + 1
    return hist


def test_single_triple_counts():
    h = Hypergraph3(3, [(1, 2, 3)])
    g, layout = reduce_cc(h)
    assert g.n == 40  # three padded 12-vertex flowers plus one bouquet
    assert layout.n_gadget == 40
    assert len(g.positive_edges) == 3 * 10 * 2 + 14


def test_flower_sizes_follow_occurrences():
    h = Hypergraph3(4, [(1, 2, 3), (1, 2, 4)])
    _, layout = reduce_cc(h)
    assert layout.flowers[1].t == 2 and layout.flowers[1].s == 2
    assert len(layout.flowers[1].outer) == 4 and len(layout.flowers[1].inner) == 4
    assert layout.flowers[4].t == 2 and layout.flowers[4].s == 1  # padded
    assert layout.n_gadget == 4 * 12 + 2 * 4


def test_empty_hypergraph_reduces_to_empty_graph():
    g, layout = reduce_cc(Hypergraph3(3, []))
    assert g.n == 0 and layout.n_gadget == 0 and not layout.flowers


def test_vertex_count_formula():
    h = Hypergraph3(6, [(1, 2, 3), (2, 3, 4), (3, 4, 5)])
    g, _ = reduce_cc(h)
    s = h.occurrence_counts()
    expected = sum(6 * max(si, 2) for si in s if si >= 1) + 4 * h.m
    assert g.n == expected


def test_degree_facts():
    # attached outer petals 4, inner petals 2, cycle vertices 6, bouquet ends 4
    h = Hypergraph3(6, [(1, 2, 3), (2, 3, 4), (4, 5, 6)])
    g, layout = reduce_cc(h)
    adj = g.adjacency_masks()

    def deg(v: int) -> int:
        return adj[v - 1].bit_count()

    for flower in layout.flowers.values():
        for v in flower.cycle:
            assert deg(v) == 6
        for v in flower.inner:
            assert deg(v) == 2
        for pos, v in enumerate(flower.outer, start=1):
            attached = (pos + 1) // 2 <= flower.s
            assert deg(v) == (4 if attached else 2)
    for bq in layout.bouquets.values():
        for v in (bq.a1, bq.a2, bq.b1, bq.b2):
            assert deg(v) == 4


def test_occurrence_slots_use_distinct_petal_pairs():
    h = Hypergraph3(5, [(1, 2, 3), (1, 2, 4), (1, 2, 5)])
    _, layout = reduce_cc(h)
    used = set()
    for bq in layout.bouquets.values():
        for v, o in bq.slots:
            assert (v, o) not in used
            used.add((v, o))
    assert layout.flowers[1].s == 3 and layout.flowers[1].t == 3
    assert len(layout.flowers[1].cycle) == 6


def test_id_cover_and_roles():
    h = Hypergraph3(4, [(1, 2, 3), (2, 3, 4)])
    g, layout = reduce_cc(h)
    roles = [layout_role(layout, v) for v in range(1, g.n + 1)]
    assert len(roles) == g.n
    assert roles[0].kind == "flower" and roles[0].role == "cycle" and roles[0].index == 1
    assert roles[-1].kind == "bouquet" and roles[-1].role == "B2"
    with pytest.raises(ValueError):
        layout_role(layout, g.n + 1)
    with pytest.raises(ValueError):
        layout_role(layout, 0)


def test_determinism_identical_bytes():
    h = Hypergraph3(6, [(1, 2, 3), (4, 5, 6), (1, 4, 5)])
    out1 = [serialize_instance(reduce_cc(h)[0]), serialize_layout(reduce_cc(h)[1])]
    out2 = [serialize_instance(reduce_cc(h)[0]), serialize_layout(reduce_cc(h)[1])]
    assert out1 == out2


def test_layout_roundtrip():
    h = Hypergraph3(5, [(1, 2, 3), (1, 2, 4), (3, 4, 5)])
    _, layout = reduce_cc(h)
    parsed = parse_layout(serialize_layout(layout))
    assert parsed == layout


def test_bouquet_wiring():
    h = Hypergraph3(3, [(1, 2, 3)])
    g, layout = reduce_cc(h)
    bq = layout.bouquets[1]
    for v, o in bq.slots:
        odd_petal, even_petal = layout.attached_pair(layout.flowers[v], o)
        for end in (bq.a1, bq.a2):
            assert (min(end, odd_petal), max(end, odd_petal)) in g.positive_edges
        for end in (bq.b1, bq.b2):
            assert (min(end, even_petal), max(end, even_petal)) in g.positive_edges
    assert (bq.a1, bq.a2) in g.positive_edges
    assert (bq.b1, bq.b2) in g.positive_edges


def test_padded_petals_attach_nowhere_outside():
    h = Hypergraph3(3, [(1, 2, 3)])  # all s_i = 1: petal pair 2 is padding
    g, layout = reduce_cc(h)
    adj = g.adjacency_masks()
    for flower in layout.flowers.values():
        inside = set(flower.cycle) | set(flower.outer) | set(flower.inner)
        for pos in (3, 4):  # the padded pair
            petal = flower.outer[pos - 1]
            nbrs = {
                v + 1 for v in range(g.n) if adj[petal - 1] >> v & 1
            }
            assert nbrs <= inside
