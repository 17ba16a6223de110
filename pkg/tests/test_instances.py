import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardgadget.instances import (
    Assignment,
    BinaryTree,
    Coloring,
    DisagreementsVector,
    Hypergraph3,
    Lin2Instance,
    ParseError,
    Partition,
    SignedGraph,
    ValidationError,
    WeightedGraph,
    parse_instance,
    serialize_instance,
)
from tests.conftest import naive_disagreements, random_signed_graph, random_tree


def test_parse_minimal_hypergraph():
    h = parse_instance("h3 3 1\ne 1 2 3\n", "h3")
    assert h == Hypergraph3(3, [(1, 2, 3)])
    assert h.occurrence_counts() == [1, 1, 1]


def test_parse_minimal_signed_graph():
    g = parse_instance("sg 2\n+ 1 2\n", "sg")
    assert g == SignedGraph(2, [(1, 2)])


def test_parse_rejects_degenerate_triple():
    with pytest.raises((ParseError, ValidationError), match="distinct"):
        parse_instance("h3 3 1\ne 1 1 2\n", "h3")


def test_parse_rejects_duplicate_triple():
    with pytest.raises((ParseError, ValidationError)):
        parse_instance("h3 4 2\ne 1 2 3\ne 3 2 1\n", "h3")


def test_parse_reports_line_numbers():
    with pytest.raises(ParseError, match="line 3"):
        parse_instance("h3 5 2\ne 1 2 3\ne 4 x 5\n", "h3")
    with pytest.raises(ValidationError, match="out of range"):
        parse_instance("h3 5 2\ne 1 2 3\ne 4 5 6\n", "h3")


def test_serialize_hypergraph_canonical():
    h = Hypergraph3(3, [(3, 1, 2)])
    assert serialize_instance(h) == "h3 3 1\ne 1 2 3\n"


def test_serialize_partition_canonical():
    p = Partition(3, {1: 5, 2: 5, 3: 2})
    assert serialize_instance(p) == "p 3 2\nc 1 2\nc 3\n"


def test_serialize_tree():
    t = BinaryTree(((1, 2), 3))
    assert serialize_instance(t) == "((1,2),3)\n"
    assert serialize_instance(BinaryTree((3, (2, 1)))) == "((1,2),3)\n"


def test_tree_invariants():
    t = parse_instance("((1,2),(3,4))", "tree")
    counts = t.leaf_counts()
    assert counts[t.root] == 4
    with pytest.raises(ParseError):
        parse_instance("((1,2),4)", "tree")  # labels not 1..n
    with pytest.raises(ParseError):
        parse_instance("((1,2)", "tree")


def test_weighted_graph_normalized_tolerance():
    WeightedGraph(2, [(1, 2, 1.0 + 5e-10)], normalized=True)
    with pytest.raises(ValidationError):
        WeightedGraph(2, [(1, 2, 1.1)], normalized=True)


def test_weighted_graph_meta_roundtrip():
    g = WeightedGraph(2, [(1, 2, 1.0)], normalized=True, meta=(("key", "some value"),))
    text = serialize_instance(g)
    assert "# key some value" in text
    g2 = parse_instance(text, "wg")
    assert g2 == g
    assert g2.meta == g.meta


def test_lin2_orientation_canonical():
    a = Lin2Instance(5, 3, [(2, 1, 3)])
    b = Lin2Instance(5, 3, [(1, 2, 2)])
    assert a == b
    assert a.degrees() == [1, 1, 0]


def test_assignment_shift():
    s = Assignment(3, [0, 1, 2])
    assert s.shifted(2).sigma == (2, 0, 1)


def test_coloring_bichromatic():
    h = Hypergraph3(3, [(1, 2, 3)])
    assert Coloring(3, [1]).makes_bichromatic(h)
    assert not Coloring(3, []).makes_bichromatic(h)
    assert not Coloring(3, [1, 2, 3]).makes_bichromatic(h)


def test_disagreements_vector_invariants():
    with pytest.raises(ValidationError):
        DisagreementsVector([1, 0, 0])  # odd total
    with pytest.raises(ValidationError):
        DisagreementsVector([3, 1])  # count exceeds n-1
    assert DisagreementsVector([1, 1, 0]).max() == 1


@given(st.integers(0, 6), st.data())
@settings(max_examples=60, deadline=None)
def test_signed_graph_roundtrip(n, data):
    pairs = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if data.draw(st.booleans())
    ]
    g = SignedGraph(n, pairs)
    assert parse_instance(serialize_instance(g), "sg") == g


@given(st.integers(1, 8), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_partition_roundtrip(n, pyrand):
    labels = [pyrand.randrange(3) for _ in range(n)]
    p = Partition(n, labels)
    assert parse_instance(serialize_instance(p), "p") == p


@given(st.integers(2, 9), st.randoms(use_true_random=False))
@settings(max_examples=50, deadline=None)
def test_tree_roundtrip(n, pyrand):
    t = random_tree(random.Random(pyrand.randrange(10**9)), n)
    assert parse_instance(serialize_instance(t), "tree") == t


@given(st.integers(1, 7), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_disagreement_total_always_even(n, pyrand):
    seed = pyrand.randrange(10**9)
    rng = random.Random(seed)
    g = random_signed_graph(rng, n)
    p = Partition(n, [rng.randrange(n) for _ in range(n)])
    counts = naive_disagreements(g, p)
    assert sum(counts) % 2 == 0
    DisagreementsVector(counts)  # constructor re-checks both invariants


def test_roundtrip_other_kinds():
    for text, kind in [
        ("wg 3 2 normalized\n1 2 0.5\n2 3 0.5\n", "wg"),
        ("lin2 3 4 2\n1 2 1\n3 4 2\n", "lin2"),
        ("asg 3 4\ns 0 1 2 0\n", "asg"),
        ("col 4\norange 1 3\nblue 2 4\n", "col"),
    ]:
        obj = parse_instance(text, kind)
        assert parse_instance(serialize_instance(obj), kind) == obj


def test_binary_tree_leaf_fractions():
    t = BinaryTree(((1, 2), (3, (4, 5))))
    counts = t.leaf_counts()
    assert counts[t.root] == 5  # root fraction exactly 1
    left, right = t.root
    assert counts[left] + counts[right] == counts[t.root]


def test_lq_inf_of_empty_is_zero():
    from hardgadget.cc_engine import lq_norm

    assert lq_norm(DisagreementsVector([]), math.inf) == 0
