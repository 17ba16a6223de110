"""Shared instance types for both reductions, with canonical text formats.

All vertex labels are 1-indexed; cluster ids are 0-indexed and dense.
Every type canonicalizes its edge/cluster order at construction, so
``parse(serialize(x)) == x`` holds structurally, and serialization is a
canonical form (sorted records, one per line).

Formats (ASCII, newline terminated):

* Hypergraph3   header ``h3 <n> <m>``, then m lines ``e <v1> <v2> <v3>``
* SignedGraph   header ``sg <n>``, then lines ``+ <u> <v>`` with u < v
* WeightedGraph header ``wg <n> <m> [normalized]``, then ``<u> <v> <w>``
* Partition     header ``p <n> <k>``, then k lines ``c <v...>``
* BinaryTree    one line of nested parentheses, e.g. ``((1,2),(3,4))``
* Lin2Instance  header ``lin2 <q> <n0> <m>``, then lines ``<j> <k> <a>``
* Assignment    header ``asg <q> <n0>``, then one line ``s <v1> ... <vn0>``
* Coloring      header ``col <n>``, then ``orange <v...>`` and ``blue <v...>``

Lines starting with ``#`` are metadata comments: they are collected into the
instance's (non-comparing) ``meta`` mapping when of the form ``# key value``
and re-emitted on serialization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

WEIGHT_SUM_TOL = 1e-9


class ParseError(ValueError):
    """Syntax error in an instance file; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ValidationError(ValueError):
    """An instance violates a structural invariant."""


def _sorted_triple(v1: int, v2: int, v3: int) -> tuple[int, int, int]:
    a, b, c = sorted((v1, v2, v3))
    return (a, b, c)


def _check_vertex(v: int, n: int, what: str = "vertex") -> None:
    if not isinstance(v, int) or isinstance(v, bool):
        raise ValidationError(f"{what} {v!r} is not an integer")
    if not 1 <= v <= n:
        raise ValidationError(f"{what} {v} out of range [1..{n}]")


@dataclass(frozen=True)
class Hypergraph3:
    """3-uniform hypergraph on vertices 1..n with distinct unordered triples."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]]):
        if n < 1:
            raise ValidationError("vertex count must be positive")
        canon = []
        for e in edges:
            if len(e) != 3 or len(set(e)) != 3:
                raise ValidationError(f"triple {tuple(e)} does not have 3 distinct members")
            for v in e:
                _check_vertex(v, n)
            canon.append(_sorted_triple(*e))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValidationError(f"duplicate triple {a}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def occurrence_counts(self) -> list[int]:
        """s_i for i = 1..n: the number of triples containing each vertex."""
        s = [0] * (self.n + 1)
        for e in self.edges:
            for v in e:
                s[v] += 1
        return s[1:]


@dataclass(frozen=True)
class SignedGraph:
    """Complete signed graph: stored pairs are positive, all others negative."""

    n: int
    positive_edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, positive_edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValidationError("vertex count must be nonnegative")
        canon = set()
        for u, v in positive_edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise ValidationError(f"self-pair ({u},{v})")
            pair = (u, v) if u < v else (v, u)
            if pair in canon:
                raise ValidationError(f"duplicate pair {pair}")
            canon.add(pair)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "positive_edges", frozenset(canon))

    def adjacency_masks(self) -> list[int]:
        """Positive adjacency as bitmasks; bit v-1 of entry u-1 set iff {u,v} positive."""
        adj = [0] * self.n
        for u, v in self.positive_edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return adj


@dataclass(frozen=True)
class Partition:
    """Clustering of vertices 1..n; cluster ids dense from 0, canonical order.

    Canonical labeling: the cluster of vertex 1 is 0, the next cluster met
    while scanning vertices in ascending order is 1, and so on (equivalently,
    clusters are ordered by their smallest member).
    """

    n: int
    labels: tuple[int, ...]

    def __init__(self, n: int, assignment: Union[Mapping[int, int], Iterable[int]]):
        if n < 0:
            raise ValidationError("vertex count must be nonnegative")
        if isinstance(assignment, Mapping):
            try:
                raw = [assignment[v] for v in range(1, n + 1)]
            except KeyError as exc:
                raise ValidationError(f"vertex {exc.args[0]} not assigned") from None
        else:
            raw = list(assignment)
        if len(raw) != n:
            raise ValidationError(f"expected {n} assignments, got {len(raw)}")
        relabel: dict[int, int] = {}
        labels = []
        for c in raw:
            if c not in relabel:
                relabel[c] = len(relabel)
            labels.append(relabel[c])
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def k(self) -> int:
        return len(set(self.labels))

    def cluster_of(self, v: int) -> int:
        _check_vertex(v, self.n)
        return self.labels[v - 1]

    def blocks(self) -> list[list[int]]:
        """Clusters as sorted member lists, in canonical cluster order."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.labels, start=1):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class DisagreementsVector:
    """Per-vertex mistake counts induced by a clustering of a signed graph."""

    counts: tuple[int, ...]

    def __init__(self, counts: Iterable[int]):
        counts = tuple(int(c) for c in counts)
        n = len(counts)
        for i, c in enumerate(counts):
            if c < 0 or c > max(n - 1, 0):
                raise ValidationError(f"count {c} at vertex {i + 1} outside [0, n-1]")
        if sum(counts) % 2 != 0:
            raise ValidationError("total disagreements must be even")
        object.__setattr__(self, "counts", counts)

    @property
    def n(self) -> int:
        return len(self.counts)

    def max(self) -> int:
        return max(self.counts, default=0)


@dataclass(frozen=True)
class WeightedGraph:
    """Weighted dissimilarity graph; optionally flagged as normalized (Σw = 1)."""

    n: int
    weighted_edges: tuple[tuple[int, int, float], ...]
    normalized: bool = False
    meta: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    def __init__(
        self,
        n: int,
        weighted_edges: Iterable[tuple[int, int, float]],
        normalized: bool = False,
        meta: Iterable[tuple[str, str]] = (),
    ):
        if n < 0:
            raise ValidationError("vertex count must be nonnegative")
        canon = {}
        for u, v, w in weighted_edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise ValidationError(f"self-pair ({u},{v})")
            w = float(w)
            if not math.isfinite(w) or w < 0:
                raise ValidationError(f"weight {w} of pair ({u},{v}) must be finite and >= 0")
            pair = (u, v) if u < v else (v, u)
            if pair in canon:
                raise ValidationError(f"duplicate pair {pair}")
            canon[pair] = w
        edges = tuple((u, v, w) for (u, v), w in sorted(canon.items()))
        if normalized:
            total = math.fsum(w for _, _, w in edges)
            if abs(total - 1.0) > WEIGHT_SUM_TOL:
                raise ValidationError(f"normalized graph has weight sum {total!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weighted_edges", edges)
        object.__setattr__(self, "normalized", bool(normalized))
        object.__setattr__(self, "meta", tuple(meta))

    @property
    def m(self) -> int:
        return len(self.weighted_edges)

    def total_weight(self) -> float:
        return math.fsum(w for _, _, w in self.weighted_edges)


Node = Union[int, tuple]  # leaf label, or (left, right)


def _canon_node(node) -> tuple[Node, int, int]:
    """Canonicalize (smaller min-leaf child first); returns (node, min_leaf, n_leaves)."""
    if isinstance(node, int) and not isinstance(node, bool):
        return node, node, 1
    if isinstance(node, (tuple, list)) and len(node) == 2:
        left, lmin, lcount = _canon_node(node[0])
        right, rmin, rcount = _canon_node(node[1])
        if rmin < lmin:
            left, right = right, left
            lmin, rmin = rmin, lmin
        return (left, right), lmin, lcount + rcount
    raise ValidationError(f"malformed tree node {node!r}")


def _collect_leaves(node: Node, out: list[int]) -> None:
    if isinstance(node, int):
        out.append(node)
    else:
        _collect_leaves(node[0], out)
        _collect_leaves(node[1], out)


@dataclass(frozen=True)
class BinaryTree:
    """Full leaf-labeled binary tree over leaves 1..n, canonically ordered."""

    n: int
    root: Node

    def __init__(self, root: Node):
        canon, _, count = _canon_node(root)
        leaves: list[int] = []
        _collect_leaves(canon, leaves)
        if sorted(leaves) != list(range(1, count + 1)):
            raise ValidationError(f"leaf labels {sorted(leaves)} are not a permutation of 1..{count}")
        object.__setattr__(self, "n", count)
        object.__setattr__(self, "root", canon)

    def leaf_counts(self) -> dict[Node, int]:
        """Number of leaves under every node (keyed by the node object)."""
        out: dict[Node, int] = {}

        def walk(node: Node) -> int:
            if isinstance(node, int):
                out[node] = 1
                return 1
            c = walk(node[0]) + walk(node[1])
            out[node] = c
            return c

        walk(self.root)
        return out


@dataclass(frozen=True)
class Lin2Instance:
    """System of equations x_j - x_k = a over Z_q; duplicates allowed."""

    q: int
    n0: int
    equations: tuple[tuple[int, int, int], ...]

    def __init__(self, q: int, n0: int, equations: Iterable[tuple[int, int, int]]):
        if q < 1:
            raise ValidationError("modulus must be >= 1")
        if n0 < 1:
            raise ValidationError("variable count must be positive")
        canon = []
        for j, k, a in equations:
            _check_vertex(j, n0, "variable")
            _check_vertex(k, n0, "variable")
            if j == k:
                raise ValidationError(f"equation relates variable {j} to itself")
            if not 0 <= a < q:
                raise ValidationError(f"offset {a} outside Z_{q}")
            if j > k:
                j, k, a = k, j, (-a) % q
            canon.append((j, k, a))
        canon.sort()
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "n0", n0)
        object.__setattr__(self, "equations", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.equations)

    def degrees(self) -> list[int]:
        d = [0] * (self.n0 + 1)
        for j, k, _ in self.equations:
            d[j] += 1
            d[k] += 1
        return d[1:]

    def is_regular(self) -> bool:
        d = self.degrees()
        return len(set(d)) <= 1


@dataclass(frozen=True)
class Assignment:
    """Total assignment of Z_q values to variables 1..n0."""

    q: int
    sigma: tuple[int, ...]

    def __init__(self, q: int, sigma: Iterable[int]):
        if q < 1:
            raise ValidationError("modulus must be >= 1")
        sigma = tuple(int(v) for v in sigma)
        for v in sigma:
            if not 0 <= v < q:
                raise ValidationError(f"value {v} outside Z_{q}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "sigma", sigma)

    @property
    def n0(self) -> int:
        return len(self.sigma)

    def value(self, var: int) -> int:
        _check_vertex(var, self.n0, "variable")
        return self.sigma[var - 1]

    def shifted(self, c: int) -> "Assignment":
        return Assignment(self.q, tuple((v + c) % self.q for v in self.sigma))


@dataclass(frozen=True)
class Coloring:
    """2-coloring of hypergraph vertices; True means Orange, False means Blue."""

    n: int
    orange: frozenset[int]

    def __init__(self, n: int, orange: Iterable[int]):
        orange = frozenset(orange)
        for v in orange:
            _check_vertex(v, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "orange", orange)

    def is_orange(self, v: int) -> bool:
        _check_vertex(v, self.n)
        return v in self.orange

    def makes_bichromatic(self, h: Hypergraph3) -> bool:
        return all(len({self.is_orange(v) for v in e}) == 2 for e in h.edges)


# ---------------------------------------------------------------------------
# parsing / serialization


def _fmt_weight(w: float) -> str:
    return format(w, ".17g")


def serialize_instance(instance) -> str:
    """Canonical text form of any instance type; ends with a newline."""
    if isinstance(instance, Hypergraph3):
        lines = [f"h3 {instance.n} {instance.m}"]
        lines += [f"e {a} {b} {c}" for a, b, c in instance.edges]
    elif isinstance(instance, SignedGraph):
        lines = [f"sg {instance.n}"]
        lines += [f"+ {u} {v}" for u, v in sorted(instance.positive_edges)]
    elif isinstance(instance, WeightedGraph):
        header = f"wg {instance.n} {instance.m}"
        if instance.normalized:
            header += " normalized"
        lines = [header]
        lines += [f"# {key} {value}" for key, value in instance.meta]
        lines += [f"{u} {v} {_fmt_weight(w)}" for u, v, w in instance.weighted_edges]
    elif isinstance(instance, Partition):
        blocks = instance.blocks()
        lines = [f"p {instance.n} {len(blocks)}"]
        lines += ["c " + " ".join(map(str, block)) for block in blocks]
    elif isinstance(instance, BinaryTree):
        def render(node: Node) -> str:
            if isinstance(node, int):
                return str(node)
            return f"({render(node[0])},{render(node[1])})"

        lines = [render(instance.root)]
    elif isinstance(instance, Lin2Instance):
        lines = [f"lin2 {instance.q} {instance.n0} {instance.m}"]
        lines += [f"{j} {k} {a}" for j, k, a in instance.equations]
    elif isinstance(instance, Assignment):
        lines = [f"asg {instance.q} {instance.n0}", "s " + " ".join(map(str, instance.sigma))]
    elif isinstance(instance, Coloring):
        lines = [f"col {instance.n}"]
        lines.append("orange " + " ".join(map(str, sorted(instance.orange))))
        blue = sorted(set(range(1, instance.n + 1)) - instance.orange)
        lines.append("blue " + " ".join(map(str, blue)))
    else:
        raise TypeError(f"cannot serialize {type(instance).__name__}")
    return "\n".join(lines) + "\n"


_KINDS = ("h3", "sg", "wg", "p", "tree", "lin2", "asg", "col")


def _ints(parts: list[str], line_no: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(line_no, f"expected integers, got {' '.join(parts)!r}") from None


def parse_instance(text: str, kind: str):
    """Parse the canonical text format named by `kind` (see module docstring)."""
    if kind not in _KINDS:
        raise ValueError(f"unknown instance kind {kind!r}; expected one of {_KINDS}")
    numbered = [
        (i, line.strip())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    meta = []
    lines = []
    for no, line in numbered:
        if line.startswith("#"):
            fields = line[1:].split(None, 1)
            if len(fields) == 2:
                meta.append((fields[0], fields[1]))
            continue
        lines.append((no, line))
    if not lines:
        raise ParseError(1, "empty input")

    if kind == "tree":
        no, line = lines[0]
        if len(lines) > 1:
            raise ParseError(lines[1][0], "trailing content after tree")
        return _parse_tree_line(no, line)

    no, header = lines[0]
    parts = header.split()
    body = lines[1:]
    try:
        if kind == "h3":
            if parts[0] != "h3" or len(parts) != 3:
                raise ParseError(no, f"expected header 'h3 <n> <m>', got {header!r}")
            n, m = _ints(parts[1:], no)
            edges = []
            for lno, line in body:
                lparts = line.split()
                if lparts[0] != "e" or len(lparts) != 4:
                    raise ParseError(lno, f"expected 'e <v1> <v2> <v3>', got {line!r}")
                edges.append(tuple(_ints(lparts[1:], lno)))
            if len(edges) != m:
                raise ParseError(no, f"header declares {m} triples, found {len(edges)}")
            return Hypergraph3(n, edges)
        if kind == "sg":
            if parts[0] != "sg" or len(parts) != 2:
                raise ParseError(no, f"expected header 'sg <n>', got {header!r}")
            (n,) = _ints(parts[1:], no)
            pairs = []
            for lno, line in body:
                lparts = line.split()
                if lparts[0] != "+" or len(lparts) != 3:
                    raise ParseError(lno, f"expected '+ <u> <v>', got {line!r}")
                pairs.append(tuple(_ints(lparts[1:], lno)))
            return SignedGraph(n, pairs)
        if kind == "wg":
            if parts[0] != "wg" or len(parts) not in (3, 4):
                raise ParseError(no, f"expected header 'wg <n> <m> [normalized]', got {header!r}")
            normalized = len(parts) == 4
            if normalized and parts[3] != "normalized":
                raise ParseError(no, f"unknown header flag {parts[3]!r}")
            n, m = _ints(parts[1:3], no)
            edges = []
            for lno, line in body:
                lparts = line.split()
                if len(lparts) != 3:
                    raise ParseError(lno, f"expected '<u> <v> <w>', got {line!r}")
                u, v = _ints(lparts[:2], lno)
                try:
                    w = float(lparts[2])
                except ValueError:
                    raise ParseError(lno, f"bad weight {lparts[2]!r}") from None
                edges.append((u, v, w))
            if len(edges) != m:
                raise ParseError(no, f"header declares {m} pairs, found {len(edges)}")
            return WeightedGraph(n, edges, normalized=normalized, meta=meta)
        if kind == "p":
            if parts[0] != "p" or len(parts) != 3:
                raise ParseError(no, f"expected header 'p <n> <k>', got {header!r}")
            n, k = _ints(parts[1:], no)
            assignment: dict[int, int] = {}
            for cid, (lno, line) in enumerate(body):
                lparts = line.split()
                if lparts[0] != "c" or len(lparts) < 2:
                    raise ParseError(lno, f"expected 'c <v...>', got {line!r}")
                for v in _ints(lparts[1:], lno):
                    if v in assignment:
                        raise ParseError(lno, f"vertex {v} assigned twice")
                    assignment[v] = cid
            if len(body) != k:
                raise ParseError(no, f"header declares {k} clusters, found {len(body)}")
            return Partition(n, assignment)
        if kind == "lin2":
            if parts[0] != "lin2" or len(parts) != 4:
                raise ParseError(no, f"expected header 'lin2 <q> <n0> <m>', got {header!r}")
            q, n0, m = _ints(parts[1:], no)
            eqs = []
            for lno, line in body:
                lparts = line.split()
                if len(lparts) != 3:
                    raise ParseError(lno, f"expected '<j> <k> <a>', got {line!r}")
                eqs.append(tuple(_ints(lparts, lno)))
            if len(eqs) != m:
                raise ParseError(no, f"header declares {m} equations, found {len(eqs)}")
            return Lin2Instance(q, n0, eqs)
        if kind == "asg":
            if parts[0] != "asg" or len(parts) != 3:
                raise ParseError(no, f"expected header 'asg <q> <n0>', got {header!r}")
            q, n0 = _ints(parts[1:], no)
            if len(body) != 1 or body[0][1].split()[0] != "s":
                raise ParseError(no, "expected a single 's <values...>' line")
            values = _ints(body[0][1].split()[1:], body[0][0])
            if len(values) != n0:
                raise ParseError(body[0][0], f"expected {n0} values, got {len(values)}")
            return Assignment(q, values)
        if kind == "col":
            if parts[0] != "col" or len(parts) != 2:
                raise ParseError(no, f"expected header 'col <n>', got {header!r}")
            (n,) = _ints(parts[1:], no)
            orange: list[int] = []
            blue: list[int] = []
            for lno, line in body:
                lparts = line.split()
                if lparts[0] == "orange":
                    orange = _ints(lparts[1:], lno)
                elif lparts[0] == "blue":
                    blue = _ints(lparts[1:], lno)
                else:
                    raise ParseError(lno, f"expected 'orange'/'blue' line, got {line!r}")
            if sorted(orange + blue) != list(range(1, n + 1)):
                raise ParseError(no, "orange/blue lines do not partition 1..n")
            return Coloring(n, orange)
    except IndexError:
        raise ParseError(no, f"malformed header {header!r}") from None
    raise AssertionError("unreachable")


def _parse_tree_line(line_no: int, line: str) -> BinaryTree:
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(line):
            raise ParseError(line_no, "unexpected end of tree expression")
        if line[pos] == "(":
            pos += 1
            left = node()
            if pos >= len(line) or line[pos] != ",":
                raise ParseError(line_no, f"expected ',' at column {pos + 1}")
            pos += 1
            right = node()
            if pos >= len(line) or line[pos] != ")":
                raise ParseError(line_no, f"expected ')' at column {pos + 1}")
            pos += 1
            return (left, right)
        start = pos
        while pos < len(line) and line[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError(line_no, f"expected leaf label at column {pos + 1}")
        return int(line[start:pos])

    root = node()
    if pos != len(line):
        raise ParseError(line_no, f"trailing characters {line[pos:]!r}")
    try:
        return BinaryTree(root)
    except ValidationError as exc:
        raise ParseError(line_no, str(exc)) from None
