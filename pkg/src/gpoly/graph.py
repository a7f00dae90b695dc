"""Simple undirected graphs, graph6 I/O, matrices and deck generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import MalformedGraph6, NoSuchEdge, TooManyVertices, ZeroWeight
from .linalg import RatMatrix

Edge = tuple[int, int]

MAX_GRAPH6_VERTICES = 62


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``; ``adj[i]`` is a neighbour bitset."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("need one adjacency bitset per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i} has a neighbour outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        adj = [0] * n
        for s, t in edges:
            if s == t:
                raise ValueError(f"self-loop at vertex {s}")
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"edge {(s, t)} out of range")
            adj[s] |= 1 << t
            adj[t] |= 1 << s
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, ((s, t) for s in range(n) for t in range(s + 1, n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((s, t) for s in range(self.n) for t in _bits(self.adj[s]) if s < t)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, s: int, t: int) -> bool:
        return 0 <= s < self.n and 0 <= t < self.n and bool(self.adj[s] >> t & 1)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _norm_edge(g: Graph, e: Edge) -> Edge:
    s, t = e
    if s > t:
        s, t = t, s
    if not g.has_edge(s, t):
        raise NoSuchEdge(f"{(s, t)} is not an edge")
    return s, t


@dataclass(frozen=True)
class WeightedGraph:
    """A graph with a nonzero rational weight on every edge.

    ``weights[k]`` belongs to ``graph.edges[k]``.
    """

    graph: Graph
    weights: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        if len(self.weights) != self.graph.m:
            raise ValueError("need exactly one weight per edge")
        ws = tuple(Fraction(w) for w in self.weights)
        if any(w == 0 for w in ws):
            raise ZeroWeight("edge weights must be nonzero")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def from_mapping(cls, graph: Graph, weight: Mapping[Edge, object]) -> WeightedGraph:
        lookup = {(min(e), max(e)): w for e, w in weight.items()}
        if set(lookup) != set(graph.edges):
            raise ValueError("weights must be defined on exactly the edges of the graph")
        return cls(graph, tuple(Fraction(lookup[e]) for e in graph.edges))

    @classmethod
    def unit(cls, graph: Graph) -> WeightedGraph:
        return cls(graph, (Fraction(1),) * graph.m)

    def weight(self, e: Edge) -> Fraction:
        return self.weights[self.graph.edges.index(_norm_edge(self.graph, e))]

    def items(self):
        return zip(self.graph.edges, self.weights)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (n <= 62)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 record")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= v <= 63 for v in data):
        raise MalformedGraph6(f"character outside 63..126 in {text!r}")
    n = data[0]
    if n > MAX_GRAPH6_VERTICES:
        raise MalformedGraph6(f"only single-byte sizes (n <= 62) are supported: {text!r}")
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    if len(data) - 1 != want:
        raise MalformedGraph6(f"expected {want} data bytes for n={n}, got {len(data) - 1}: {text!r}")
    adj = [0] * n
    k = 0
    for t in range(1, n):
        for s in range(t):
            byte, off = divmod(k, 6)
            if data[1 + byte] >> (5 - off) & 1:
                adj[s] |= 1 << t
                adj[t] |= 1 << s
            k += 1
    # padding bits must be zero
    if nbits % 6 and data[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6(f"nonzero padding bits in {text!r}")
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_VERTICES:
        raise TooManyVertices(f"graph6 output supports n <= 62, got {n}")
    out = [n]
    acc = nacc = 0
    for t in range(1, n):
        for s in range(t):
            acc = acc << 1 | (g.adj[s] >> t & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc)
                acc = nacc = 0
    if nacc:
        out.append(acc << (6 - nacc))
    return "".join(chr(v + 63) for v in out)


def adjacency_matrix(g: Graph) -> RatMatrix:
    return RatMatrix([[row >> j & 1 for j in range(g.n)] for row in g.adj])


def degree_matrix(g: Graph) -> RatMatrix:
    return RatMatrix.diagonal(g.degrees)


def weighted_adjacency_matrix(wg: WeightedGraph) -> RatMatrix:
    n = wg.graph.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (s, t), w in wg.items():
        rows[s][t] = rows[t][s] = w
    return RatMatrix(rows)


def weighted_degree_matrix(wg: WeightedGraph) -> RatMatrix:
    deg = [Fraction(0)] * wg.graph.n
    for (s, t), w in wg.items():
        deg[s] += w
        deg[t] += w
    return RatMatrix.diagonal(deg)


def delete_edge(g: Graph, e: Edge) -> Graph:
    s, t = _norm_edge(g, e)
    adj = list(g.adj)
    adj[s] &= ~(1 << t)
    adj[t] &= ~(1 << s)
    return Graph(g.n, tuple(adj))


def delete_weighted_edge(wg: WeightedGraph, e: Edge) -> WeightedGraph:
    e = _norm_edge(wg.graph, e)
    k = wg.graph.edges.index(e)
    return WeightedGraph(delete_edge(wg.graph, e), wg.weights[:k] + wg.weights[k + 1:])


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Remove vertices and incident edges; survivors keep their relative order."""
    gone = set(vertices)
    keep = [v for v in range(g.n) if v not in gone]
    index = {v: i for i, v in enumerate(keep)}
    return Graph.from_edges(len(keep), ((index[s], index[t]) for s, t in g.edges
                                        if s in index and t in index))


def delete_vertex_pair(g: Graph, e: Edge) -> Graph:
    return delete_vertices(g, _norm_edge(g, e))


def edge_deck(g: Graph) -> list[Graph]:
    return [delete_edge(g, e) for e in g.edges]


def vertex_pair_deck(g: Graph) -> list[Graph]:
    return [delete_vertex_pair(g, e) for e in g.edges]


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, record)`` for each graph6 record in a corpus.

    Blank lines and bare ``>>...`` header lines are skipped; a ``>>graph6<<``
    prefix glued to the first record is stripped.
    """
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        elif line.startswith(">>"):
            continue
        if line:
            yield lineno, line
