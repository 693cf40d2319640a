"""
Graph representation, graph6 codec, products, matching graphs, metrics and
small-order isomorphism.

Vertices are dense integers 0..n-1. Adjacency is kept as one bitmask per
vertex so that forcing rounds are a handful of integer operations.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from constants import DEFAULT_MAX_ORDER_ISO, GRAPH6_HEADER, GRAPH6_MAX_ORDER
from errors import BudgetExceededError, Graph6ParseError, GraphArgumentError

logger = logging.getLogger(__name__)


# BITSET UTILS

def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Vertices of a bitmask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# GRAPH

@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Edges are stored as sorted pairs (u, v) with u < v. Optional labels give
    fixtures readable vertex names; a label may list aliases separated by
    '=' (for example 'w1=u1' when an arm of a generalized star has one vertex).
    """

    n: int
    edges: frozenset[tuple[int, int]]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        if n < 0:
            raise GraphArgumentError(f"order must be non-negative, got {n}")
        normalized = set()
        for edge in edges:
            u, v = edge
            if u == v:
                raise GraphArgumentError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphArgumentError(f"edge {u}-{v} out of range for order {n}")
            normalized.add((min(u, v), max(u, v)))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphArgumentError(f"expected {n} labels, got {len(labels)}")
        return cls(n, frozenset(normalized), labels)

    @classmethod
    def edgeless(cls, n: int) -> "Graph":
        return cls.from_edges(n, [])

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        order = sorted(g.nodes())
        index = {node: i for i, node in enumerate(order)}
        return cls.from_edges(len(order), ((index[a], index[b]) for a, b in g.edges()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(members(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def vertex(self, name: str) -> int:
        """Look a vertex up by label (or one of its '='-separated aliases)."""
        if self.labels is not None:
            for v, text in enumerate(self.labels):
                if name in text.split("="):
                    return v
        if name.isdigit() and int(name) < self.n:
            return int(name)
        raise GraphArgumentError(f"no vertex labelled {name!r}")

    def vertex_set(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.vertex(name) for name in names)

    def with_labels(self, labels: Optional[Sequence[str]]) -> "Graph":
        return Graph.from_edges(self.n, self.edges, labels)

    def __repr__(self) -> str:
        if self.n > GRAPH6_MAX_ORDER:
            return f"Graph(n={self.n}, m={self.m})"
        return f"Graph(n={self.n}, m={self.m}, g6={encode_graph6(self)!r})"


@dataclass(frozen=True)
class MatchingSpec:
    """Bijection mu from the vertices of H1 onto the vertices of H2."""

    mu: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mu) != list(range(len(self.mu))):
            raise GraphArgumentError(f"matching {self.mu} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> "MatchingSpec":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.mu)

    def inverse(self) -> "MatchingSpec":
        inv = [0] * self.n
        for i, j in enumerate(self.mu):
            inv[j] = i
        return MatchingSpec(tuple(inv))


# PETERSEN MATCHING: 1 2 3 4 5 -> 1 4 2 5 3, zero-based
PETERSEN_MATCHING = MatchingSpec((0, 3, 1, 4, 2))


# GRAPH6

def encode_graph6(g: Graph) -> str:
    """Encode a graph in graph6 short form (n <= 62), without header."""
    if g.n > GRAPH6_MAX_ORDER:
        raise GraphArgumentError(f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 record (short form only).

    A leading '>>graph6<<' header and a trailing newline are tolerated.
    """
    record = text.rstrip("\r\n")
    start = 0
    if record.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    if start >= len(record):
        raise Graph6ParseError("empty graph6 record", start)

    head = ord(record[start])
    if head == 126:
        raise Graph6ParseError(f"long-form header (n > {GRAPH6_MAX_ORDER}) is not supported", start)
    if not 63 <= head <= 125:
        raise Graph6ParseError(f"invalid order byte {record[start]!r}", start)
    n = head - 63

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = record[start + 1:]
    if len(body) < nbytes:
        raise Graph6ParseError(
            f"truncated bit vector: expected {nbytes} bytes, got {len(body)}",
            start + 1 + len(body))
    if len(body) > nbytes:
        raise Graph6ParseError("trailing garbage after bit vector", start + 1 + nbytes)

    bits = []
    for k, ch in enumerate(body):
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise Graph6ParseError(f"invalid data byte {ch!r}", start + 1 + k)
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# CONSTRUCTIONS

def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    labels = None
    if g.labels is not None and h.labels is not None:
        labels = g.labels + h.labels
    return Graph.from_edges(g.n + h.n, list(g.edges) + shifted, labels)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex (a, b) numbered a * |H| + b."""
    if g.n == 0 or h.n == 0:
        raise GraphArgumentError("cartesian product needs two nonempty graphs")
    product = nx.cartesian_product(g.to_networkx(), h.to_networkx())
    edges = [(a * h.n + b, c * h.n + d) for (a, b), (c, d) in product.edges()]
    return Graph.from_edges(g.n * h.n, edges)


def matching_graph(h1: Graph, h2: Graph, mu: MatchingSpec) -> Graph:
    """The matching graph (H1, H2, mu): H1 on 0..n-1, H2 on n..2n-1."""
    if h1.n != h2.n:
        raise GraphArgumentError(f"matching graph needs equal orders, got {h1.n} and {h2.n}")
    if mu.n != h1.n:
        raise GraphArgumentError(f"matching has {mu.n} entries for order {h1.n}")
    n = h1.n
    edges = list(h1.edges)
    edges.extend((u + n, v + n) for u, v in h2.edges)
    edges.extend((i, n + mu.mu[i]) for i in range(n))
    return Graph.from_edges(2 * n, edges)


def cone(g: Graph) -> Graph:
    """Adjoin an apex vertex (numbered n) adjacent to every vertex of G."""
    return Graph.from_edges(g.n + 1, list(g.edges) + [(v, g.n) for v in g.vertices])


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """G[keep], relabelled densely. Returns the graph and, for each new vertex,
    the old vertex it came from."""
    old = tuple(sorted(set(keep)))
    for v in old:
        if not 0 <= v < g.n:
            raise GraphArgumentError(f"vertex {v} out of range for order {g.n}")
    index = {v: i for i, v in enumerate(old)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = None if g.labels is None else [g.labels[v] for v in old]
    return Graph.from_edges(len(old), edges, labels), old


def delete_vertex(g: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    if not 0 <= v < g.n:
        raise GraphArgumentError(f"vertex {v} out of range for order {g.n}")
    return induced_subgraph(g, (u for u in g.vertices if u != v))


# METRICS

@dataclass(frozen=True)
class Metrics:
    components: int
    diameter: float  # math.inf when disconnected
    degrees: tuple[int, ...]


def component_count(g: Graph) -> int:
    return nx.number_connected_components(g.to_networkx())


def components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the components, ordered by smallest vertex."""
    comps = [frozenset(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(comps, key=min)


def is_connected(g: Graph) -> bool:
    return g.n > 0 and component_count(g) == 1


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def is_path(g: Graph) -> bool:
    return is_tree(g) and max(g.degrees(), default=0) <= 2


def basic_metrics(g: Graph) -> Metrics:
    degrees = tuple(g.degrees())
    if g.n == 0:
        return Metrics(0, 0, degrees)
    ng = g.to_networkx()
    count = nx.number_connected_components(ng)
    diameter = nx.diameter(ng) if count == 1 else math.inf
    return Metrics(count, diameter, degrees)


# ISOMORPHISM

def find_isomorphism(g: Graph, h: Graph,
                     max_order: int = DEFAULT_MAX_ORDER_ISO) -> Optional[tuple[int, ...]]:
    """Return phi with phi[v] the image of v in H, or None when G and H are
    not isomorphic."""
    order = max(g.n, h.n)
    if order > max_order:
        raise BudgetExceededError("isomorphism order", max_order, order)
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    matcher = GraphMatcher(g.to_networkx(), h.to_networkx())
    if not matcher.is_isomorphic():
        return None
    phi = tuple(matcher.mapping[v] for v in g.vertices)
    assert all(h.has_edge(phi[u], phi[v]) for u, v in g.edges), "witness does not preserve edges"
    return phi


def are_isomorphic(g: Graph, h: Graph, max_order: int = DEFAULT_MAX_ORDER_ISO) -> bool:
    return find_isomorphism(g, h, max_order) is not None


def automorphisms(g: Graph, max_order: int = DEFAULT_MAX_ORDER_ISO) -> list[tuple[int, ...]]:
    if g.n > max_order:
        raise BudgetExceededError("automorphism order", max_order, g.n)
    ng = g.to_networkx()
    return [tuple(m[v] for v in g.vertices) for m in GraphMatcher(ng, ng).isomorphisms_iter()]


def orbit_classes(g: Graph, sets: Iterable[frozenset[int]],
                  max_order: int = DEFAULT_MAX_ORDER_ISO) -> list[list[frozenset[int]]]:
    """Group vertex sets into classes of sets mapped onto each other by an
    automorphism of G (isomorphic zero forcing sets)."""
    autos = automorphisms(g, max_order)
    wanted = [frozenset(s) for s in sets]
    pool = set(wanted)
    classes: list[list[frozenset[int]]] = []
    seen: dict[frozenset[int], int] = {}
    for s in wanted:
        if s in seen:
            continue
        seen[s] = len(classes)
        classes.append([s])
        for phi in autos:
            image = frozenset(phi[v] for v in s)
            if image in pool and image not in seen:
                seen[image] = seen[s]
                classes[seen[s]].append(image)
    return [sorted(c, key=sorted) for c in classes]
