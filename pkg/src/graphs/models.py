"""Immutable graph model with structured vertex labels"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, Tuple, Union

import networkx as nx

from src.errors import PreconditionError
from src.graphs.enums import GraphFamily

Edge = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Atom:
    """Label of a vertex of a parameterised family (1-based index)"""
    family: GraphFamily
    index: int

    def __str__(self) -> str:
        return f"{self.family.value}{self.index}"


@dataclass(frozen=True, order=True)
class Pair:
    """Label of a product (or tagged join) vertex"""
    left: "VertexLabel"
    right: "VertexLabel"

    def __str__(self) -> str:
        return f"({self.left},{self.right})"


VertexLabel = Union[Atom, Pair]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the unordered pair (u, v) as (min, max)"""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..vertex_count-1.

    Edges are stored as (u, v) with u < v. Labels are display names in
    bijection with the vertex indices.
    """
    vertex_count: int
    labels: Tuple[VertexLabel, ...]
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise PreconditionError("vertex_count must be nonnegative")
        if len(self.labels) != self.vertex_count:
            raise PreconditionError(
                f"expected {self.vertex_count} labels, got {len(self.labels)}"
            )
        if len(set(self.labels)) != len(self.labels):
            raise PreconditionError("vertex labels must be pairwise distinct")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise PreconditionError(f"edge ({u},{v}) is not a normalized pair of vertices")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge], labels: Iterable[VertexLabel] = None) -> "Graph":
        """Build a graph, normalising edge orientation; labels default to Named atoms"""
        if labels is None:
            labels = tuple(Atom(GraphFamily.NAMED, i + 1) for i in range(vertex_count))
        normalized = set()
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"loop at vertex {u} is not allowed")
            normalized.add(normalize_edge(u, v))
        return cls(vertex_count, tuple(labels), frozenset(normalized))

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        neighbors = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(n) for n in neighbors)

    @cached_property
    def edge_list(self) -> Tuple[Edge, ...]:
        """Edges sorted lexicographically"""
        return tuple(sorted(self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def index_of(self, label: VertexLabel) -> int:
        """Vertex index carrying the given label"""
        try:
            return self.labels.index(label)
        except ValueError:
            raise PreconditionError(f"no vertex labelled {label}") from None

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.vertex_count))
        nx_graph.add_edges_from(self.edge_list)
        return nx_graph

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Convert a networkx graph; nodes are renumbered in iteration order"""
        index = {node: i for i, node in enumerate(nx_graph.nodes())}
        edges = [(index[u], index[v]) for u, v in nx_graph.edges() if u != v]
        return cls.from_edges(len(index), edges)

    def __repr__(self):
        return f"<Graph(n={self.vertex_count}, m={self.edge_count})>"
