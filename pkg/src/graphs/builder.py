"""Constructors and combinators for the graphs under study"""

import logging
from typing import Iterable, Optional, Sequence, Tuple, Union

import networkx as nx

from src.errors import AtLabError, PreconditionError
from src.graphs.enums import GraphFamily
from src.graphs.models import Atom, Edge, Graph, Pair, normalize_edge

logger = logging.getLogger(__name__)


class InvalidFamilyError(AtLabError):
    """Family parameters violate the family's constraints"""
    pass


class GraphEditError(AtLabError):
    """Edge edit or cross-edge list is invalid"""

    def __init__(self, message: str, offending: Sequence[Edge] = ()):
        self.offending = tuple(offending)
        if self.offending:
            message = f"{message}: {', '.join(f'({u},{v})' for u, v in self.offending)}"
        super().__init__(message)


def build_family(family: Union[GraphFamily, str], *params: int) -> Graph:
    """
    Build a parameterised graph with canonical labels.

    Args:
        family: P, C, K or Theta
        params: n for P/C/K, path lengths l_1..l_t for Theta

    Returns:
        Graph with Atom labels; path and cycle labels follow the vertex order
    """
    family = GraphFamily(family)

    if family == GraphFamily.THETA:
        return _theta(params)

    if len(params) != 1:
        raise InvalidFamilyError(f"{family.value} takes exactly one parameter, got {len(params)}")
    n = params[0]
    labels = tuple(Atom(family, i + 1) for i in range(n))

    if family == GraphFamily.PATH:
        if n < 1:
            raise InvalidFamilyError(f"P(n) requires n >= 1, got {n}")
        return Graph(n, labels, frozenset((i, i + 1) for i in range(n - 1)))

    if family == GraphFamily.CYCLE:
        if n < 3:
            raise InvalidFamilyError(f"C(n) requires n >= 3, got {n}")
        edges = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
        return Graph(n, labels, frozenset(edges))

    if family == GraphFamily.COMPLETE:
        if n < 1:
            raise InvalidFamilyError(f"K(n) requires n >= 1, got {n}")
        return Graph(n, labels, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))

    raise InvalidFamilyError(f"family {family.value} has no parameterised constructor")


def _theta(lengths: Tuple[int, ...]) -> Graph:
    # Branch vertices are Theta1 and Theta2; internal vertices follow branch by branch.
    if len(lengths) < 2:
        raise InvalidFamilyError(f"Theta requires at least 2 paths, got {len(lengths)}")
    if any(length < 1 for length in lengths):
        raise InvalidFamilyError("Theta path lengths must be >= 1")
    if sum(1 for length in lengths if length == 1) > 1:
        raise InvalidFamilyError("Theta allows at most one path of length 1")

    edges = set()
    next_vertex = 2
    for length in lengths:
        previous = 0
        for _ in range(length - 1):
            edges.add(normalize_edge(previous, next_vertex))
            previous = next_vertex
            next_vertex += 1
        edges.add(normalize_edge(previous, 1))

    labels = tuple(Atom(GraphFamily.THETA, i + 1) for i in range(next_vertex))
    return Graph(next_vertex, labels, frozenset(edges))


def product_index(g: int, h: int, h_count: int) -> int:
    """Flattened index of the product vertex (g, h)"""
    return g * h_count + h


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """
    Cartesian product G □ H.

    Vertex (g, h) gets index g·|V(H)| + h and label Pair(label_g, label_h).
    """
    if G.vertex_count == 0 or H.vertex_count == 0:
        raise PreconditionError("cartesian_product requires nonempty factors")

    m = H.vertex_count
    labels = tuple(Pair(lg, lh) for lg in G.labels for lh in H.labels)
    edges = set()
    for g in range(G.vertex_count):
        for h1, h2 in H.edges:
            edges.add((product_index(g, h1, m), product_index(g, h2, m)))
    for g1, g2 in G.edges:
        for h in range(m):
            edges.add((product_index(g1, h, m), product_index(g2, h, m)))

    return Graph(G.vertex_count * m, labels, frozenset(edges))


def join(G: Graph, H: Graph, cross_edges: Optional[Iterable[Tuple[int, int]]] = None) -> Graph:
    """
    Join or partial join of G and H.

    G keeps indices 0..|V(G)|-1 and H is shifted by |V(G)|. Labels are tagged
    Pair(Named1, label) for G and Pair(Named2, label) for H so that equal
    factor labels stay distinct.

    Args:
        cross_edges: (G-vertex, H-vertex) pairs; None means the full join
    """
    offset = G.vertex_count
    if cross_edges is None:
        cross = [(g, h) for g in range(G.vertex_count) for h in range(H.vertex_count)]
    else:
        cross = list(cross_edges)
        invalid = [(g, h) for g, h in cross
                   if not (0 <= g < G.vertex_count and 0 <= h < H.vertex_count)]
        if invalid:
            raise GraphEditError("cross edges name vertices outside the factors", invalid)
        seen = set()
        duplicates = []
        for pair in cross:
            if pair in seen:
                duplicates.append(pair)
            seen.add(pair)
        if duplicates:
            raise GraphEditError("duplicate cross edges", duplicates)

    left_tag = Atom(GraphFamily.NAMED, 1)
    right_tag = Atom(GraphFamily.NAMED, 2)
    labels = tuple(Pair(left_tag, label) for label in G.labels) + \
        tuple(Pair(right_tag, label) for label in H.labels)

    edges = set(G.edges)
    edges.update((u + offset, v + offset) for u, v in H.edges)
    edges.update((g, h + offset) for g, h in cross)
    return Graph(G.vertex_count + H.vertex_count, labels, frozenset(edges))


def partial_join_with_universal(G1: Graph, G2: Graph, universal: Iterable[int]) -> Graph:
    """Partial join where the listed G1 vertices see all of G2 and the rest see none"""
    universal = sorted(set(universal))
    return join(G1, G2, [(g, h) for g in universal for h in range(G2.vertex_count)])


def graph_power(G: Graph, r: int) -> Graph:
    """r-th power: uv is an edge iff 1 <= dist_G(u, v) <= r"""
    if r < 1:
        raise PreconditionError(f"graph_power requires r >= 1, got {r}")

    nx_graph = G.to_networkx()
    edges = set()
    for u in range(G.vertex_count):
        distances = nx.single_source_shortest_path_length(nx_graph, u, cutoff=r)
        edges.update(normalize_edge(u, v) for v, d in distances.items() if d >= 1)
    return Graph(G.vertex_count, G.labels, frozenset(edges))


def edit_edges(G: Graph, add: Iterable[Edge] = (), delete: Iterable[Edge] = ()) -> Graph:
    """
    Add and delete edges, keeping labels.

    Added edges must be absent non-loops; deleted edges must be present.
    All violations are reported together.
    """
    add = [tuple(e) for e in add]
    delete = [tuple(e) for e in delete]

    bad_add = [(u, v) for u, v in add
               if u == v or not (0 <= u < G.vertex_count and 0 <= v < G.vertex_count)
               or G.has_edge(u, v)]
    bad_delete = [(u, v) for u, v in delete
                  if not (0 <= u < G.vertex_count and 0 <= v < G.vertex_count) or not G.has_edge(u, v)]
    if bad_add or bad_delete:
        raise GraphEditError("edge edit violates preconditions", bad_add + bad_delete)

    edges = set(G.edges)
    edges.difference_update(normalize_edge(u, v) for u, v in delete)
    edges.update(normalize_edge(u, v) for u, v in add)
    logger.debug(f"Edited graph: +{len(add)} -{len(delete)} edges")
    return Graph(G.vertex_count, G.labels, frozenset(edges))
