"""Structural queries: degeneracy, subgraphs, Hamilton paths"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from src.errors import PreconditionError
from src.graphs.models import Edge, Graph

logger = logging.getLogger(__name__)


def degeneracy_order(G: Graph) -> Tuple[Tuple[int, ...], int]:
    """
    Smallest-last ordering and the coloring number.

    Repeatedly removes a vertex of minimum remaining degree (lowest index on
    ties); the ordering is the reverse of the removal sequence, so every
    vertex has at most d-1 neighbours among its predecessors.

    Returns:
        (ordering v_1..v_n, d) with d = col(G); d = 0 for the empty graph
    """
    n = G.vertex_count
    if n == 0:
        return (), 0

    degree = [G.degree(v) for v in range(n)]
    removed = [False] * n
    removal = []
    d = 0
    for _ in range(n):
        v = min((u for u in range(n) if not removed[u]), key=lambda u: (degree[u], u))
        d = max(d, degree[v] + 1)
        removed[v] = True
        removal.append(v)
        for u in G.neighbors(v):
            if not removed[u]:
                degree[u] -= 1

    return tuple(reversed(removal)), d


def back_degree(G: Graph, order: Sequence[int]) -> int:
    """Largest number of earlier neighbours of any vertex along order"""
    position = {v: i for i, v in enumerate(order)}
    worst = 0
    for v in order:
        earlier = sum(1 for u in G.neighbors(v) if position[u] < position[v])
        worst = max(worst, earlier)
    return worst


def max_degree(G: Graph) -> int:
    return max((G.degree(v) for v in range(G.vertex_count)), default=0)


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by vertices, renumbered in the given order"""
    vertices = list(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise PreconditionError("induced_subgraph vertices must be distinct")
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return Graph.from_edges(len(vertices), edges, [G.labels[v] for v in vertices])


def is_connected(G: Graph) -> bool:
    return G.vertex_count > 0 and nx.is_connected(G.to_networkx())


def is_bipartite(G: Graph) -> bool:
    return nx.is_bipartite(G.to_networkx())


def bridges(G: Graph) -> List[Edge]:
    """Cut edges of G, normalised and sorted"""
    return sorted(tuple(sorted(e)) for e in nx.bridges(G.to_networkx()))


def is_clique(G: Graph, vertices: Sequence[int]) -> bool:
    return all(G.has_edge(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:])


def is_cycle_in_order(G: Graph, vertices: Sequence[int]) -> bool:
    """True when vertices, in the given cyclic order, induce exactly a cycle"""
    n = len(vertices)
    if n < 3:
        return False
    expected = {tuple(sorted((vertices[i], vertices[(i + 1) % n]))) for i in range(n)}
    induced = {(u, v) for u, v in G.edges if u in set(vertices) and v in set(vertices)}
    return induced == expected


def is_hamilton_path(G: Graph, path: Sequence[int]) -> bool:
    if sorted(path) != list(range(G.vertex_count)):
        return False
    return all(G.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))


def find_hamilton_path(G: Graph, max_back_degree: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """
    Hamilton path minimising back-degree (exhaustive, small graphs only).

    Args:
        max_back_degree: accept only paths whose back-degree is at most this

    Returns:
        The lexicographically first path with the least back-degree, or None
    """
    n = G.vertex_count
    if n == 0:
        return None

    best: List = [None, n + 1]

    def extend(path: List[int], used: List[bool], worst: int):
        if worst >= best[1]:
            return
        if len(path) == n:
            best[0], best[1] = tuple(path), worst
            return
        for u in sorted(G.neighbors(path[-1])):
            if used[u]:
                continue
            earlier = sum(1 for w in G.neighbors(u) if used[w])
            used[u] = True
            path.append(u)
            extend(path, used, max(worst, earlier))
            path.pop()
            used[u] = False

    for start in range(n):
        used = [False] * n
        used[start] = True
        extend([start], used, 0)

    if best[0] is None:
        return None
    if max_back_degree is not None and best[1] > max_back_degree:
        return None
    logger.debug(f"Hamilton path {best[0]} with back-degree {best[1]}")
    return best[0]
