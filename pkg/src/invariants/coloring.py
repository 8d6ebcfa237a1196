"""Exact proper and list coloring by backtracking"""

import logging
from typing import Dict, List, Optional, Tuple

from src.graphs.models import Graph
from src.graphs.structure import degeneracy_order
from src.invariants.models import ListAssignment
from src.utils.performance import measure_performance

logger = logging.getLogger(__name__)


def greedy_clique(G: Graph) -> List[int]:
    """Clique grown greedily from each vertex; the largest one found"""
    best: List[int] = []
    for start in range(G.vertex_count):
        clique = [start]
        candidates = set(G.neighbors(start))
        while candidates:
            v = max(candidates, key=lambda u: (len(G.neighbors(u) & candidates), -u))
            clique.append(v)
            candidates &= G.neighbors(v)
        if len(clique) > len(best):
            best = clique
    return best


def dsatur_coloring(G: Graph) -> List[int]:
    """Greedy DSATUR coloring (an upper bound for chi)"""
    n = G.vertex_count
    colors = [-1] * n
    neighbor_colors = [set() for _ in range(n)]
    uncolored = set(range(n))
    while uncolored:
        v = max(uncolored, key=lambda u: (len(neighbor_colors[u]), G.degree(u), -u))
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        uncolored.remove(v)
        for u in G.neighbors(v):
            neighbor_colors[u].add(c)
    return colors


@measure_performance
def chromatic_number(G: Graph) -> int:
    """
    Exact chi(G) by DSATUR branch and bound.

    The greedy DSATUR coloring gives the starting upper bound and a greedy
    clique the lower bound; the search stops once they meet.
    """
    n = G.vertex_count
    if n == 0:
        return 0

    lower = len(greedy_clique(G))
    best = max(dsatur_coloring(G)) + 1
    if best == lower:
        return best

    colors = [-1] * n
    neighbor_colors: List[Dict[int, int]] = [dict() for _ in range(n)]

    def choose_vertex() -> Optional[int]:
        uncolored = [v for v in range(n) if colors[v] == -1]
        if not uncolored:
            return None
        return max(uncolored, key=lambda v: (len(neighbor_colors[v]), G.degree(v), -v))

    def backtrack(used: int) -> bool:
        nonlocal best
        v = choose_vertex()
        if v is None:
            best = used
            return best == lower

        for c in range(min(used + 1, best - 1)):
            if c in neighbor_colors[v]:
                continue
            colors[v] = c
            for u in G.neighbors(v):
                neighbor_colors[u][c] = neighbor_colors[u].get(c, 0) + 1
            done = backtrack(max(used, c + 1))
            colors[v] = -1
            for u in G.neighbors(v):
                neighbor_colors[u][c] -= 1
                if not neighbor_colors[u][c]:
                    del neighbor_colors[u][c]
            if done:
                return True
        return False

    backtrack(0)
    logger.debug(f"chi = {best} (clique bound {lower})")
    return best


def coloring_number(G: Graph) -> int:
    return degeneracy_order(G)[1]


def _available(G: Graph, L: ListAssignment, coloring: List[Optional[int]], v: int) -> List[int]:
    taken = {coloring[u] for u in G.neighbors(v) if coloring[u] is not None}
    return sorted(c for c in L[v] if c not in taken)


def check_list_colorable(G: Graph, L: ListAssignment) -> Optional[Tuple[int, ...]]:
    """
    A proper coloring f with f(v) in L(v) for every v, or None.

    Backtracking always branches on the uncoloured vertex with the fewest
    available colors.
    """
    if len(L) != G.vertex_count:
        raise ValueError(f"list assignment covers {len(L)} vertices, graph has {G.vertex_count}")
    coloring: List[Optional[int]] = [None] * G.vertex_count

    def backtrack(left: int) -> bool:
        if left == 0:
            return True
        v, options = None, None
        for u in range(G.vertex_count):
            if coloring[u] is None:
                avail = _available(G, L, coloring, u)
                if options is None or len(avail) < len(options):
                    v, options = u, avail
                    if not avail:
                        return False
        for c in options:
            coloring[v] = c
            if backtrack(left - 1):
                return True
        coloring[v] = None
        return False

    if backtrack(G.vertex_count):
        return tuple(coloring)
    return None


def count_list_colorings(G: Graph, L: ListAssignment, stop_at: Optional[int] = None) -> int:
    """Number of proper L-colorings, counting stops once stop_at is reached"""
    coloring: List[Optional[int]] = [None] * G.vertex_count
    order = sorted(range(G.vertex_count), key=lambda v: (len(L[v]), v))
    count = 0

    def backtrack(i: int):
        nonlocal count
        if stop_at is not None and count >= stop_at:
            return
        if i == len(order):
            count += 1
            return
        v = order[i]
        for c in _available(G, L, coloring, v):
            coloring[v] = c
            backtrack(i + 1)
        coloring[v] = None

    backtrack(0)
    return count


def is_proper_list_coloring(G: Graph, L: ListAssignment, coloring) -> bool:
    return all(coloring[v] in L[v] for v in range(G.vertex_count)) and \
        all(coloring[u] != coloring[v] for u, v in G.edges)
