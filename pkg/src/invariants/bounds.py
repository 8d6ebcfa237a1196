"""Known upper bounds on the list chromatic number of a product"""

import logging
from typing import Optional

import networkx as nx

from src.graphs.models import Graph
from src.graphs.structure import induced_subgraph, max_degree
from src.invariants.choosability import list_chromatic_number
from src.invariants.coloring import coloring_number

logger = logging.getLogger(__name__)


def bound_borowiecki(G: Graph, H: Graph,
                     chi_list_g: Optional[int] = None, chi_list_h: Optional[int] = None) -> int:
    """
    min{chi_l(G) + col(H), col(G) + chi_l(H)} - 1.

    List chromatic numbers are computed when not supplied.
    """
    if chi_list_g is None:
        chi_list_g = list_chromatic_number(G)[0]
    if chi_list_h is None:
        chi_list_h = list_chromatic_number(H)[0]
    return min(chi_list_g + coloring_number(H), coloring_number(G) + chi_list_h) - 1


def bound_delta_sum(G: Graph, H: Graph) -> int:
    """Delta(G) + Delta(H), the maximum degree of G□H"""
    return max_degree(G) + max_degree(H)


def _is_odd_cycle(G: Graph) -> bool:
    return G.vertex_count % 2 == 1 and G.vertex_count >= 3 and \
        G.edge_count == G.vertex_count and all(G.degree(v) == 2 for v in range(G.vertex_count))


def _is_complete(G: Graph) -> bool:
    return G.edge_count == G.vertex_count * (G.vertex_count - 1) // 2


def bound_list_brooks(G: Graph) -> int:
    """
    Delta for connected graphs that are neither complete nor odd cycles,
    Delta + 1 otherwise; disconnected graphs take the worst component.
    """
    if G.vertex_count == 0:
        return 0
    worst = 0
    for component in nx.connected_components(G.to_networkx()):
        part = induced_subgraph(G, sorted(component))
        delta = max_degree(part)
        exceptional = _is_complete(part) or _is_odd_cycle(part)
        worst = max(worst, delta + 1 if exceptional else delta)
    return worst
