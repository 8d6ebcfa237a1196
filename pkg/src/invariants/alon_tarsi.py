"""Exact Alon-Tarsi number from graph polynomial coefficients"""

import logging
import math
from typing import Optional, Sequence

import networkx as nx

from src.circulations.coefficient import graph_poly_coeffs
from src.circulations.witness import at_witness_check
from src.errors import AtLabError, PreconditionError
from src.graphs.models import Graph
from src.graphs.structure import degeneracy_order
from src.invariants.coloring import chromatic_number
from src.invariants.models import AlonTarsiResult
from src.orientations.digraph import degree_profile, orient_by_order, reverse
from src.orientations.models import Orientation
from src.utils.performance import measure_performance

logger = logging.getLogger(__name__)


def _flow_orientation(G: Graph, capacities: Sequence[int]) -> Optional[Orientation]:
    # Each edge sends one unit to the endpoint that becomes its tail;
    # vertex v passes at most capacities[v] to the sink.
    if G.edge_count == 0:
        return Orientation(G.vertex_count, frozenset())
    network = nx.DiGraph()
    for u, v in G.edge_list:
        node = ("e", u, v)
        network.add_edge("source", node, capacity=1)
        network.add_edge(node, ("v", u), capacity=1)
        network.add_edge(node, ("v", v), capacity=1)
    for v in range(G.vertex_count):
        network.add_edge(("v", v), "sink", capacity=capacities[v])

    value, flow = nx.maximum_flow(network, "source", "sink")
    if value != G.edge_count:
        return None

    arcs = []
    for u, v in G.edge_list:
        node = ("e", u, v)
        arcs.append((u, v) if flow[node][("v", u)] == 1 else (v, u))
    return Orientation.from_arcs(G.vertex_count, arcs)


def orientation_from_outdegrees(G: Graph, outdegrees: Sequence[int]) -> Orientation:
    """
    Orientation of G with the given outdegree at every vertex, by max flow.

    Raises:
        PreconditionError: no orientation realises the vector
    """
    if len(outdegrees) != G.vertex_count or sum(outdegrees) != G.edge_count:
        raise PreconditionError("outdegree vector must have one entry per vertex and sum to |E|")
    orientation = _flow_orientation(G, outdegrees)
    if orientation is None:
        raise PreconditionError(f"outdegree vector {tuple(outdegrees)} is not realisable")
    return orientation


def orientation_with_bounded_indegree(G: Graph, bound: int) -> Optional[Orientation]:
    """Some orientation of G with every indegree at most bound, or None"""
    if bound < 0:
        raise PreconditionError(f"bound must be nonnegative, got {bound}")
    orientation = _flow_orientation(G, [bound] * G.vertex_count)
    return None if orientation is None else reverse(orientation)


@measure_performance
def alon_tarsi_number(G: Graph) -> AlonTarsiResult:
    """
    AT(G) with a verified witness orientation in the indegree convention.

    Caps are tried upward from max(ceil(|E|/n) + 1, chi). The first cap whose
    coefficient map is nonempty is AT(G); the witness realises a surviving
    exponent vector as outdegrees and is reversed. At cap = col(G) the
    smallest-last order gives an acyclic witness directly.

    Raises:
        ResourceLimitError: the coefficient DP exceeds its state budget
    """
    n = G.vertex_count
    if n == 0:
        return AlonTarsiResult(0, None)

    order, col = degeneracy_order(G)
    start = max(math.ceil(G.edge_count / n) + 1, chromatic_number(G))

    for cap in range(start, col + 1):
        if cap == col:
            witness = orient_by_order(G, order)
            exponents = degree_profile(witness).indegrees
            logger.debug(f"AT = {cap} from the smallest-last order")
        else:
            coeffs = graph_poly_coeffs(G, cap)
            if not coeffs:
                continue
            exponents = coeffs.first_key()
            witness = reverse(orientation_from_outdegrees(G, exponents))
            logger.debug(f"AT = {cap} from exponent vector {exponents}")

        if not at_witness_check(witness):
            raise AtLabError(f"witness for AT = {cap} failed the circulation check")
        return AlonTarsiResult(cap, witness, tuple(exponents))

    raise AtLabError(f"no cap up to col = {col} admitted a witness")
