"""Generic digraph utilities on orientations"""

import logging
from typing import FrozenSet, Iterable, Sequence

import networkx as nx

from src.errors import PreconditionError
from src.graphs.models import Edge, Graph, normalize_edge
from src.orientations.models import Annotations, Arc, DegreeProfile, Orientation

logger = logging.getLogger(__name__)


def _flip(arc: Arc) -> Arc:
    return arc[1], arc[0]


def reverse(D: Orientation) -> Orientation:
    """Reverse every arc; annotations are reversed along with the arcs"""
    annotations = None
    if D.annotations is not None:
        a = D.annotations
        annotations = Annotations(
            base_cycles=tuple(frozenset(_flip(arc) for arc in cycle) for cycle in a.base_cycles),
            special_arc=_flip(a.special_arc) if a.special_arc is not None else None,
            level_edges=tuple(_flip(arc) for arc in a.level_edges),
            blocks=a.blocks,
            block_special_arcs=tuple(_flip(arc) for arc in a.block_special_arcs),
        )
    return Orientation(D.vertex_count, frozenset(_flip(arc) for arc in D.arcs), annotations)


def degree_profile(D: Orientation) -> DegreeProfile:
    indegrees = [0] * D.vertex_count
    outdegrees = [0] * D.vertex_count
    for tail, head in D.arcs:
        outdegrees[tail] += 1
        indegrees[head] += 1
    return DegreeProfile(tuple(indegrees), tuple(outdegrees))


def is_acyclic(D: Orientation) -> bool:
    return nx.is_directed_acyclic_graph(D.to_networkx())


def underlying_edges(D: Orientation) -> FrozenSet[Edge]:
    """Unordered edge set the arcs project to"""
    return frozenset(normalize_edge(t, h) for t, h in D.arcs)


def orients(D: Orientation, G: Graph, extra: Iterable[Edge] = ()) -> bool:
    """True when D directs every edge of G plus the extra edges exactly once"""
    expected = set(G.edges) | {normalize_edge(u, v) for u, v in extra}
    return D.vertex_count == G.vertex_count and underlying_edges(D) == expected \
        and len(D.arcs) == len(expected)


def sub_orientation(D: Orientation, vertices: Sequence[int]) -> Orientation:
    """Restriction of D to vertices, renumbered in the given order"""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise PreconditionError("sub_orientation vertices must be distinct")
    arcs = frozenset((index[t], index[h]) for t, h in D.arcs if t in index and h in index)
    return Orientation(len(vertices), arcs)


def orient_by_order(G: Graph, order: Sequence[int]) -> Orientation:
    """Acyclic orientation directing every edge from earlier to later in order"""
    if sorted(order) != list(range(G.vertex_count)):
        raise PreconditionError("order must be a permutation of the vertices")
    position = {v: i for i, v in enumerate(order)}
    arcs = frozenset((u, v) if position[u] < position[v] else (v, u) for u, v in G.edges)
    return Orientation(G.vertex_count, arcs)


def simple_cycles(D: Orientation):
    """Directed simple cycles of D as arc sets"""
    for cycle in nx.simple_cycles(D.to_networkx()):
        yield frozenset((cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))
