"""Exact circulation census by pruned arc-subset enumeration"""

import logging
from typing import Iterator, List, Tuple

import networkx as nx

from src.circulations.models import Census, Circulation
from src.config import Config
from src.errors import ResourceLimitError
from src.orientations.models import Arc, Orientation
from src.utils.performance import measure_performance

logger = logging.getLogger(__name__)


class CirculationEnumerator:
    """
    Depth-first include/exclude search over the arcs of a digraph.

    Arcs are ordered so that every vertex closes (has no undecided arcs)
    as early as possible. A branch is cut as soon as some vertex's
    out-minus-in balance exceeds its number of undecided arcs, which also
    forces balance zero at every closed vertex.
    """

    def __init__(self, D: Orientation):
        limit = Config.ENUMERATION_ARC_LIMIT
        if D.arc_count > limit:
            raise ResourceLimitError("ENUMERATION_ARC_LIMIT", limit, D.arc_count, hint="use census_dp")
        self.digraph = D
        self.arcs = self._arc_order(D)

    @staticmethod
    def _arc_order(D: Orientation) -> List[Arc]:
        undirected = nx.Graph()
        undirected.add_nodes_from(range(D.vertex_count))
        undirected.add_edges_from(D.arcs)
        order = list(nx.utils.cuthill_mckee_ordering(undirected))
        position = {v: i for i, v in enumerate(order)}
        return sorted(
            D.arcs,
            key=lambda arc: (max(position[arc[0]], position[arc[1]]), min(position[arc[0]], position[arc[1]])),
        )

    def circulations(self) -> Iterator[Circulation]:
        """Yield every circulation, the empty one included, in search order"""
        for chosen in self._search():
            yield frozenset(chosen)

    def _search(self) -> Iterator[Tuple[Arc, ...]]:
        arcs = self.arcs
        remaining = [0] * self.digraph.vertex_count
        for tail, head in arcs:
            remaining[tail] += 1
            remaining[head] += 1
        balance = [0] * self.digraph.vertex_count
        chosen: List[Arc] = []

        def feasible(tail: int, head: int) -> bool:
            return abs(balance[tail]) <= remaining[tail] and abs(balance[head]) <= remaining[head]

        def descend(i: int) -> Iterator[Tuple[Arc, ...]]:
            if i == len(arcs):
                yield tuple(chosen)
                return
            tail, head = arcs[i]
            remaining[tail] -= 1
            remaining[head] -= 1

            if feasible(tail, head):
                yield from descend(i + 1)

            balance[tail] += 1
            balance[head] -= 1
            chosen.append(arcs[i])
            if feasible(tail, head):
                yield from descend(i + 1)
            chosen.pop()
            balance[tail] -= 1
            balance[head] += 1

            remaining[tail] += 1
            remaining[head] += 1

        yield from descend(0)

    def census(self) -> Census:
        even = odd = 0
        for chosen in self._search():
            if len(chosen) % 2 == 0:
                even += 1
            else:
                odd += 1
        logger.debug(f"Enumerated {even + odd} circulations over {len(self.arcs)} arcs")
        return Census(even, odd)


def iter_circulations(D: Orientation) -> Iterator[Circulation]:
    return CirculationEnumerator(D).circulations()


@measure_performance
def census_enumerate(D: Orientation) -> Census:
    """
    Exact (even, odd) circulation counts by enumeration.

    Raises:
        ResourceLimitError: more arcs than Config.ENUMERATION_ARC_LIMIT
    """
    return CirculationEnumerator(D).census()
