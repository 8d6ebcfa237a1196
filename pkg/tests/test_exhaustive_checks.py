"""Exhaustive cross-checks over all small graphs and random digraphs"""

import random
import sys
from itertools import combinations, product
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

import networkx as nx
import pytest

from src.circulations.coefficient import census_dp
from src.circulations.enumerator import census_enumerate
from src.graphs.builder import build_family, cartesian_product, edit_edges
from src.graphs.models import Graph
from src.invariants.alon_tarsi import alon_tarsi_number
from src.invariants.chain import chain_check
from src.orientations.digraph import reverse
from src.orientations.models import Orientation

pytestmark = pytest.mark.slow


def connected_atlas(n_max: int):
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= n_max and nx.is_connected(g):
            yield Graph.from_networkx(g)


def all_orientations(G: Graph):
    for flips in product((False, True), repeat=G.edge_count):
        yield Orientation.from_arcs(
            G.vertex_count, [(v, u) if flip else (u, v) for (u, v), flip in zip(G.edge_list, flips)]
        )


def random_digraph(rng: random.Random, max_arcs: int) -> Orientation:
    n = rng.randint(3, 8)
    pairs = list(combinations(range(n), 2))
    chosen = rng.sample(pairs, rng.randint(1, min(max_arcs, len(pairs))))
    return Orientation.from_arcs(n, [(u, v) if rng.random() < 0.5 else (v, u) for u, v in chosen])


class TestCensusEngines:
    """Enumeration and the frontier DP agree"""

    def test_every_orientation_of_small_connected_graphs(self):
        graphs = list(connected_atlas(5))
        assert len(graphs) == 31
        for G in graphs:
            for D in all_orientations(G):
                assert abs(census_dp(D)) == abs(census_enumerate(D).diff), D.arc_list

    def test_random_digraphs(self):
        rng = random.Random(2024)
        for _ in range(200):
            D = random_digraph(rng, 16)
            assert abs(census_dp(D)) == abs(census_enumerate(D).diff), D.arc_list

    def test_reversal_keeps_census(self):
        for G in connected_atlas(5):
            for D in all_orientations(G):
                assert census_enumerate(reverse(D)) == census_enumerate(D), D.arc_list


class TestInvariantChain:
    """chi <= chi_l <= chi_p <= AT on small connected graphs"""

    def test_chain_holds(self):
        for G in connected_atlas(5):
            assert chain_check(G).chain_holds, repr(G)

    @pytest.mark.parametrize("graph,value", [
        (build_family("C", 5), 3),
        (build_family("K", 4), 4),
        (cartesian_product(build_family("C", 3), build_family("P", 2)), 3),
    ])
    def test_chain_is_tight(self, graph, value):
        report = chain_check(graph)
        assert report.chain_holds
        assert [report.value_of(name) for name in ("chi", "chi_list", "chi_paint", "at")] == [value] * 4
        assert report.chromatic_choosable
        assert report.chromatic_at


class TestAlonTarsiMonotone:
    def test_edge_deletion_never_increases(self):
        for G in connected_atlas(5):
            at = alon_tarsi_number(G).value
            for edge in G.edge_list:
                assert alon_tarsi_number(edit_edges(G, delete=[edge])).value <= at, (repr(G), edge)
