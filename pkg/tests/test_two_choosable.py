"""Cross-check the structural 2-choosability test against exhaustive enumeration"""

import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

import networkx as nx
import pytest

from src.graphs.models import Graph
from src.invariants.choosability import is_k_choosable, two_choosable_by_characterization


def connected_bipartite_atlas(n_min: int, n_max: int):
    for g in nx.graph_atlas_g():
        if n_min <= g.number_of_nodes() <= n_max and nx.is_connected(g) and nx.is_bipartite(g):
            yield Graph.from_networkx(g)


class TestTwoChoosableCharacterization:
    """The characterization agrees with exhaustive checks on small graphs"""

    def test_up_to_six_vertices(self):
        graphs = list(connected_bipartite_atlas(1, 6))
        assert len(graphs) == 28
        for G in graphs:
            assert two_choosable_by_characterization(G) == bool(is_k_choosable(G, 2)), repr(G)

    @pytest.mark.slow
    def test_seven_vertices(self, mocker):
        mocker.patch("src.invariants.choosability.Config.CHOOSABLE_MAX_VERTICES_K2", 7)
        for G in connected_bipartite_atlas(7, 7):
            assert two_choosable_by_characterization(G) == bool(is_k_choosable(G, 2)), repr(G)
