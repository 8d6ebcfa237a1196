"""Unit tests for graph construction and structure"""

import sys
from itertools import permutations
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent.parent))

import networkx as nx
import pytest

from src.errors import PreconditionError
from src.graphs.builder import (
    GraphEditError,
    InvalidFamilyError,
    build_family,
    cartesian_product,
    edit_edges,
    graph_power,
    join,
    partial_join_with_universal,
)
from src.graphs.enums import GraphFamily
from src.graphs.models import Atom, Graph, Pair
from src.graphs.structure import (
    back_degree,
    bridges,
    degeneracy_order,
    find_hamilton_path,
    is_hamilton_path,
)


class TestBuildFamily:
    """Test cases for the parameterised families"""

    def test_path(self):
        P3 = build_family("P", 3)
        assert P3.vertex_count == 3
        assert P3.edge_list == ((0, 1), (1, 2))
        assert P3.labels[0] == Atom(GraphFamily.PATH, 1)

    def test_cycle_closes(self):
        C5 = build_family(GraphFamily.CYCLE, 5)
        assert C5.edge_count == 5
        assert C5.has_edge(0, 4)
        assert all(C5.degree(v) == 2 for v in range(5))

    def test_theta_222_is_k23(self):
        theta = build_family("Theta", 2, 2, 2)
        assert theta.vertex_count == 5
        assert theta.edge_count == 6
        assert sorted(theta.degree(v) for v in range(5)) == [2, 2, 2, 3, 3]
        assert nx.is_isomorphic(theta.to_networkx(), nx.complete_bipartite_graph(2, 3))

    @pytest.mark.parametrize("family,params,constraint", [
        ("C", (2,), "n >= 3"),
        ("P", (0,), "n >= 1"),
        ("K", (0,), "n >= 1"),
        ("Theta", (3,), "at least 2 paths"),
        ("Theta", (1, 1, 2), "at most one path of length 1"),
    ])
    def test_invalid_parameters_name_the_constraint(self, family, params, constraint):
        with pytest.raises(InvalidFamilyError, match=constraint):
            build_family(family, *params)


class TestCartesianProduct:
    """Test cases for G □ H"""

    def test_edge_count_identity(self):
        assert cartesian_product(build_family("C", 3), build_family("P", 2)).edge_count == 9
        assert cartesian_product(build_family("C", 5), build_family("P", 3)).edge_count == 25

    def test_unit_factor(self):
        G = build_family("K", 4)
        product = cartesian_product(G, build_family("P", 1))
        assert product.edges == G.edges
        assert product.labels[2] == Pair(G.labels[2], Atom(GraphFamily.PATH, 1))

    def test_index_layout(self):
        product = cartesian_product(build_family("C", 3), build_family("P", 2))
        # (g, h) -> g * |V(H)| + h
        assert product.has_edge(0, 1)
        assert product.has_edge(0, 2)
        assert product.has_edge(1, 5)
        assert not product.has_edge(0, 3)

    def test_empty_factor_rejected(self):
        with pytest.raises(PreconditionError):
            cartesian_product(Graph(0, ()), build_family("P", 2))

    @pytest.mark.parametrize("G,H", [
        (build_family("C", 3), build_family("P", 3)),
        (build_family("K", 4), build_family("C", 5)),
        (build_family("Theta", 2, 2, 2), build_family("P", 2)),
    ])
    def test_commutes_under_coordinate_swap(self, G, H):
        left, right = cartesian_product(G, H), cartesian_product(H, G)
        swap = [right.index_of(Pair(label.right, label.left)) for label in left.labels]
        assert sorted(swap) == list(range(right.vertex_count))
        assert {tuple(sorted((swap[u], swap[v]))) for u, v in left.edges} == right.edges


class TestJoinPowerEdit:
    """Test cases for join, power and edge edits"""

    def test_join_with_single_vertex_gives_k4(self):
        wheel = join(build_family("K", 1), build_family("C", 3))
        assert nx.is_isomorphic(wheel.to_networkx(), nx.complete_graph(4))

    def test_join_labels_stay_distinct(self):
        G = join(build_family("C", 3), build_family("C", 3))
        assert len(set(G.labels)) == 6

    def test_partial_join(self):
        G = partial_join_with_universal(build_family("C", 3), build_family("C", 5), [0])
        assert G.edge_count == 3 + 5 + 5

    def test_duplicate_cross_edge_rejected(self):
        with pytest.raises(GraphEditError, match="duplicate"):
            join(build_family("K", 2), build_family("K", 2), [(0, 0), (0, 0)])

    def test_power_of_c6(self):
        square = graph_power(build_family("C", 6), 2)
        assert square.edge_count == 12
        assert all(square.degree(v) == 4 for v in range(6))

    @pytest.mark.parametrize("G", [
        build_family("P", 6),
        build_family("C", 7),
        build_family("Theta", 1, 2, 3),
    ])
    def test_power_is_monotone_in_r(self, G):
        n = G.vertex_count
        powers = [graph_power(G, r) for r in range(1, n)]
        assert powers[0].edges == G.edges
        for smaller, larger in zip(powers, powers[1:]):
            assert smaller.edges <= larger.edges
        assert powers[-1].edge_count == n * (n - 1) // 2

    def test_h5(self):
        H5 = edit_edges(build_family("K", 5), delete=[(0, 1), (1, 2), (2, 3)])
        assert H5.edge_count == 7

    def test_edit_lists_offending_edges(self):
        with pytest.raises(GraphEditError) as exc_info:
            edit_edges(build_family("P", 3), add=[(0, 1)], delete=[(0, 2)])
        assert exc_info.value.offending == ((0, 1), (0, 2))

    def test_delete_then_add_restores(self):
        K4 = build_family("K", 4)
        assert edit_edges(edit_edges(K4, delete=[(1, 3)]), add=[(1, 3)]) == K4

    def test_gstar_edges(self):
        # (v1,w1)-(v2,wn) is flat index (0,3) in C3 x P2
        G = cartesian_product(build_family("C", 3), build_family("P", 2))
        assert edit_edges(G, add=[(0, 3)]).edge_count == 10


class TestStructure:
    """Test cases for degeneracy and Hamilton paths"""

    @pytest.mark.parametrize("graph,expected", [
        (build_family("P", 5), 2),
        (build_family("C", 7), 3),
        (build_family("K", 6), 6),
        (graph_power(build_family("P", 6), 2), 3),
    ])
    def test_coloring_number(self, graph, expected):
        order, d = degeneracy_order(graph)
        assert d == expected
        assert back_degree(graph, order) == d - 1

    def test_smallest_last_is_optimal(self):
        # Exhaustive over every ordering of every atlas graph on 1..5 vertices
        for nx_graph in nx.graph_atlas_g():
            if not 1 <= nx_graph.number_of_nodes() <= 5:
                continue
            G = Graph.from_networkx(nx_graph)
            order, d = degeneracy_order(G)
            assert back_degree(G, order) == d - 1, repr(G)
            best = min(back_degree(G, p) for p in permutations(range(G.vertex_count)))
            assert d == best + 1, repr(G)

    def test_hamilton_path_of_h5(self):
        H5 = edit_edges(build_family("K", 5), delete=[(0, 1), (1, 2), (2, 3)])
        path = find_hamilton_path(H5, max_back_degree=2)
        assert path is not None
        assert is_hamilton_path(H5, path)
        assert back_degree(H5, path) <= 2

    def test_no_hamilton_path_in_star(self):
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert find_hamilton_path(star) is None

    def test_bridges(self):
        G = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        assert sorted(bridges(G)) == [(2, 3), (3, 4)]


class TestGraphModel:
    def test_loops_rejected(self):
        with pytest.raises(PreconditionError, match="loop"):
            Graph.from_edges(2, [(1, 1)])

    def test_duplicate_labels_rejected(self):
        label = Atom(GraphFamily.NAMED, 1)
        with pytest.raises(PreconditionError, match="distinct"):
            Graph(2, (label, label))

    def test_networkx_round_trip(self):
        G = build_family("C", 5)
        assert Graph.from_networkx(G.to_networkx()).edges == G.edges
