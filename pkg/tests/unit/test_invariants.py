"""Unit tests for the coloring invariants"""

import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent.parent))

import networkx as nx
import pytest

from src.errors import PreconditionError, ResourceLimitError
from src.graphs.builder import build_family, cartesian_product, edit_edges, graph_power, join
from src.graphs.models import Graph
from src.invariants.alon_tarsi import (
    alon_tarsi_number,
    orientation_from_outdegrees,
    orientation_with_bounded_indegree,
)
from src.invariants.bounds import bound_borowiecki, bound_delta_sum, bound_list_brooks
from src.invariants.chain import chain_check, compute_invariants
from src.invariants.choosability import (
    canonical_assignments,
    is_k_choosable,
    list_chromatic_number,
    two_choosable_by_characterization,
)
from src.invariants.coloring import (
    check_list_colorable,
    chromatic_number,
    coloring_number,
    count_list_colorings,
    is_proper_list_coloring,
)
from src.invariants.enums import InvariantStatus
from src.invariants.models import ListAssignment
from src.invariants.paintability import is_k_paintable, paint_number
from src.invariants.search import find_bad_assignment
from src.orientations.digraph import degree_profile, orients


class TestColoring:
    """Test cases for chi, col and list colorability"""

    @pytest.mark.parametrize("graph,expected", [
        (build_family("C", 5), 3),
        (cartesian_product(build_family("C", 5), build_family("P", 3)), 3),
        (join(build_family("K", 1), build_family("C", 7)), 4),
        (build_family("K", 5), 5),
        (Graph(0, ()), 0),
    ])
    def test_chromatic_number(self, graph, expected):
        assert chromatic_number(graph) == expected

    @pytest.mark.parametrize("graph,expected", [
        (build_family("P", 7), 2),
        (graph_power(build_family("P", 6), 2), 3),
        (build_family("K", 4), 4),
    ])
    def test_coloring_number(self, graph, expected):
        assert coloring_number(graph) == expected

    def test_identical_lists_of_size_chi(self):
        G = build_family("C", 5)
        L = ListAssignment.uniform(5, {1, 2, 3})
        coloring = check_list_colorable(G, L)
        assert coloring is not None
        assert is_proper_list_coloring(G, L, coloring)

    def test_degree_plus_one_lists(self):
        G = build_family("K", 4)
        L = ListAssignment.from_lists([[1, 2, 3, 4], [2, 3, 4, 5], [3, 4, 5, 6], [4, 5, 6, 7]])
        assert check_list_colorable(G, L) is not None

    def test_uncolorable(self):
        G = build_family("C", 3)
        assert check_list_colorable(G, ListAssignment.uniform(3, {1, 2})) is None

    def test_count_list_colorings(self):
        # proper 3-colorings of a triangle
        assert count_list_colorings(build_family("K", 3), ListAssignment.uniform(3, {1, 2, 3})) == 6

    def test_empty_list_rejected(self):
        with pytest.raises(PreconditionError, match="empty list"):
            ListAssignment.from_lists([[1], []])


class TestChoosability:
    """Test cases for exhaustive and structural choosability"""

    def test_even_cycle_is_two_choosable(self):
        assert is_k_choosable(build_family("C", 4), 2)

    def test_odd_cycle_witness(self):
        result = is_k_choosable(build_family("C", 5), 2)
        assert not result.choosable
        assert result.witness is not None
        assert check_list_colorable(build_family("C", 5), result.witness) is None

    def test_theta_224(self, mocker):
        mocker.patch("src.invariants.choosability.Config.CHOOSABLE_MAX_VERTICES_K2", 7)
        assert is_k_choosable(build_family("Theta", 2, 2, 4), 2)

    def test_k33_minus_nothing_is_not_two_choosable(self):
        K33 = join(Graph.from_edges(3, []), Graph.from_edges(3, []))
        result = is_k_choosable(K33, 2)
        assert not result
        assert check_list_colorable(K33, result.witness) is None

    def test_size_limit(self):
        with pytest.raises(ResourceLimitError) as exc_info:
            is_k_choosable(build_family("C", 9), 2)
        assert exc_info.value.limit_name == "CHOOSABLE_MAX_VERTICES_K2"

    def test_canonical_assignments_quotient_renaming(self):
        # second vertex: {1,2}, {1,3}, {2,3} or {3,4}
        assert list(canonical_assignments(1, 2)) == [(0b11,)]
        assert len(list(canonical_assignments(2, 2))) == 4

    @pytest.mark.parametrize("graph,expected", [
        (build_family("C", 6), True),
        (cartesian_product(build_family("C", 4), build_family("P", 2)), False),
        (build_family("Theta", 2, 2, 6), True),
        (build_family("Theta", 2, 4, 4), False),
        (Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 4)]), False),
    ])
    def test_characterization(self, graph, expected):
        assert two_choosable_by_characterization(graph) is expected

    def test_characterization_requires_bipartite(self):
        with pytest.raises(PreconditionError, match="bipartite"):
            two_choosable_by_characterization(build_family("Theta", 2, 2, 3))

    def test_characterization_with_pendant_trees(self):
        theta = build_family("Theta", 2, 2, 2)
        G = Graph.from_edges(7, list(theta.edges) + [(0, 5), (5, 6)])
        assert two_choosable_by_characterization(G)

    def test_characterization_requires_connected(self):
        with pytest.raises(PreconditionError, match="connected"):
            two_choosable_by_characterization(Graph.from_edges(4, [(0, 1), (2, 3)]))

    @pytest.mark.parametrize("graph,expected", [
        (build_family("C", 4), 2),
        (build_family("C", 5), 3),
        (build_family("K", 4), 4),
        (build_family("P", 4), 2),
    ])
    def test_list_chromatic_number(self, graph, expected):
        assert list_chromatic_number(graph)[0] == expected


class TestPaintability:
    """Test cases for the paint game solver"""

    @pytest.mark.parametrize("graph,expected", [
        (build_family("P", 4), 2),
        (build_family("C", 5), 3),
        (build_family("K", 4), 4),
        (build_family("C", 4), 2),
    ])
    def test_paint_number(self, graph, expected):
        assert paint_number(graph) == expected

    @pytest.mark.parametrize("graph", [build_family("P", 3), build_family("C", 4), build_family("K", 3)])
    def test_restricted_solver_agrees(self, graph):
        for k in (1, 2, 3):
            assert is_k_paintable(graph, k) == is_k_paintable(graph, k, restricted=False)

    def test_dominance_on_small_graphs(self):
        for nx_graph in nx.graph_atlas_g():
            if not 1 <= nx_graph.number_of_nodes() <= 4:
                continue
            G = Graph.from_networkx(nx_graph)
            chi_list, _ = list_chromatic_number(G)
            paint = paint_number(G)
            assert chi_list <= paint <= min(coloring_number(G), alon_tarsi_number(G).value), repr(G)
            for k in range(1, coloring_number(G) + 1):
                assert is_k_paintable(G, k) == is_k_paintable(G, k, restricted=False), repr(G)

    def test_size_limit(self, mocker):
        mocker.patch("src.invariants.paintability.Config.PAINT_MAX_VERTICES", 3)
        with pytest.raises(ResourceLimitError):
            paint_number(build_family("C", 5))


class TestAlonTarsi:
    """Test cases for AT(G) and its witnesses"""

    @pytest.mark.parametrize("graph,expected", [
        (build_family("P", 5), 2),
        (build_family("C", 4), 2),
        (build_family("C", 5), 3),
        (cartesian_product(build_family("C", 3), build_family("P", 2)), 3),
        (cartesian_product(build_family("K", 3), build_family("P", 2)), 3),
        (build_family("K", 4), 4),
    ])
    def test_value_and_witness(self, graph, expected):
        result = alon_tarsi_number(graph)
        assert result.value == expected
        assert orients(result.witness, graph)
        assert degree_profile(result.witness).max_indegree == expected - 1

    def test_outdegree_realisation(self):
        C4 = build_family("C", 4)
        D = orientation_from_outdegrees(C4, (1, 1, 1, 1))
        assert degree_profile(D).outdegrees == (1, 1, 1, 1)

    def test_unrealisable_outdegrees(self):
        with pytest.raises(PreconditionError, match="not realisable"):
            orientation_from_outdegrees(build_family("K", 3), (3, 0, 0))

    def test_bounded_indegree_on_bipartite(self):
        G = cartesian_product(build_family("C", 4), build_family("P", 3))
        D = orientation_with_bounded_indegree(G, 2)
        assert D is not None
        assert degree_profile(D).max_indegree <= 2
        assert orientation_with_bounded_indegree(build_family("K", 4), 1) is None


class TestBounds:
    def test_delta_sum(self):
        assert bound_delta_sum(build_family("C", 5), build_family("P", 3)) == 4

    @pytest.mark.parametrize("G,H,expected", [
        (build_family("C", 5), build_family("P", 3), 4),
        (build_family("K", 4), build_family("K", 3), 6),
        (build_family("C", 5), graph_power(build_family("P", 6), 2), 5),
    ])
    def test_borowiecki(self, G, H, expected):
        assert bound_borowiecki(G, H) == expected

    def test_list_brooks(self):
        assert bound_list_brooks(build_family("K", 4)) == 4
        assert bound_list_brooks(build_family("C", 5)) == 3
        assert bound_list_brooks(cartesian_product(build_family("C", 5), build_family("P", 3))) == 4


class TestChain:
    """Test cases for chain_check and compute_invariants"""

    @pytest.mark.parametrize("graph,expected", [
        (build_family("K", 3), (3, 3, 3, 3)),
        (build_family("C", 4), (2, 2, 2, 2)),
        (build_family("C", 5), (3, 3, 3, 3)),
    ])
    def test_chain(self, graph, expected):
        report = chain_check(graph)
        values = tuple(report.value_of(name) for name in ("chi", "chi_list", "chi_paint", "at"))
        assert values == expected
        assert report.chain_holds
        assert report.chromatic_choosable
        assert report.chromatic_at

    def test_summary(self):
        report = compute_invariants(build_family("C", 5), ["chi", "at"])
        assert report.summary() == {"at": 3, "chi": 3}

    def test_resource_limit_marks_skipped(self, mocker):
        mocker.patch("src.invariants.paintability.Config.PAINT_MAX_VERTICES", 2)
        report = compute_invariants(build_family("C", 5), ["chi_paint"])
        assert report.values["chi_paint"].status == InvariantStatus.SKIPPED
        assert report.value_of("chi_paint") is None

    def test_choosable_entry(self):
        report = compute_invariants(build_family("C", 4), [], choosable_k=2)
        assert report.value_of("choosable_2") == 1


class TestBadAssignmentSearch:
    """Test cases for the randomized bad-assignment search"""

    def test_odd_cycle_two_lists(self):
        witness = find_bad_assignment(build_family("C", 5), 2, budget=200, seed=7)
        assert witness is not None
        assert check_list_colorable(build_family("C", 5), witness) is None

    def test_even_cycle_inconclusive(self):
        assert find_bad_assignment(build_family("C", 4), 2, budget=400, seed=7) is None

    def test_reproducible(self):
        G = edit_edges(build_family("K", 5), delete=[(0, 1), (1, 2), (2, 3)])
        first = find_bad_assignment(G, 3, budget=400, seed=3)
        second = find_bad_assignment(G, 3, budget=400, seed=3)
        assert first == second

    def test_thread_count_does_not_change_result(self):
        G = build_family("C", 7)
        assert find_bad_assignment(G, 2, 600, seed=11, threads=1) == find_bad_assignment(G, 2, 600, seed=11, threads=3)

    def test_budget_must_be_positive(self):
        with pytest.raises(PreconditionError):
            find_bad_assignment(build_family("C", 5), 2, budget=0)
