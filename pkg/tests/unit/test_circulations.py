"""Unit tests for circulation enumeration, the frontier DP and graph polynomial coefficients"""

import sys
from itertools import product
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent.parent))

import pytest
import sympy

from src.circulations.coefficient import census_dp, graph_poly_coeffs
from src.circulations.enumerator import census_enumerate, iter_circulations
from src.circulations.models import Census
from src.circulations.witness import at_witness_check
from src.errors import PreconditionError, ResourceLimitError
from src.graphs.builder import build_family, cartesian_product, graph_power
from src.graphs.models import Graph
from src.orientations.constructions import orient_thm21, orient_thm24
from src.orientations.digraph import degree_profile, orient_by_order
from src.orientations.models import Orientation


def cyclic(n: int) -> Orientation:
    return Orientation.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def all_orientations(G: Graph):
    for flips in product((False, True), repeat=G.edge_count):
        yield Orientation.from_arcs(
            G.vertex_count, [(v, u) if flip else (u, v) for (u, v), flip in zip(G.edge_list, flips)]
        )


def sympy_coefficients(G: Graph, cap: int) -> dict:
    """Coefficients of the expanded graph polynomial with every exponent below cap"""
    xs = sympy.symbols(f"x0:{G.vertex_count}")
    poly = sympy.Poly(sympy.prod([xs[u] - xs[v] for u, v in G.edge_list]), *xs)
    return {monom: int(c) for monom, c in poly.terms() if max(monom) < cap}


class TestCensus:
    """Test cases for exact circulation counting"""

    def test_cycle_path_census(self):
        _, Dstar = orient_thm21(1, 2)
        census = census_enumerate(Dstar)
        assert (census.even_count, census.odd_count) == (5, 4)
        assert census.total == 9
        assert census.diff == 1

    def test_directed_triangle(self):
        assert census_enumerate(cyclic(3)) == Census(1, 1)

    def test_acyclic(self):
        D = orient_by_order(build_family("K", 5), range(5))
        assert census_enumerate(D) == Census(1, 0)

    def test_every_circulation_is_balanced(self):
        _, Dstar = orient_thm21(1, 3)
        for circulation in iter_circulations(Dstar):
            balance = [0] * Dstar.vertex_count
            for tail, head in circulation:
                balance[tail] += 1
                balance[head] -= 1
            assert not any(balance)

    def test_arc_limit(self, mocker):
        mocker.patch("src.circulations.enumerator.Config.ENUMERATION_ARC_LIMIT", 5)
        with pytest.raises(ResourceLimitError, match="census_dp"):
            census_enumerate(cyclic(6))

    def test_census_must_count_empty(self):
        with pytest.raises(PreconditionError):
            Census(0, 3)


class TestFrontierDP:
    """Test cases for census_dp against enumeration"""

    @pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (2, 2), (2, 3)])
    def test_matches_enumeration(self, k, n):
        _, Dstar = orient_thm21(k, n)
        assert abs(census_dp(Dstar)) == abs(census_enumerate(Dstar).diff)

    def test_complete_factor(self):
        D = orient_thm24(build_family("K", 4), build_family("P", 2), (0, 1))
        assert abs(census_dp(D)) == abs(census_enumerate(D).diff)

    def test_acyclic_magnitude_one(self):
        D = orient_by_order(build_family("C", 6), range(6))
        assert abs(census_dp(D)) == 1

    def test_cyclic_c4(self):
        assert abs(census_dp(cyclic(4))) == 2

    def test_state_budget(self, mocker):
        mocker.patch("src.circulations.coefficient.Config.DP_MAX_STATES", 1)
        _, Dstar = orient_thm21(2, 3)
        with pytest.raises(ResourceLimitError, match="DP_MAX_STATES"):
            census_dp(Dstar)

    def test_witness_check(self):
        _, Dstar = orient_thm21(1, 2)
        assert at_witness_check(Dstar)
        assert not at_witness_check(cyclic(3))
        assert at_witness_check(orient_by_order(build_family("K", 4), range(4)))

    def test_witness_check_falls_back_to_enumeration(self, mocker):
        mocker.patch("src.circulations.coefficient.Config.DP_MAX_STATES", 1)
        _, Dstar = orient_thm21(1, 2)
        assert at_witness_check(Dstar)


class TestGraphPolynomial:
    """Test cases for graph_poly_coeffs"""

    def test_single_edge(self):
        coeffs = graph_poly_coeffs(build_family("P", 2), 2)
        assert dict(coeffs.items()) == {(0, 1): -1, (1, 0): 1}

    def test_c4_single_key(self):
        coeffs = graph_poly_coeffs(build_family("C", 4), 2)
        assert list(coeffs) == [(1, 1, 1, 1)]
        assert abs(coeffs.get((1, 1, 1, 1))) == 2

    def test_triangle_cap_two_is_empty(self):
        assert not graph_poly_coeffs(build_family("C", 3), 2)

    @pytest.mark.parametrize("graph,cap", [
        (build_family("C", 4), 2),
        (build_family("C", 5), 3),
        (build_family("K", 4), 4),
        (cartesian_product(build_family("C", 3), build_family("P", 2)), 3),
        (graph_power(build_family("P", 5), 2), 3),
        (build_family("Theta", 2, 2, 2), 2),
    ])
    def test_matches_sympy(self, graph, cap):
        assert dict(graph_poly_coeffs(graph, cap).items()) == sympy_coefficients(graph, cap)

    @pytest.mark.parametrize("graph", [
        build_family("C", 4),
        build_family("K", 4),
        build_family("Theta", 2, 2, 2),
        graph_power(build_family("P", 5), 2),
    ])
    def test_outdegree_coefficient_is_census_difference(self, graph):
        maps = {}
        for D in all_orientations(graph):
            outdegrees = degree_profile(D).outdegrees
            cap = max(outdegrees) + 1
            if cap not in maps:
                maps[cap] = graph_poly_coeffs(graph, cap)
            coefficient = maps[cap].get(outdegrees)
            assert coefficient == census_dp(D)
            assert abs(coefficient) == abs(census_enumerate(D).diff)

    def test_first_key(self):
        coeffs = graph_poly_coeffs(build_family("K", 3), 3)
        assert coeffs.first_key() == min(coeffs)
        assert sum(coeffs.first_key()) == 3

    def test_state_budget(self, mocker):
        mocker.patch("src.circulations.coefficient.Config.COEFF_MAX_STATES", 2)
        with pytest.raises(ResourceLimitError, match="COEFF_MAX_STATES"):
            graph_poly_coeffs(build_family("K", 4), 4)

    def test_cap_must_be_positive(self):
        with pytest.raises(PreconditionError):
            graph_poly_coeffs(build_family("P", 2), 0)
