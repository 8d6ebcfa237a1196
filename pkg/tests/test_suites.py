"""Integration tests for the named verification suites"""

import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

import pytest

from src.errors import PreconditionError
from src.graphs.builder import cartesian_product
from src.orientations.digraph import orient_by_order
from src.verification.models import CaseStatus
from src.verification.suites import SUITES, run_suite


def values_by(result, key):
    return {case.params[key]: case.values for case in result.cases}


class TestCyclePathSuites:
    """Odd and even cycles times paths"""

    def test_thm21_grid(self):
        result = run_suite("thm21", {"k_max": 2, "n_max": 3})
        assert len(result.cases) == 6
        assert result.passed
        assert all(case.status == CaseStatus.PASS for case in result.cases)
        assert all(case.values["parity"] == "odd" for case in result.cases)
        assert all(case.values["at"] == 3 for case in result.cases)

    def test_thm21_small_census(self):
        result = run_suite("thm21", {"k_max": 1, "n_max": 2})
        census = result.cases[1].values
        assert (census["even"], census["odd"]) == (5, 4)

    def test_cor22(self):
        result = run_suite("cor22", {"k_max": 1, "n_max": 3})
        assert result.passed
        assert [case.values["chi_list"] for case in result.cases] == [2, 3, 3]

    def test_bijection(self):
        result = run_suite("bijection", {"k_max": 1, "n_max": 3})
        assert result.passed
        assert [case.values["b_count"] for case in result.cases] == [1, 3]

    def test_d_table(self):
        result = run_suite("d_table", {"k_max": 2, "n_max": 6})
        assert result.passed
        assert result.cases[0].values["r_counts"][:2] == [1, 3]

    @pytest.mark.slow
    def test_thm21_full_grid(self):
        result = run_suite("thm21", {"k_max": 3, "n_max": 4})
        assert len(result.cases) == 12
        assert result.passed
        assert all(case.status == CaseStatus.PASS for case in result.cases)

    @pytest.mark.slow
    def test_cor22_full_grid(self):
        result = run_suite("cor22", {"k_max": 2, "n_max": 3})
        assert result.passed
        assert [case.values["chi_list"] for case in result.cases] == [2, 3, 3, 2, 3, 3]

    @pytest.mark.slow
    def test_remark_many_trials(self):
        result = run_suite("remark", {"k_max": 2, "n_max": 3, "trials": 500})
        assert result.passed
        assert all(case.values["failures"] == 0 for case in result.cases)
        c5_p3 = next(case for case in result.cases if (case.params["k"], case.params["n"]) == (2, 3))
        assert c5_p3.values["trials"] == 500

    def test_remark_is_reproducible(self):
        first = run_suite("remark", {"k_max": 1, "n_max": 2, "trials": 20, "seed": 5})
        second = run_suite("remark", {"k_max": 1, "n_max": 2, "trials": 20, "seed": 5})
        assert first.passed
        assert first.to_dict()["cases"] == second.to_dict()["cases"]
        assert first.cases[0].values["degrees_fit"]


class TestPartitionSuites:
    """Complete, odd-cycle and mixed partitions"""

    def test_thm24(self):
        result = run_suite("thm24", {"cases": ["K3xP2", "C5xP2", "C5+pendant xP2"]})
        assert result.passed
        assert values_by(result, "case")["K3xP2"]["indegree_bound"] == 2

    def test_thm25_k1_census(self):
        result = run_suite("thm25", {"cases": ["C5 k=1", "2C3 k=1", "C3+C5 k=1"]})
        assert result.passed
        for case in result.cases:
            assert (case.values["even"], case.values["odd"]) == (1, 0)

    def test_thm25_blocks(self):
        result = run_suite("thm25", {"cases": ["C5 k=2", "2C3 k=2"]})
        assert result.passed
        assert all(case.values["parity"] == "odd" for case in result.cases)

    def test_thm26(self):
        result = run_suite("thm26", {"cases": ["C5xP3", "K4+C3xP2"]})
        assert result.passed
        assert values_by(result, "case")["K4+C3xP2"]["indegree_bound"] == 6

    def test_unknown_case(self):
        with pytest.raises(PreconditionError, match="unknown cases"):
            run_suite("thm24", {"cases": ["K9xP9"]})


class TestSectionThreeSuites:
    """Powers of paths, joins and the small facts"""

    def test_cor31(self):
        result = run_suite("cor31", {"r_max": 2, "n_max": 4})
        assert result.passed
        assert all(case.values["lower"] == 3 for case in result.cases)

    def test_cor32(self):
        result = run_suite("cor32", {"m_max": 2, "n_max": 2})
        assert result.passed
        assert [case.values["at"] for case in result.cases] == [4, 4, 5, 5]

    def test_sec3_facts(self):
        result = run_suite("sec3_facts")
        assert result.passed
        k3 = next(case for case in result.cases if case.params.get("n") == 3 and case.params.get("m") == 2)
        assert k3.values["at"] == 3
        bracket = next(case for case in result.cases if case.params["case"] == "C3xH5")
        assert bracket.values["upper"] == 4
        assert bracket.values["max_indegree"] <= 3

    def test_sec3_bracket_checks_construction(self, mocker):
        # An acyclic orientation by vertex index passes the witness check but not the degree bound
        mocker.patch(
            "src.verification.suites.orient_thm24",
            side_effect=lambda G, H, path: orient_by_order(cartesian_product(G, H), range(G.vertex_count * H.vertex_count)),
        )
        result = run_suite("sec3_facts")
        bracket = next(case for case in result.cases if case.params["case"] == "C3xH5")
        assert bracket.status == CaseStatus.FAIL
        assert bracket.values["max_indegree"] > 3


class TestRunSuite:
    def test_registry(self):
        assert set(SUITES) == {
            "thm21", "cor22", "thm24", "thm25", "thm26", "cor31", "cor32",
            "sec3_facts", "remark", "bijection", "d_table",
        }

    def test_unknown_suite(self):
        with pytest.raises(PreconditionError, match="unknown suite"):
            run_suite("thm99")

    def test_unknown_parameter(self):
        with pytest.raises(PreconditionError, match="does not take trials"):
            run_suite("thm21", {"trials": 3})

    def test_resource_limit_skips(self, mocker):
        mocker.patch("src.circulations.enumerator.Config.ENUMERATION_ARC_LIMIT", 5)
        result = run_suite("bijection", {"k_max": 1, "n_max": 2})
        assert result.cases[0].status == CaseStatus.SKIP
        assert result.passed

    def test_parallel_cases_keep_order(self, mocker):
        mocker.patch("src.verification.suites.Config.THREADS", 3)
        result = run_suite("thm21", {"k_max": 1, "n_max": 3})
        assert [case.params["n"] for case in result.cases] == [1, 2, 3]
        assert result.passed
