"""Unit tests for level subsequences, the d-table and the circulation partition"""

import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent.parent))

import pytest

from src.errors import PreconditionError
from src.graphs.builder import build_family, product_index
from src.orientations.constructions import orient_thm21
from src.orientations.digraph import orient_by_order
from src.verification.level_sequences import d_table, enumerate_level_subsequences
from src.verification.models import CaseStatus
from src.verification.proof_artifacts import bijection_check, cycle_of_sequence, partition_circulations


class TestLevelSubsequences:
    """Test cases for Q and R"""

    def test_k1_n2(self):
        sequences = enumerate_level_subsequences(1, 2)
        assert sequences.q == ((1,), (2,))
        assert sequences.r == ((2,),)

    def test_k1_n3(self):
        sequences = enumerate_level_subsequences(1, 3)
        assert set(sequences.q) == {(1, 3), (1, 5), (2, 3), (2, 4)}
        assert (2, 4) not in sequences.r
        assert sequences.r_count == 3

    @pytest.mark.parametrize("k,n", [(1, 4), (2, 3), (3, 3), (2, 5)])
    def test_q_count(self, k, n):
        assert enumerate_level_subsequences(k, n).q_count == (2 * k) ** (n - 1)

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            enumerate_level_subsequences(1, 1)
        with pytest.raises(PreconditionError):
            enumerate_level_subsequences(0, 3)


class TestDTable:
    """Test cases for the residue-count recursion"""

    def test_first_columns(self):
        table = d_table(1, 3)
        assert table.column(2) == (0, 1, 1)
        assert table.column(3) == (2, 1, 1)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_parity(self, k):
        table = d_table(k, 12)
        for n in range(2, 13):
            assert table.d(0, n) % 2 == 0
            assert all(table.d(r, n) % 2 == 1 for r in range(1, 2 * k + 1))
            assert table.r_count(n) % 2 == 1

    @pytest.mark.parametrize("k,n", [(1, 5), (2, 4), (3, 3)])
    def test_r_count_matches_enumeration(self, k, n):
        assert d_table(k, n).r_count(n) == enumerate_level_subsequences(k, n).r_count

    def test_to_dict(self):
        assert d_table(1, 3).to_dict() == {"k": 1, "n_max": 3, "d": {"2": [0, 1, 1], "3": [2, 1, 1]}}


class TestCirculationPartition:
    """Test cases for the A/B split and the swap involution"""

    def test_k1_n2(self):
        _, Dstar = orient_thm21(1, 2)
        partition = partition_circulations(Dstar)
        assert (len(partition.a), len(partition.b), partition.total) == (8, 1, 9)
        assert partition.involution_ok
        assert partition.b_single_cycles_ok
        assert partition.b_meets_every_base_cycle

    def test_k1_n3_matches_r(self):
        _, Dstar = orient_thm21(1, 3)
        assert len(partition_circulations(Dstar).b) == 3

    def test_requires_annotations(self):
        D = orient_by_order(build_family("C", 3), range(3))
        with pytest.raises(PreconditionError, match="base cycles"):
            partition_circulations(D)


class TestBijection:
    """Test cases for the map from R onto B"""

    def test_single_sequence_k1_n2(self):
        cycle = cycle_of_sequence((2,), 1, 2)
        assert len(cycle) == 6
        assert (product_index(1, 1, 2), product_index(0, 0, 2)) in cycle
        _, Dstar = orient_thm21(1, 2)
        assert cycle == partition_circulations(Dstar).b[0]

    @pytest.mark.parametrize("k,n,expected_b", [(1, 2, 1), (1, 3, 3), (2, 2, 3), (2, 3, 13)])
    def test_bijection(self, k, n, expected_b):
        result = bijection_check(k, n)
        case = result.cases[0]
        assert case.status == CaseStatus.PASS
        assert case.values["b_count"] == case.values["r_count"] == expected_b
        assert case.values["a_even"]
