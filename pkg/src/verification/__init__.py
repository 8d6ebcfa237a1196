# Verification suites package
from src.verification.models import CaseResult, CaseStatus, CirculationPartition, DTable, LevelSequences, SuiteResult
from src.verification.level_sequences import d_table, enumerate_level_subsequences
from src.verification.proof_artifacts import bijection_check, cycle_of_sequence, partition_circulations
from src.verification.suites import SUITES, run_suite

__all__ = [
    'CaseResult', 'CaseStatus', 'CirculationPartition', 'DTable', 'LevelSequences', 'SuiteResult',
    'd_table', 'enumerate_level_subsequences',
    'bijection_check', 'cycle_of_sequence', 'partition_circulations',
    'SUITES', 'run_suite',
]
