"""Result types for verification suites and counting artifacts"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple

LevelSubsequence = Tuple[int, ...]


class CaseStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass
class CaseResult:
    """One parameter combination of a suite with the values it computed"""
    params: Dict[str, Any]
    status: CaseStatus
    values: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"params": dict(self.params), "status": self.status.value, "values": dict(self.values)}


@dataclass
class SuiteResult:
    """
    Outcome of a named suite.

    The suite passes iff no case failed; skipped cases are reported
    separately and never count as passes.
    """
    suite: str
    cases: List[CaseResult] = field(default_factory=list)
    runtime_ms: int = 0

    @property
    def failures(self) -> List[CaseResult]:
        return [case for case in self.cases if case.status == CaseStatus.FAIL]

    @property
    def skipped(self) -> List[CaseResult]:
        return [case for case in self.cases if case.status == CaseStatus.SKIP]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": [case.to_dict() for case in self.cases],
            "runtime_ms": self.runtime_ms,
        }


@dataclass(frozen=True)
class LevelSequences:
    """Q and its subset R for one (k, n)"""
    k: int
    n: int
    q: Tuple[LevelSubsequence, ...]
    r: Tuple[LevelSubsequence, ...]

    @property
    def q_count(self) -> int:
        return len(self.q)

    @property
    def r_count(self) -> int:
        return len(self.r)


@dataclass(frozen=True)
class DTable:
    """
    d[r][n]: number of level subsequences for n whose last edge has
    residue r modulo 2k+1, for 2 <= n <= n_max.
    """
    k: int
    n_max: int
    rows: Tuple[Tuple[int, ...], ...]

    def d(self, r: int, n: int) -> int:
        return self.rows[r][n - 2]

    def column(self, n: int) -> Tuple[int, ...]:
        return tuple(row[n - 2] for row in self.rows)

    def r_count(self, n: int) -> int:
        """|R| = (2k)^{n-1} - d[1][n]"""
        return (2 * self.k) ** (n - 1) - self.d(1, n)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n_max": self.n_max,
            "d": {str(n): list(self.column(n)) for n in range(2, self.n_max + 1)},
        }


@dataclass(frozen=True)
class CirculationPartition:
    """Circulations of an augmented orientation split into A and B"""
    a: Tuple[frozenset, ...]
    b: Tuple[frozenset, ...]
    involution_ok: bool
    b_single_cycles_ok: bool
    b_meets_every_base_cycle: bool

    @property
    def total(self) -> int:
        return len(self.a) + len(self.b)
