"""Value types produced by the circulation engines"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, Optional, Tuple

from src.errors import PreconditionError
from src.orientations.models import Arc

# Arc subset with indegree = outdegree at every vertex of the host digraph
Circulation = FrozenSet[Arc]

ExponentVector = Tuple[int, ...]


@dataclass(frozen=True)
class Census:
    """Numbers of even and odd circulations of a digraph"""
    even_count: int
    odd_count: int

    def __post_init__(self):
        if self.even_count < 1:
            raise PreconditionError("a census always counts the empty circulation")
        if self.odd_count < 0:
            raise PreconditionError("odd_count must be nonnegative")

    @property
    def diff(self) -> int:
        return self.even_count - self.odd_count

    @property
    def total(self) -> int:
        return self.even_count + self.odd_count


@dataclass(frozen=True)
class CoeffMap:
    """
    Coefficients of prod_{uv in E, u<v} (x_u - x_v) on exponent vectors
    whose entries are all below cap. Only nonzero coefficients are stored.
    """
    vertex_count: int
    edge_count: int
    cap: int
    coefficients: Dict[ExponentVector, int] = field(default_factory=dict, hash=False)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __contains__(self, key: ExponentVector) -> bool:
        return tuple(key) in self.coefficients

    def __iter__(self) -> Iterator[ExponentVector]:
        return iter(sorted(self.coefficients))

    def get(self, key: ExponentVector, default: int = 0) -> int:
        return self.coefficients.get(tuple(key), default)

    def items(self):
        return sorted(self.coefficients.items())

    def first_key(self) -> Optional[ExponentVector]:
        """Lexicographically smallest surviving exponent vector"""
        return min(self.coefficients) if self.coefficients else None
