"""Result and state types for the coloring invariants"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from src.errors import PreconditionError
from src.invariants.enums import InvariantMethod, InvariantStatus, Phase
from src.orientations.models import Orientation


@dataclass(frozen=True)
class ListAssignment:
    """Color list L(v) for every vertex 0..n-1"""
    lists: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        for v, colors in enumerate(self.lists):
            if not colors:
                raise PreconditionError(f"vertex {v} has an empty list")

    @classmethod
    def from_lists(cls, lists: Sequence) -> "ListAssignment":
        return cls(tuple(frozenset(int(c) for c in colors) for colors in lists))

    @classmethod
    def uniform(cls, vertex_count: int, colors) -> "ListAssignment":
        return cls(tuple(frozenset(colors) for _ in range(vertex_count)))

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, v: int) -> FrozenSet[int]:
        return self.lists[v]

    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(colors) for colors in self.lists)

    def to_dict(self) -> Dict[int, list]:
        return {v: sorted(colors) for v, colors in enumerate(self.lists)}


@dataclass(frozen=True)
class GameState:
    """
    Position of the paint game.

    remaining: bitmask of uncoloured vertices
    tokens: tokens left per vertex (indexed by vertex)
    marked: bitmask M of the marker's last move when the remover is to move
    """
    remaining: int
    tokens: Tuple[int, ...]
    phase: Phase = Phase.MARKER
    marked: int = 0

    def __post_init__(self):
        if any(t < 0 for t in self.tokens):
            raise PreconditionError("token counts must be nonnegative")
        if self.phase == Phase.REMOVER:
            if not self.marked or self.marked & ~self.remaining:
                raise PreconditionError("marked set must be a nonempty subset of the remaining vertices")


@dataclass(frozen=True)
class ChoosabilityResult:
    """Outcome of an exhaustive k-choosability check"""
    choosable: bool
    witness: Optional[ListAssignment] = None
    assignments_checked: int = 0

    def __bool__(self) -> bool:
        return self.choosable


@dataclass(frozen=True)
class AlonTarsiResult:
    """AT(G) with a verified witness in the indegree convention"""
    value: int
    witness: Optional[Orientation]
    exponents: Tuple[int, ...] = ()


@dataclass
class InvariantValue:
    """One computed invariant with its provenance"""
    value: Optional[int]
    method: InvariantMethod
    status: InvariantStatus = InvariantStatus.COMPUTED
    runtime_ms: int = 0
    note: Optional[str] = None

    def to_dict(self) -> dict:
        data = {
            "value": self.value,
            "method": self.method.value,
            "status": self.status.value,
            "runtime_ms": self.runtime_ms,
        }
        if self.note:
            data["note"] = self.note
        return data


@dataclass
class InvariantReport:
    """
    chi, col, chi_list, chi_paint and at for one graph, plus comparison
    bounds when a product is being described.
    """
    values: Dict[str, InvariantValue] = field(default_factory=dict)
    bounds: Dict[str, int] = field(default_factory=dict)
    chain_holds: Optional[bool] = None
    chromatic_choosable: Optional[bool] = None
    chromatic_at: Optional[bool] = None

    def value_of(self, name: str) -> Optional[int]:
        entry = self.values.get(name)
        return entry.value if entry and entry.status == InvariantStatus.COMPUTED else None

    def summary(self) -> Dict[str, Optional[int]]:
        """Invariant name to value, None where skipped"""
        return {name: self.value_of(name) for name in sorted(self.values)}

    def to_dict(self) -> dict:
        return {
            "summary": self.summary(),
            "values": {name: entry.to_dict() for name, entry in sorted(self.values.items())},
            "bounds": dict(sorted(self.bounds.items())),
            "chain_holds": self.chain_holds,
            "chromatic_choosable": self.chromatic_choosable,
            "chromatic_at": self.chromatic_at,
        }
