"""Exact solver for the online list-coloring (paint) game"""

import logging
from typing import Dict, List, Tuple

from src.config import Config
from src.errors import PreconditionError, ResourceLimitError
from src.graphs.models import Graph
from src.invariants.coloring import chromatic_number, coloring_number
from src.invariants.enums import Phase
from src.invariants.models import GameState
from src.utils.performance import measure_performance

logger = logging.getLogger(__name__)


class PaintGameSolver:
    """
    Minimax over paint-game positions with memoization.

    Every vertex starts with k tokens. The marker marks a nonempty set M of
    remaining vertices, spending one token on each; the remover then deletes
    an independent I ⊆ M. The marker wins once a remaining vertex has no
    token left, the remover once no vertex remains.

    restricted=True lets the remover play only maximal independent subsets
    of M and drops vertices with more tokens than remaining neighbours,
    since the remover can always color those last.
    """

    def __init__(self, G: Graph, restricted: bool = True):
        limit = Config.PAINT_MAX_VERTICES
        if G.vertex_count > limit:
            raise ResourceLimitError("PAINT_MAX_VERTICES", limit, G.vertex_count)
        self.graph = G
        self.restricted = restricted
        self.neighbor_masks = [sum(1 << u for u in G.neighbors(v)) for v in range(G.vertex_count)]
        self.memo: Dict[GameState, bool] = {}
        self._options: Dict[int, Tuple[int, ...]] = {}

    def _bits(self, mask: int) -> List[int]:
        return [v for v in range(self.graph.vertex_count) if mask >> v & 1]

    def _canonical(self, remaining: int, tokens: Tuple[int, ...]) -> GameState:
        if self.restricted:
            changed = True
            while changed:
                changed = False
                for v in self._bits(remaining):
                    if tokens[v] > bin(self.neighbor_masks[v] & remaining).count("1"):
                        remaining &= ~(1 << v)
                        changed = True
        tokens = tuple(t if remaining >> v & 1 else 0 for v, t in enumerate(tokens))
        return GameState(remaining, tokens)

    def _remover_options(self, marked: int) -> Tuple[int, ...]:
        if marked not in self._options:
            self._options[marked] = self._independent_subsets(marked)
        return self._options[marked]

    def _independent_subsets(self, marked: int) -> Tuple[int, ...]:
        vertices = self._bits(marked)
        independent: List[int] = []

        def grow(i: int, chosen: int):
            if i == len(vertices):
                independent.append(chosen)
                return
            v = vertices[i]
            grow(i + 1, chosen)
            if not self.neighbor_masks[v] & chosen:
                grow(i + 1, chosen | 1 << v)

        grow(0, 0)
        if not self.restricted:
            return tuple(independent)

        def maximal(chosen: int) -> bool:
            return all(
                self.neighbor_masks[v] & chosen
                for v in vertices if not chosen >> v & 1
            )
        return tuple(chosen for chosen in independent if maximal(chosen))

    def remover_wins(self, state: GameState) -> bool:
        """Outcome with the marker to move"""
        if state.phase != Phase.MARKER:
            return self._remover_can_answer(state)
        state = self._canonical(state.remaining, state.tokens)
        if state in self.memo:
            return self.memo[state]

        remaining, tokens = state.remaining, state.tokens
        if remaining == 0:
            result = True
        elif any(tokens[v] == 0 for v in self._bits(remaining)):
            result = False
        else:
            result = True
            marked = remaining
            while marked:
                answer = GameState(remaining, tokens, Phase.REMOVER, marked)
                if not self._remover_can_answer(answer):
                    result = False
                    break
                marked = (marked - 1) & remaining

        self.memo[state] = result
        return result

    def _remover_can_answer(self, state: GameState) -> bool:
        tokens = list(state.tokens)
        for v in self._bits(state.marked):
            tokens[v] -= 1
        spent = tuple(tokens)
        return any(
            self.remover_wins(GameState(state.remaining & ~removed, spent))
            for removed in self._remover_options(state.marked)
        )

    def solve(self, k: int) -> bool:
        if k < 1:
            raise PreconditionError(f"k must be >= 1, got {k}")
        n = self.graph.vertex_count
        start = GameState((1 << n) - 1, (k,) * n)
        result = self.remover_wins(start)
        logger.debug(f"Paint game k={k}: remover {'wins' if result else 'loses'}, {len(self.memo)} positions")
        return result


def is_k_paintable(G: Graph, k: int, restricted: bool = True) -> bool:
    """
    True iff the remover wins the paint game with k tokens per vertex.

    Raises:
        ResourceLimitError: more vertices than Config.PAINT_MAX_VERTICES
    """
    return PaintGameSolver(G, restricted).solve(k)


@measure_performance
def paint_number(G: Graph) -> int:
    """Least k with G k-paintable; searched upward from chi, capped by col"""
    if G.vertex_count == 0:
        return 0
    solver = PaintGameSolver(G)
    upper = coloring_number(G)
    k = chromatic_number(G)
    while k < upper:
        if solver.solve(k):
            return k
        k += 1
    return upper
