"""List-coloring choosability: exhaustive checks and the 2-choosable characterization"""

import logging
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from src.config import Config
from src.errors import PreconditionError, ResourceLimitError
from src.graphs.builder import build_family
from src.graphs.enums import GraphFamily
from src.graphs.models import Graph
from src.graphs.structure import bridges, induced_subgraph, is_bipartite, is_connected
from src.invariants.coloring import chromatic_number, coloring_number
from src.invariants.enums import InvariantMethod
from src.invariants.models import ChoosabilityResult, ListAssignment
from src.utils.performance import measure_performance

logger = logging.getLogger(__name__)


def _colorable(adjacency: Sequence[Sequence[int]], masks: Sequence[int]) -> bool:
    # Lists as color bitmasks; branch on the vertex with the fewest options
    n = len(masks)
    chosen = [0] * n

    def backtrack(left: int) -> bool:
        if left == 0:
            return True
        best_v, best_options, best_count = -1, 0, None
        for v in range(n):
            if chosen[v]:
                continue
            blocked = 0
            for u in adjacency[v]:
                blocked |= chosen[u]
            options = masks[v] & ~blocked
            count = bin(options).count("1")
            if best_count is None or count < best_count:
                best_v, best_options, best_count = v, options, count
                if count == 0:
                    return False
        options = best_options
        while options:
            bit = options & -options
            options ^= bit
            chosen[best_v] = bit
            if backtrack(left - 1):
                return True
        chosen[best_v] = 0
        return False

    return backtrack(n)


def canonical_assignments(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """
    k-list assignments on n vertices up to renaming of colors.

    Colors 0, 1, 2, ... are introduced in first-use order: the list of
    vertex i is a (k - j)-subset of the colors already used plus the next
    j fresh colors. Lists are yielded as bitmasks.
    """
    masks = [0] * n

    def extend(i: int, used: int) -> Iterator[Tuple[int, ...]]:
        if i == n:
            yield tuple(masks)
            return
        for fresh in range(k + 1):
            if k - fresh > used:
                continue
            fresh_mask = sum(1 << (used + f) for f in range(fresh))
            for old in combinations(range(used), k - fresh):
                masks[i] = fresh_mask | sum(1 << c for c in old)
                yield from extend(i + 1, used + fresh)

    yield from extend(0, 0)


def _core(G: Graph, k: int) -> List[int]:
    # Vertices of degree < k can always be colored last
    alive = set(range(G.vertex_count))
    degree = {v: G.degree(v) for v in alive}
    stack = [v for v in alive if degree[v] < k]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.remove(v)
        for u in G.neighbors(v):
            if u in alive:
                degree[u] -= 1
                if degree[u] < k:
                    stack.append(u)
    return sorted(alive)


def _mask_to_colors(mask: int) -> List[int]:
    return [c + 1 for c in range(mask.bit_length()) if mask >> c & 1]


@measure_performance
def is_k_choosable(G: Graph, k: int) -> ChoosabilityResult:
    """
    Exhaustive check that every k-list assignment of G is colorable.

    Vertices of degree < k are stripped first; each connected component of
    what remains is checked over canonical assignments from the universe
    {1..k·n}. On failure the witness lists the first uncolorable component
    assignment; the other vertices get private fresh colors.

    Raises:
        ResourceLimitError: a remaining component exceeds the configured vertex limit
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")

    core = _core(G, k)
    if not core:
        return ChoosabilityResult(True)

    core_graph = induced_subgraph(G, core)
    components = sorted(
        (sorted(core[i] for i in component) for component in nx.connected_components(core_graph.to_networkx())),
        key=lambda component: component[0],
    )
    limit = Config.choosable_vertex_limit(k)
    largest = max(len(component) for component in components)
    if largest > limit:
        raise ResourceLimitError(
            f"CHOOSABLE_MAX_VERTICES_K{k if k <= 3 else 'N'}", limit, largest,
            hint="use alon_tarsi_number or two_choosable_by_characterization",
        )

    checked = 0
    for component in components:
        sub = induced_subgraph(G, component)
        adjacency = [sorted(sub.neighbors(v)) for v in range(sub.vertex_count)]
        for masks in canonical_assignments(sub.vertex_count, k):
            checked += 1
            if not _colorable(adjacency, masks):
                witness = _witness(G, k, component, masks)
                logger.debug(f"Not {k}-choosable: witness after {checked} assignments")
                return ChoosabilityResult(False, witness, checked)

    logger.debug(f"{k}-choosable: {checked} assignments checked")
    return ChoosabilityResult(True, None, checked)


def _witness(G: Graph, k: int, component: Sequence[int], masks: Sequence[int]) -> ListAssignment:
    lists: List[Optional[List[int]]] = [None] * G.vertex_count
    for v, mask in zip(component, masks):
        lists[v] = _mask_to_colors(mask)
    fresh = k * G.vertex_count + 1
    for v in range(G.vertex_count):
        if lists[v] is None:
            lists[v] = list(range(fresh, fresh + k))
            fresh += k
    return ListAssignment.from_lists(lists)


def two_choosable_by_characterization(G: Graph) -> bool:
    """
    2-choosability of a connected bipartite graph from its structure.

    True iff G has at most one cycle, or its edges that are not cut edges
    form a Theta(2,2,2t) for some t >= 1.
    """
    if not is_connected(G):
        raise PreconditionError("graph must be connected")
    if not is_bipartite(G):
        raise PreconditionError("graph must be bipartite")

    if G.edge_count - G.vertex_count + 1 <= 1:
        return True

    cut = set(bridges(G))
    kept = [e for e in G.edge_list if e not in cut]
    vertices = sorted({v for e in kept for v in e})
    if (len(vertices) - 3) % 2 or len(vertices) < 5:
        return False
    core = nx.Graph(kept)
    theta = build_family(GraphFamily.THETA, 2, 2, len(vertices) - 3).to_networkx()
    return nx.is_isomorphic(core, theta)


def list_chromatic_number(G: Graph, upper: Optional[int] = None) -> Tuple[int, InvariantMethod]:
    """
    chi_l(G) squeezed between chi and min(col, upper).

    Exhaustive choosability checks run only for k in [chi, bound); when chi
    meets the bound no enumeration is needed.

    Args:
        upper: an upper bound known from elsewhere (chi_p or AT)
    """
    if G.vertex_count == 0:
        return 0, InvariantMethod.SQUEEZE
    bound = coloring_number(G)
    if upper is not None:
        bound = min(bound, upper)
    chi = chromatic_number(G)
    k = chi
    while k < bound:
        if is_k_choosable(G, k):
            return k, InvariantMethod.ENUMERATION
        k += 1
    return bound, InvariantMethod.SQUEEZE if chi == bound else InvariantMethod.ENUMERATION
