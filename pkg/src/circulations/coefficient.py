"""Graph polynomial coefficients by edge-by-edge dynamic programming"""

import logging
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

from src.circulations.models import CoeffMap, ExponentVector
from src.config import Config
from src.errors import PreconditionError, ResourceLimitError
from src.graphs.models import Edge, Graph, normalize_edge
from src.orientations.digraph import degree_profile
from src.orientations.models import Orientation
from src.utils.performance import measure_performance

logger = logging.getLogger(__name__)


def elimination_order(vertex_count: int, edges: Sequence[Edge]) -> List[Edge]:
    """
    Greedy edge order keeping the DP frontier small.

    Each step takes the edge that retires the most vertices, then the one
    touching the most vertices already on the frontier; ties go to the
    lexicographically smallest edge.
    """
    remaining = [0] * vertex_count
    for u, v in edges:
        remaining[u] += 1
        remaining[v] += 1
    active = [False] * vertex_count
    pending = set(edges)
    order = []

    while pending:
        def score(edge: Edge):
            u, v = edge
            retires = (remaining[u] == 1) + (remaining[v] == 1)
            touching = active[u] + active[v]
            return (-retires, -touching, edge)

        edge = min(pending, key=score)
        pending.remove(edge)
        order.append(edge)
        for w in edge:
            remaining[w] -= 1
            active[w] = remaining[w] > 0
    return order


@measure_performance
def census_dp(D: Orientation) -> int:
    """
    Signed coefficient of prod_v x_v^{outdeg(v)} in prod_{u<v} (x_u - x_v)
    over the underlying edges of D.

    Its magnitude equals |even - odd| for D; the sign is not normalised.

    Raises:
        ResourceLimitError: frontier states exceed Config.DP_MAX_STATES
    """
    n = D.vertex_count
    edges = [normalize_edge(t, h) for t, h in D.arcs]
    target = degree_profile(D).outdegrees
    order = elimination_order(n, edges)
    limit = Config.DP_MAX_STATES

    remaining = [0] * n
    for u, v in edges:
        remaining[u] += 1
        remaining[v] += 1

    frontier: List[int] = []
    states: Dict[Tuple[int, ...], int] = {(): 1}
    widest = 0

    for step, (u, v) in enumerate(order):
        for w in (u, v):
            if w not in frontier:
                frontier.append(w)
                states = {key + (0,): c for key, c in states.items()}
        iu, iv = frontier.index(u), frontier.index(v)
        remaining[u] -= 1
        remaining[v] -= 1

        updated: Dict[Tuple[int, ...], int] = defaultdict(int)
        for key, c in states.items():
            eu, ev = key[iu], key[iv]
            # x_u taken
            if eu + 1 <= target[u] and ev + remaining[v] >= target[v]:
                nxt = list(key)
                nxt[iu] += 1
                updated[tuple(nxt)] += c
            # -x_v taken
            if ev + 1 <= target[v] and eu + remaining[u] >= target[u]:
                nxt = list(key)
                nxt[iv] += 1
                updated[tuple(nxt)] -= c
        states = {key: c for key, c in updated.items() if c != 0}

        for w in sorted((u, v), key=frontier.index, reverse=True):
            if remaining[w] == 0:
                i = frontier.index(w)
                states = {key[:i] + key[i + 1:]: c for key, c in states.items() if key[i] == target[w]}
                frontier.pop(i)

        widest = max(widest, len(frontier))
        if len(states) > limit:
            raise ResourceLimitError(
                "DP_MAX_STATES", limit, len(states),
                hint=f"at edge {step + 1}/{len(order)}, frontier width {len(frontier)}",
            )
        if not states:
            break

    logger.debug(f"Frontier DP over {len(order)} edges, widest frontier {widest}")
    return states.get((), 0) if not frontier else 0


@measure_performance
def graph_poly_coeffs(G: Graph, cap: int) -> CoeffMap:
    """
    All coefficients of prod_{uv in E, u<v} (x_u - x_v) on exponent vectors
    with every entry at most cap - 1.

    Keys reaching cap are dropped as edges are multiplied in; a key is also
    dropped once the headroom left below cap cannot absorb the edges still
    to come.

    Raises:
        ResourceLimitError: live keys exceed Config.COEFF_MAX_STATES
    """
    if cap < 1:
        raise PreconditionError(f"cap must be positive, got {cap}")
    n = G.vertex_count
    order = elimination_order(n, list(G.edge_list))
    limit = Config.COEFF_MAX_STATES
    top = cap - 1

    states: Dict[ExponentVector, int] = {(0,) * n: 1}
    for step, (u, v) in enumerate(order):
        left = len(order) - step - 1
        updated: Dict[ExponentVector, int] = defaultdict(int)
        for key, c in states.items():
            headroom = n * top - sum(key)
            if headroom - 1 < left:
                continue
            if key[u] < top:
                nxt = list(key)
                nxt[u] += 1
                updated[tuple(nxt)] += c
            if key[v] < top:
                nxt = list(key)
                nxt[v] += 1
                updated[tuple(nxt)] -= c
        states = {key: c for key, c in updated.items() if c != 0}
        if len(states) > limit:
            raise ResourceLimitError("COEFF_MAX_STATES", limit, len(states), hint=f"cap {cap}")
        if not states:
            break

    logger.debug(f"Graph polynomial on {n} vertices, cap {cap}: {len(states)} surviving keys")
    return CoeffMap(n, G.edge_count, cap, states)
