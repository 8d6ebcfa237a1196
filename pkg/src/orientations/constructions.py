"""Explicit orientations of products with an odd-cycle or clique factor"""

import logging
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

from src.errors import PreconditionError
from src.graphs.builder import build_family, product_index
from src.graphs.enums import GraphFamily
from src.graphs.models import Graph
from src.graphs.structure import (
    back_degree,
    is_clique,
    is_cycle_in_order,
    is_hamilton_path,
    max_degree,
)
from src.orientations.enums import BlockKind
from src.orientations.models import Annotations, Orientation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Block:
    """
    One part S_i of a vertex partition.

    cycle is the induced odd cycle c_0..c_{2k} oriented c_j -> c_{j+1};
    the other block vertices come before it in the block's internal order.
    """
    vertices: Tuple[int, ...]
    kind: BlockKind
    cycle: Tuple[int, ...]

    @property
    def order(self) -> Tuple[int, ...]:
        cycle = set(self.cycle)
        return tuple(v for v in self.vertices if v not in cycle) + self.cycle

    @property
    def cycle_half_length(self) -> int:
        return (len(self.cycle) - 1) // 2


@dataclass(frozen=True)
class BlockParameters:
    """Back-neighbour count rho_i and the bound term alpha_i of a block"""
    rho: int
    alpha: int


def _walk_cycle(G: Graph, vertices: Sequence[int]) -> Optional[Tuple[int, ...]]:
    # Cyclic order of an induced cycle, starting at vertices[0]
    members = set(vertices)
    start = vertices[0]
    walk = [start]
    previous, current = None, start
    while True:
        options = sorted(u for u in G.neighbors(current) if u in members and u != previous)
        if not options:
            return None
        following = options[0]
        if following == start:
            break
        if following in walk:
            return None
        walk.append(following)
        previous, current = current, following
    return tuple(walk) if len(walk) == len(vertices) else None


def classify_block(G: Graph, vertices: Sequence[int]) -> Block:
    """
    Classify G[vertices] as an odd cycle or a complete graph.

    Odd cycles keep the given order when it is already cyclic. Complete
    blocks use their last three vertices as the cycle.
    """
    vertices = tuple(vertices)
    if len(vertices) < 3:
        raise PreconditionError(f"block {_one_based(vertices)} has fewer than 3 vertices")

    if len(vertices) % 2 == 1:
        cycle = vertices if is_cycle_in_order(G, vertices) else _walk_cycle(G, vertices)
        if cycle is not None and is_cycle_in_order(G, cycle):
            return Block(vertices, BlockKind.ODD_CYCLE, cycle)

    if is_clique(G, vertices):
        return Block(vertices, BlockKind.COMPLETE, vertices[-3:])

    raise PreconditionError(f"block {_one_based(vertices)} induces neither an odd cycle nor a complete graph")


def _one_based(vertices: Sequence[int]) -> str:
    return "{" + ",".join(str(v + 1) for v in vertices) + "}"


def _check_partition(G: Graph, partition: Sequence[Sequence[int]]):
    flat = [v for block in partition for v in block]
    if sorted(flat) != list(range(G.vertex_count)):
        raise PreconditionError("partition must cover every vertex exactly once")


def partition_parameters(G: Graph, partition: Sequence[Sequence[int]]) -> List[BlockParameters]:
    """
    rho_i (most neighbours any S_i vertex has in earlier blocks) and alpha_i
    (rho_i + 3 for odd cycles, rho_i + |S_i| for complete blocks).
    """
    _check_partition(G, partition)
    earlier = set()
    parameters = []
    for vertices in partition:
        block = classify_block(G, vertices)
        rho = max(sum(1 for u in G.neighbors(v) if u in earlier) for v in block.vertices)
        alpha = rho + (3 if block.kind == BlockKind.ODD_CYCLE else len(block.vertices))
        parameters.append(BlockParameters(rho, alpha))
        earlier.update(block.vertices)
    return parameters


def _check_ham_path(H: Graph, ham_path: Sequence[int]):
    if H.vertex_count < 2:
        raise PreconditionError("second factor needs at least 2 vertices")
    if not is_hamilton_path(H, ham_path):
        raise PreconditionError(f"{[w + 1 for w in ham_path]} is not a Hamilton path of the second factor")


def _orient_blocks(G: Graph, blocks: Sequence[Block], H: Graph, ham_path: Sequence[int]) -> Orientation:
    """
    Orient G□H block by block and add one extra arc per block.

    Cycle edges follow their cycle; other G edges go from lower to higher
    (block, internal order) rank in every H layer; H edges follow ham_path.
    Block i gets the arc (c_1, w_last) -> (c_0, w_first).
    """
    m = H.vertex_count
    rank = {}
    cycle_arcs = set()
    for b, block in enumerate(blocks):
        for position, v in enumerate(block.order):
            rank[v] = (b, position)
        c = block.cycle
        cycle_arcs.update((c[i], c[(i + 1) % len(c)]) for i in range(len(c)))

    g_arcs = []
    for u, v in G.edges:
        if (u, v) in cycle_arcs:
            g_arcs.append((u, v))
        elif (v, u) in cycle_arcs:
            g_arcs.append((v, u))
        else:
            g_arcs.append((u, v) if rank[u] < rank[v] else (v, u))

    position = {w: i for i, w in enumerate(ham_path)}
    h_arcs = [(a, b) if position[a] < position[b] else (b, a) for a, b in H.edges]

    arcs = {(product_index(t, w, m), product_index(h, w, m)) for t, h in g_arcs for w in range(m)}
    arcs.update((product_index(g, a, m), product_index(g, b, m)) for g in range(G.vertex_count) for a, b in h_arcs)

    base_cycles = []
    specials = []
    block_sets = []
    first, last = ham_path[0], ham_path[-1]
    for block in blocks:
        c = block.cycle
        for w in ham_path:
            base_cycles.append(frozenset(
                (product_index(c[i], w, m), product_index(c[(i + 1) % len(c)], w, m)) for i in range(len(c))
            ))
        specials.append((product_index(c[1], last, m), product_index(c[0], first, m)))
        block_sets.append(frozenset(product_index(g, w, m) for g in block.vertices for w in range(m)))
    arcs.update(specials)

    annotations = Annotations(
        base_cycles=tuple(base_cycles),
        special_arc=specials[0] if len(specials) == 1 else None,
        blocks=tuple(block_sets),
        block_special_arcs=tuple(specials),
    )
    return Orientation(G.vertex_count * m, frozenset(arcs), annotations)


def orient_thm21(k: int, n: int) -> Tuple[Orientation, Orientation]:
    """
    Orient C_{2k+1} □ P_n and its augmentation by e*.

    Vertex (v_{i+1}, w_{j+1}) has index i·n + j. Every cycle copy runs
    v_i -> v_{i+1}; path arcs climb w_j -> w_{j+1}; e* runs from
    (v_2, w_n) to (v_1, w_1). The inter-layer arc leaving (v_{r+1}, w_{q+1})
    is e_{(2k+1)q + r}.

    Returns:
        (D, Dstar), both annotated with base cycles and level edges
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    if n < 2:
        raise PreconditionError(f"n must be >= 2, got {n} (n = 1 is a bare odd cycle)")

    size = 2 * k + 1
    cycle = build_family(GraphFamily.CYCLE, size)
    path = build_family(GraphFamily.PATH, n)
    block = Block(tuple(range(size)), BlockKind.ODD_CYCLE, tuple(range(size)))
    augmented = _orient_blocks(cycle, [block], path, tuple(range(n)))

    level_edges = tuple(
        (product_index(r, q, n), product_index(r, q + 1, n))
        for q in range(n - 1) for r in range(size)
    )
    star_annotations = replace(augmented.annotations, level_edges=level_edges)
    special = star_annotations.special_arc

    dstar = Orientation(augmented.vertex_count, augmented.arcs, star_annotations)
    d = Orientation(
        augmented.vertex_count,
        augmented.arcs - {special},
        Annotations(base_cycles=star_annotations.base_cycles, level_edges=level_edges),
    )
    logger.debug(f"Built cycle-path orientation k={k}, n={n}: {dstar.arc_count} arcs")
    return d, dstar


def orient_thm24(G: Graph, H: Graph, ham_path: Sequence[int],
                 cycle: Optional[Sequence[int]] = None) -> Orientation:
    """
    Orient G□H plus e* for G complete or an odd cycle.

    Without an explicit cycle, C is all of G (odd cycle) or the triangle
    on v_{n-2}, v_{n-1}, v_n (complete). An explicit cycle may be given
    for any G in which it is an induced odd cycle and every maximum-degree
    vertex lies on it or next to it.

    Args:
        G: first factor, vertices v_1..v_n in index order
        H: second factor
        ham_path: Hamilton path w_1..w_m of H
        cycle: optional induced odd cycle of G, in orientation order
    """
    if G.vertex_count < 3:
        raise PreconditionError("first factor needs at least 3 vertices")
    _check_ham_path(H, ham_path)

    if cycle is None:
        block = classify_block(G, tuple(range(G.vertex_count)))
    else:
        cycle = tuple(cycle)
        if len(cycle) % 2 == 0 or not is_cycle_in_order(G, cycle):
            raise PreconditionError(f"{_one_based(cycle)} is not an induced odd cycle in the given order")
        on_or_next = set(cycle) | {u for v in cycle for u in G.neighbors(v)}
        delta = max_degree(G)
        off = [v for v in range(G.vertex_count) if G.degree(v) == delta and v not in on_or_next]
        if off:
            raise PreconditionError(f"maximum-degree vertices {_one_based(off)} are not on or next to the cycle")
        block = Block(tuple(range(G.vertex_count)), BlockKind.INDUCED_CYCLE, cycle)

    return _orient_blocks(G, [block], H, ham_path)


def orient_thm25(G: Graph, partition: Sequence[Sequence[int]], k: int) -> Orientation:
    """
    Orient G□P_k for a partition of G into odd cycles.

    k = 1 gives an acyclic orientation of G. For k >= 2 every block
    G[S_i]□P_k is oriented like the cycle-path construction with its own
    extra arc; connecting edges run from lower to higher blocks.
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    _check_partition(G, partition)
    blocks = [classify_block(G, vertices) for vertices in partition]
    not_cycles = [b.vertices for b in blocks if b.kind != BlockKind.ODD_CYCLE]
    if not_cycles:
        raise PreconditionError(f"block {_one_based(not_cycles[0])} does not induce an odd cycle")

    if k == 1:
        return _orient_acyclic(G, blocks)
    path = build_family(GraphFamily.PATH, k)
    return _orient_blocks(G, blocks, path, tuple(range(k)))


def orient_thm26(G: Graph, partition: Sequence[Sequence[int]], H: Graph, ham_path: Sequence[int],
                 k: Optional[int] = None) -> Orientation:
    """
    Orient G□H for a partition of G into odd cycles and complete graphs.

    Each block G[S_i]□H is oriented like the single-factor construction with
    its own e*_i; connecting edges run from lower to higher blocks in every
    H layer. k, when given, must bound the back-degree of ham_path.
    """
    _check_partition(G, partition)
    _check_ham_path(H, ham_path)
    if k is not None and back_degree(H, ham_path) > k:
        raise PreconditionError(f"Hamilton path has back-degree {back_degree(H, ham_path)} > k = {k}")
    blocks = [classify_block(G, vertices) for vertices in partition]
    return _orient_blocks(G, blocks, H, ham_path)


def thm26_indegree_bound(G: Graph, partition: Sequence[Sequence[int]], H: Graph, ham_path: Sequence[int]) -> int:
    """alpha + k - 2 where k is the back-degree of ham_path"""
    alpha = max(p.alpha for p in partition_parameters(G, partition))
    return alpha + back_degree(H, ham_path) - 2


def _orient_acyclic(G: Graph, blocks: Sequence[Block]) -> Orientation:
    # Odd cycles follow cycle order (c_1 -> c_m closes the path), cliques
    # their block order; blocks are ranked by position in the partition.
    rank = {}
    for b, block in enumerate(blocks):
        internal = block.cycle if block.kind == BlockKind.ODD_CYCLE else block.vertices
        for position, v in enumerate(internal):
            rank[v] = (b, position)
    arcs = frozenset((u, v) if rank[u] < rank[v] else (v, u) for u, v in G.edges)
    block_sets = tuple(frozenset(block.vertices) for block in blocks)
    return Orientation(G.vertex_count, arcs, Annotations(blocks=block_sets))


def orient_blocks_acyclic(G: Graph, partition: Sequence[Sequence[int]]) -> Orientation:
    """Acyclic orientation of G with max indegree at most alpha - 1"""
    _check_partition(G, partition)
    return _orient_acyclic(G, [classify_block(G, vertices) for vertices in partition])
