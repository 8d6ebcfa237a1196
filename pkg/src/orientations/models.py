"""Digraph model for orientations and their construction annotations"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Tuple

import networkx as nx

from src.errors import PreconditionError

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Annotations:
    """
    Structure recorded by the product constructions.

    base_cycles: oriented copies of the cycle factor, one arc set per copy
    special_arc: the extra arc e* closing cycles across all layers
    level_edges: inter-layer arcs in index order; level_edges[i] is e_i
    blocks: product vertex sets of the per-block subdigraphs M_i
    block_special_arcs: the extra arc of each block, aligned with blocks
    """
    base_cycles: Tuple[FrozenSet[Arc], ...] = ()
    special_arc: Optional[Arc] = None
    level_edges: Tuple[Arc, ...] = ()
    blocks: Tuple[FrozenSet[int], ...] = ()
    block_special_arcs: Tuple[Arc, ...] = ()

    def all_arcs(self) -> FrozenSet[Arc]:
        """Every arc any annotation refers to"""
        arcs = set(self.level_edges) | set(self.block_special_arcs)
        for cycle in self.base_cycles:
            arcs |= cycle
        if self.special_arc is not None:
            arcs.add(self.special_arc)
        return frozenset(arcs)


@dataclass(frozen=True)
class Orientation:
    """
    Simple digraph on vertices 0..vertex_count-1.

    No loops and at most one arc per unordered vertex pair.
    """
    vertex_count: int
    arcs: FrozenSet[Arc]
    annotations: Optional[Annotations] = None

    def __post_init__(self):
        pairs = set()
        for tail, head in self.arcs:
            if tail == head:
                raise PreconditionError(f"loop at vertex {tail}")
            if not (0 <= tail < self.vertex_count and 0 <= head < self.vertex_count):
                raise PreconditionError(f"arc ({tail},{head}) names a vertex outside 0..{self.vertex_count - 1}")
            pair = (min(tail, head), max(tail, head))
            if pair in pairs:
                raise PreconditionError(f"vertices {pair} carry arcs in both directions")
            pairs.add(pair)

        if self.annotations is not None:
            stray = self.annotations.all_arcs() - self.arcs
            if stray:
                raise PreconditionError(f"annotations name arcs not in the digraph: {sorted(stray)[:5]}")
            seen = set()
            for cycle in self.annotations.base_cycles:
                vertices = {v for arc in cycle for v in arc}
                if vertices & seen:
                    raise PreconditionError("base cycles must be vertex-disjoint")
                seen |= vertices

    @classmethod
    def from_arcs(cls, vertex_count: int, arcs: Iterable[Arc],
                  annotations: Optional[Annotations] = None) -> "Orientation":
        return cls(vertex_count, frozenset((int(t), int(h)) for t, h in arcs), annotations)

    @cached_property
    def arc_list(self) -> Tuple[Arc, ...]:
        """Arcs sorted lexicographically"""
        return tuple(sorted(self.arcs))

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_neighbors(self) -> Tuple[FrozenSet[int], ...]:
        out = [set() for _ in range(self.vertex_count)]
        for tail, head in self.arcs:
            out[tail].add(head)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def in_neighbors(self) -> Tuple[FrozenSet[int], ...]:
        into = [set() for _ in range(self.vertex_count)]
        for tail, head in self.arcs:
            into[head].add(tail)
        return tuple(frozenset(s) for s in into)

    def to_networkx(self) -> nx.DiGraph:
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(self.vertex_count))
        digraph.add_edges_from(self.arc_list)
        return digraph

    def __repr__(self):
        return f"<Orientation(n={self.vertex_count}, arcs={self.arc_count})>"


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex in- and outdegrees of an orientation"""
    indegrees: Tuple[int, ...]
    outdegrees: Tuple[int, ...] = field(default=())

    @property
    def max_indegree(self) -> int:
        return max(self.indegrees, default=0)

    @property
    def max_outdegree(self) -> int:
        return max(self.outdegrees, default=0)

    @property
    def arc_count(self) -> int:
        return sum(self.indegrees)
