# Graph core package
from src.graphs.enums import GraphFamily
from src.graphs.models import Atom, Graph, Pair, VertexLabel, normalize_edge
from src.graphs.builder import (
    GraphEditError,
    InvalidFamilyError,
    build_family,
    cartesian_product,
    edit_edges,
    graph_power,
    join,
    partial_join_with_universal,
    product_index,
)
from src.graphs.structure import (
    back_degree,
    degeneracy_order,
    find_hamilton_path,
    induced_subgraph,
    is_bipartite,
    is_connected,
    max_degree,
)

__all__ = [
    'GraphFamily', 'Atom', 'Graph', 'Pair', 'VertexLabel', 'normalize_edge',
    'GraphEditError', 'InvalidFamilyError', 'build_family', 'cartesian_product',
    'edit_edges', 'graph_power', 'join', 'partial_join_with_universal', 'product_index',
    'back_degree', 'degeneracy_order', 'find_hamilton_path', 'induced_subgraph',
    'is_bipartite', 'is_connected', 'max_degree',
]
