# Orientation constructions package
from src.orientations.models import Annotations, Arc, DegreeProfile, Orientation
from src.orientations.digraph import (
    degree_profile,
    is_acyclic,
    orient_by_order,
    reverse,
    sub_orientation,
    underlying_edges,
)
from src.orientations.constructions import (
    classify_block,
    orient_blocks_acyclic,
    orient_thm21,
    orient_thm24,
    orient_thm25,
    orient_thm26,
    partition_parameters,
)

__all__ = [
    'Annotations', 'Arc', 'DegreeProfile', 'Orientation',
    'degree_profile', 'is_acyclic', 'orient_by_order', 'reverse', 'sub_orientation', 'underlying_edges',
    'classify_block', 'orient_blocks_acyclic', 'orient_thm21', 'orient_thm24', 'orient_thm25',
    'orient_thm26', 'partition_parameters',
]
