# Coloring invariants package
from src.invariants.models import (
    AlonTarsiResult,
    ChoosabilityResult,
    GameState,
    InvariantReport,
    InvariantValue,
    ListAssignment,
)
from src.invariants.coloring import check_list_colorable, chromatic_number, coloring_number
from src.invariants.choosability import is_k_choosable, list_chromatic_number, two_choosable_by_characterization
from src.invariants.paintability import PaintGameSolver, is_k_paintable, paint_number
from src.invariants.alon_tarsi import alon_tarsi_number, orientation_from_outdegrees, orientation_with_bounded_indegree
from src.invariants.bounds import bound_borowiecki, bound_delta_sum, bound_list_brooks
from src.invariants.chain import chain_check, compute_invariants
from src.invariants.search import find_bad_assignment

__all__ = [
    'AlonTarsiResult', 'ChoosabilityResult', 'GameState', 'InvariantReport', 'InvariantValue', 'ListAssignment',
    'check_list_colorable', 'chromatic_number', 'coloring_number',
    'is_k_choosable', 'list_chromatic_number', 'two_choosable_by_characterization',
    'PaintGameSolver', 'is_k_paintable', 'paint_number',
    'alon_tarsi_number', 'orientation_from_outdegrees', 'orientation_with_bounded_indegree',
    'bound_borowiecki', 'bound_delta_sum', 'bound_list_brooks',
    'chain_check', 'compute_invariants', 'find_bad_assignment',
]
