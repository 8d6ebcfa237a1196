# Circulation engine package
from src.circulations.models import Census, Circulation, CoeffMap
from src.circulations.enumerator import CirculationEnumerator, census_enumerate, iter_circulations
from src.circulations.coefficient import census_dp, elimination_order, graph_poly_coeffs
from src.circulations.witness import at_witness_check

__all__ = [
    'Census', 'Circulation', 'CoeffMap',
    'CirculationEnumerator', 'census_enumerate', 'iter_circulations',
    'census_dp', 'elimination_order', 'graph_poly_coeffs',
    'at_witness_check',
]
