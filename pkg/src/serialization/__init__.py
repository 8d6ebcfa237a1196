# Persistence codecs
from src.serialization.graph6 import Graph6DecodeError, graph6_decode, graph6_encode, validate_graph6
from src.serialization.json_codec import (
    dump_graph,
    dump_orientation,
    dumps,
    graph_from_dict,
    graph_to_dict,
    load_graph,
    load_orientation,
    orientation_from_dict,
    orientation_to_dict,
    to_jsonable,
)

__all__ = [
    'Graph6DecodeError', 'graph6_decode', 'graph6_encode', 'validate_graph6',
    'dump_graph', 'dump_orientation', 'dumps', 'graph_from_dict', 'graph_to_dict',
    'load_graph', 'load_orientation', 'orientation_from_dict', 'orientation_to_dict', 'to_jsonable',
]
