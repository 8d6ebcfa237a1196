"""graph6 codec on top of networkx with byte-level validation"""

import logging
from typing import Tuple

import networkx as nx

from src.errors import AtLabError
from src.graphs.models import Graph

logger = logging.getLogger(__name__)

HEADER = b">>graph6<<"


class Graph6DecodeError(AtLabError):
    """Malformed graph6 input; offset is the first bad byte"""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"byte {offset}: {message}")


def graph6_encode(G: Graph) -> bytes:
    """Header-free graph6 bytes of G, without the trailing newline"""
    return nx.to_graph6_bytes(G.to_networkx(), nodes=range(G.vertex_count), header=False).rstrip(b"\n")


def _vertex_count(data: bytes, start: int) -> Tuple[int, int]:
    # N(n): one byte below 126, else 126 + 3 bytes, else 126 126 + 6 bytes
    if start >= len(data):
        raise Graph6DecodeError("missing vertex count", start)
    if data[start] != 126:
        return data[start] - 63, start + 1
    if start + 1 < len(data) and data[start + 1] == 126:
        width, first = 6, start + 2
    else:
        width, first = 3, start + 1
    if first + width > len(data):
        raise Graph6DecodeError("truncated vertex count", len(data))
    n = 0
    for byte in data[first:first + width]:
        n = (n << 6) | (byte - 63)
    return n, first + width


def validate_graph6(data: bytes) -> int:
    """
    Check data against the graph6 format and return its vertex count.

    Raises:
        Graph6DecodeError: naming the first offending byte offset
    """
    start = len(HEADER) if data.startswith(HEADER) else 0
    for offset in range(start, len(data)):
        if not 63 <= data[offset] <= 126:
            raise Graph6DecodeError(f"value {data[offset]} outside 63..126", offset)

    n, body_start = _vertex_count(data, start)
    bits = n * (n - 1) // 2
    expected = -(-bits // 6)
    body = data[body_start:]
    if len(body) != expected:
        raise Graph6DecodeError(
            f"expected {expected} data bytes for n={n}, found {len(body)}",
            body_start + min(len(body), expected),
        )
    padding = expected * 6 - bits
    if padding and (body[-1] - 63) & ((1 << padding) - 1):
        raise Graph6DecodeError("nonzero padding bits", len(data) - 1)
    return n


def graph6_decode(data: bytes) -> Graph:
    """
    Graph from graph6 bytes; an optional >>graph6<< header and trailing
    whitespace are accepted.

    graph6 stores no labels: vertices come back with Named labels, so a
    round trip preserves the vertex count and the edge set only.

    Raises:
        Graph6DecodeError: malformed input, with the byte offset
    """
    data = data.rstrip()
    n = validate_graph6(data)
    nx_graph = nx.from_graph6_bytes(data)
    graph = Graph.from_networkx(nx_graph)
    logger.debug(f"Decoded graph6 with n={n}, m={graph.edge_count}")
    return graph
