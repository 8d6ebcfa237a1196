"""Evaluate graph expressions through the graph-core builders"""

import logging
from pathlib import Path
from typing import Optional, Sequence, Tuple

from src.errors import AtLabError, PreconditionError
from src.expressions.parser import (
    Edit,
    FamilyAtom,
    FileRef,
    GraphExpr,
    Join,
    Location,
    Power,
    Product,
    parse_expr,
)
from src.graphs.builder import build_family, cartesian_product, edit_edges, graph_power, join
from src.graphs.models import Edge, Graph
from src.serialization.graph6 import graph6_decode
from src.serialization.json_codec import load_graph

logger = logging.getLogger(__name__)


class ExprEvalError(PreconditionError):
    """A well-formed expression that names an invalid graph"""

    def __init__(self, message: str, location: Optional[Location] = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def _zero_based(edges: Sequence[Tuple[int, int]], location: Location) -> Tuple[Edge, ...]:
    if any(u < 1 or v < 1 for u, v in edges):
        raise ExprEvalError("edge endpoints are 1-based", location)
    return tuple((u - 1, v - 1) for u, v in edges)


def _load_file(path: str, location: Location) -> Graph:
    file_path = Path(path)
    if not file_path.is_file():
        raise ExprEvalError(f"no such graph file '{path}'", location)
    if file_path.suffix.lower() == ".json":
        return load_graph(file_path)
    return graph6_decode(file_path.read_bytes().strip())


def eval_expr(expr: GraphExpr) -> Graph:
    """
    Build the graph an expression denotes.

    Raises:
        ExprEvalError: family constraints, edge edits or files fail; the
            message carries the offending node's location
    """
    try:
        if isinstance(expr, FamilyAtom):
            return build_family(expr.family, *expr.params)
        if isinstance(expr, Product):
            return cartesian_product(eval_expr(expr.left), eval_expr(expr.right))
        if isinstance(expr, Join):
            cross = None if expr.cross_edges is None else _zero_based(expr.cross_edges, expr.location)
            return join(eval_expr(expr.left), eval_expr(expr.right), cross)
        if isinstance(expr, Power):
            return graph_power(eval_expr(expr.expr), expr.r)
        if isinstance(expr, Edit):
            return edit_edges(
                eval_expr(expr.expr),
                add=_zero_based(expr.adds, expr.location),
                delete=_zero_based(expr.deletes, expr.location),
            )
        if isinstance(expr, FileRef):
            return _load_file(expr.path, expr.location)
    except ExprEvalError:
        raise
    except AtLabError as e:
        raise ExprEvalError(str(e), expr.location) from e
    raise ExprEvalError(f"not a graph expression: {expr!r}")


def evaluate(text: str) -> Graph:
    """parse_expr followed by eval_expr"""
    graph = eval_expr(parse_expr(text))
    logger.debug(f"Evaluated '{text}' to {graph!r}")
    return graph
