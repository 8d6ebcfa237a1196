"""JSON documents for graphs, orientations, censuses and reports"""

import json
import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Union

from src.circulations.models import Census, CoeffMap
from src.errors import PreconditionError
from src.graphs.enums import GraphFamily
from src.graphs.models import Atom, Graph, Pair, VertexLabel
from src.invariants.enums import InvariantMethod, InvariantStatus
from src.invariants.models import InvariantReport, InvariantValue
from src.orientations.models import Annotations, Orientation
from src.verification.models import CaseResult, CaseStatus, SuiteResult

logger = logging.getLogger(__name__)

_ATOM_PATTERN = re.compile(r"^(Theta|Named|P|C|K)(\d+)$")


def label_to_json(label: VertexLabel) -> Union[str, list]:
    """Atoms become "C3"-style strings, pairs two-element lists"""
    if isinstance(label, Pair):
        return [label_to_json(label.left), label_to_json(label.right)]
    return str(label)


def label_from_json(data: Union[str, list]) -> VertexLabel:
    if isinstance(data, list) and len(data) == 2:
        return Pair(label_from_json(data[0]), label_from_json(data[1]))
    match = _ATOM_PATTERN.match(data) if isinstance(data, str) else None
    if match is None:
        raise PreconditionError(f"malformed vertex label {data!r}")
    return Atom(GraphFamily(match.group(1)), int(match.group(2)))


def graph_to_dict(G: Graph) -> Dict[str, Any]:
    return {
        "n": G.vertex_count,
        "labels": [label_to_json(label) for label in G.labels],
        "edges": [list(edge) for edge in G.edge_list],
    }


def graph_from_dict(data: Dict[str, Any]) -> Graph:
    try:
        n = int(data["n"])
        labels = data.get("labels")
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as e:
        raise PreconditionError(f"malformed graph JSON: {e}") from e
    return Graph.from_edges(n, edges, None if labels is None else [label_from_json(x) for x in labels])


def _arcs(arcs) -> List[List[int]]:
    return [list(arc) for arc in sorted(arcs)]


def _arc(data) -> tuple:
    return None if data is None else (int(data[0]), int(data[1]))


def annotations_to_dict(annotations: Annotations) -> Dict[str, Any]:
    return {
        "base_cycles": [_arcs(cycle) for cycle in annotations.base_cycles],
        "special_arc": None if annotations.special_arc is None else list(annotations.special_arc),
        "level_edges": [list(arc) for arc in annotations.level_edges],
        "blocks": [sorted(block) for block in annotations.blocks],
        "block_special_arcs": [list(arc) for arc in annotations.block_special_arcs],
    }


def annotations_from_dict(data: Dict[str, Any]) -> Annotations:
    return Annotations(
        base_cycles=tuple(frozenset(_arc(a) for a in cycle) for cycle in data.get("base_cycles", [])),
        special_arc=_arc(data.get("special_arc")),
        level_edges=tuple(_arc(a) for a in data.get("level_edges", [])),
        blocks=tuple(frozenset(block) for block in data.get("blocks", [])),
        block_special_arcs=tuple(_arc(a) for a in data.get("block_special_arcs", [])),
    )


def orientation_to_dict(D: Orientation) -> Dict[str, Any]:
    data: Dict[str, Any] = {"n": D.vertex_count, "arcs": _arcs(D.arcs)}
    if D.annotations is not None:
        data["annotations"] = annotations_to_dict(D.annotations)
    return data


def orientation_from_dict(data: Dict[str, Any]) -> Orientation:
    try:
        annotations = data.get("annotations")
        return Orientation(
            int(data["n"]),
            frozenset(_arc(a) for a in data["arcs"]),
            None if annotations is None else annotations_from_dict(annotations),
        )
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise PreconditionError(f"malformed orientation JSON: {e}") from e


def census_to_dict(census: Census) -> Dict[str, int]:
    return {"even": census.even_count, "odd": census.odd_count}


def census_from_dict(data: Dict[str, Any]) -> Census:
    return Census(int(data["even"]), int(data["odd"]))


def coeff_map_to_dict(coeffs: CoeffMap) -> Dict[str, Any]:
    """Exponent vectors as arrays, coefficients as decimal strings"""
    return {
        "n": coeffs.vertex_count,
        "m": coeffs.edge_count,
        "cap": coeffs.cap,
        "coefficients": [{"exponents": list(key), "coefficient": str(value)} for key, value in coeffs.items()],
    }


def coeff_map_from_dict(data: Dict[str, Any]) -> CoeffMap:
    coefficients = {tuple(entry["exponents"]): int(entry["coefficient"]) for entry in data["coefficients"]}
    return CoeffMap(int(data["n"]), int(data["m"]), int(data["cap"]), coefficients)


def invariant_report_from_dict(data: Dict[str, Any]) -> InvariantReport:
    values = {
        name: InvariantValue(
            entry["value"],
            InvariantMethod(entry["method"]),
            InvariantStatus(entry["status"]),
            entry.get("runtime_ms", 0),
            entry.get("note"),
        )
        for name, entry in data.get("values", {}).items()
    }
    return InvariantReport(
        values,
        dict(data.get("bounds", {})),
        data.get("chain_holds"),
        data.get("chromatic_choosable"),
        data.get("chromatic_at"),
    )


def suite_result_from_dict(data: Dict[str, Any]) -> SuiteResult:
    cases = [
        CaseResult(dict(case["params"]), CaseStatus(case["status"]), dict(case.get("values", {})))
        for case in data["cases"]
    ]
    return SuiteResult(data["suite"], cases, int(data.get("runtime_ms", 0)))


def to_jsonable(obj: Any) -> Any:
    """Plain JSON structure for any serialisable result type"""
    if isinstance(obj, Graph):
        return graph_to_dict(obj)
    if isinstance(obj, Orientation):
        return orientation_to_dict(obj)
    if isinstance(obj, Census):
        return census_to_dict(obj)
    if isinstance(obj, CoeffMap):
        return coeff_map_to_dict(obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    return obj


def dumps(obj: Any, indent: int = 2) -> str:
    return json.dumps(to_jsonable(obj), indent=indent, sort_keys=True)


def _read(path: Union[str, Path]) -> Dict[str, Any]:
    try:
        with open(path, "r") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise PreconditionError(f"{path} is not valid JSON: {e}") from e
    except OSError as e:
        raise PreconditionError(f"cannot read {path}: {e.strerror or e}") from e


def _write(data: Dict[str, Any], path: Union[str, Path]):
    try:
        with open(path, "w") as f:
            json.dump(data, f, indent=2, sort_keys=True)
    except OSError as e:
        raise PreconditionError(f"cannot write {path}: {e.strerror or e}") from e
    logger.debug(f"Wrote {path}")


def load_graph(path: Union[str, Path]) -> Graph:
    return graph_from_dict(_read(path))


def dump_graph(G: Graph, path: Union[str, Path]):
    _write(graph_to_dict(G), path)


def load_orientation(path: Union[str, Path]) -> Orientation:
    return orientation_from_dict(_read(path))


def dump_orientation(D: Orientation, path: Union[str, Path]):
    _write(orientation_to_dict(D), path)
