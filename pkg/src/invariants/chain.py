"""All four chain invariants of one graph, with provenance"""

import logging
import time
from typing import Callable, Iterable, Optional, Tuple

from src.errors import ResourceLimitError
from src.graphs.models import Graph
from src.invariants.alon_tarsi import alon_tarsi_number
from src.invariants.choosability import is_k_choosable, list_chromatic_number
from src.invariants.coloring import chromatic_number, coloring_number
from src.invariants.enums import InvariantMethod, InvariantStatus
from src.invariants.models import InvariantReport, InvariantValue
from src.invariants.paintability import paint_number

logger = logging.getLogger(__name__)

CHAIN = ("chi", "chi_list", "chi_paint", "at")
INVARIANT_NAMES = ("chi", "col", "chi_list", "chi_paint", "at")


def _timed(method: InvariantMethod, compute: Callable[[], Tuple[int, InvariantMethod]]) -> InvariantValue:
    start = time.perf_counter()
    try:
        value, method = compute()
    except ResourceLimitError as e:
        logger.info(f"Skipping {method.value}: {e}")
        return InvariantValue(None, method, InvariantStatus.SKIPPED,
                              int((time.perf_counter() - start) * 1000), note=str(e))
    return InvariantValue(value, method, InvariantStatus.COMPUTED, int((time.perf_counter() - start) * 1000))


def _chi_list(G: Graph, upper: Optional[int]) -> Tuple[int, InvariantMethod]:
    # Enumerate up to col first; the paint/AT bound only rescues over-limit cases
    try:
        return list_chromatic_number(G)
    except ResourceLimitError:
        if upper is None:
            raise
        return list_chromatic_number(G, upper)


def compute_invariants(G: Graph, which: Iterable[str] = INVARIANT_NAMES,
                       choosable_k: Optional[int] = None) -> InvariantReport:
    """
    Compute the requested invariants; resource limits mark an entry skipped.

    chi_list reuses chi_paint and at, when present, as upper bounds.
    """
    which = set(which)
    report = InvariantReport()

    if "chi" in which:
        report.values["chi"] = _timed(InvariantMethod.BRANCH_AND_BOUND,
                                      lambda: (chromatic_number(G), InvariantMethod.BRANCH_AND_BOUND))
    if "col" in which:
        report.values["col"] = _timed(InvariantMethod.DEGENERACY,
                                      lambda: (coloring_number(G), InvariantMethod.DEGENERACY))
    if "chi_paint" in which:
        report.values["chi_paint"] = _timed(InvariantMethod.GAME_SOLVER,
                                            lambda: (paint_number(G), InvariantMethod.GAME_SOLVER))
    if "at" in which:
        report.values["at"] = _timed(InvariantMethod.COEFFICIENTS,
                                     lambda: (alon_tarsi_number(G).value, InvariantMethod.COEFFICIENTS))
    if "chi_list" in which:
        known = [report.value_of(name) for name in ("chi_paint", "at")]
        upper = min((v for v in known if v is not None), default=None)
        report.values["chi_list"] = _timed(InvariantMethod.ENUMERATION, lambda: _chi_list(G, upper))
    if choosable_k is not None:
        report.values[f"choosable_{choosable_k}"] = _timed(
            InvariantMethod.ENUMERATION,
            lambda: (int(is_k_choosable(G, choosable_k).choosable), InvariantMethod.ENUMERATION),
        )
    return report


def chain_check(G: Graph) -> InvariantReport:
    """
    chi <= chi_l <= chi_p <= AT, checked on whichever entries were computed.

    Also flags chromatic-choosable (chi = chi_l) and chromatic-AT (chi = AT).
    """
    report = compute_invariants(G)
    computed = [(name, report.value_of(name)) for name in CHAIN if report.value_of(name) is not None]
    report.chain_holds = all(a[1] <= b[1] for a, b in zip(computed, computed[1:]))
    if not report.chain_holds:
        logger.error(f"Chain violated on {G!r}: {dict(computed)}")

    chi = report.value_of("chi")
    chi_list = report.value_of("chi_list")
    at = report.value_of("at")
    report.chromatic_choosable = chi == chi_list if chi is not None and chi_list is not None else None
    report.chromatic_at = chi == at if chi is not None and at is not None else None
    return report
