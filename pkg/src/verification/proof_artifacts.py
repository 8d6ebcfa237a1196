"""Checks of the counting argument behind the cycle-path orientation"""

import logging
import time
from collections import Counter
from typing import Dict, FrozenSet, List, Sequence

from src.circulations.enumerator import iter_circulations
from src.errors import PreconditionError
from src.graphs.builder import product_index
from src.orientations.constructions import orient_thm21
from src.orientations.models import Arc, Orientation
from src.verification.level_sequences import enumerate_level_subsequences
from src.verification.models import CaseResult, CaseStatus, CirculationPartition, LevelSubsequence, SuiteResult

logger = logging.getLogger(__name__)


def _swap(circulation: FrozenSet[Arc], base_cycles: Sequence[FrozenSet[Arc]]) -> FrozenSet[Arc]:
    # Toggle every base cycle that is fully present or fully absent
    result = set(circulation)
    for cycle in base_cycles:
        if cycle <= circulation:
            result -= cycle
        elif not cycle & circulation:
            result |= cycle
    return frozenset(result)


def _is_single_cycle_through(circulation: FrozenSet[Arc], arc: Arc) -> bool:
    if arc not in circulation:
        return False
    successor: Dict[int, int] = {}
    for tail, head in circulation:
        if tail in successor:
            return False
        successor[tail] = head
    length = 0
    v = arc[1]
    while True:
        length += 1
        if v not in successor or length > len(circulation):
            return False
        v = successor[v]
        if v == arc[1]:
            return length == len(circulation)


def partition_circulations(Dstar: Orientation) -> CirculationPartition:
    """
    Split the circulations of an augmented orientation into A and B.

    A holds the circulations containing all arcs of some base cycle or none
    of some base cycle; B holds the rest. Also checks that the base-cycle
    swap is a fixed-point-free involution of A and that every member of B
    is one directed cycle through the extra arc.

    Raises:
        PreconditionError: Dstar lacks base cycles or the extra arc
        ResourceLimitError: Dstar is too large to enumerate
    """
    annotations = Dstar.annotations
    if annotations is None or not annotations.base_cycles or annotations.special_arc is None:
        raise PreconditionError("orientation must carry base cycles and a special arc")
    base_cycles = annotations.base_cycles
    special = annotations.special_arc

    a: List[FrozenSet[Arc]] = []
    b: List[FrozenSet[Arc]] = []
    for circulation in iter_circulations(Dstar):
        if any(cycle <= circulation or not cycle & circulation for cycle in base_cycles):
            a.append(circulation)
        else:
            b.append(circulation)

    a_set = set(a)
    involution_ok = True
    for circulation in a:
        image = _swap(circulation, base_cycles)
        if image == circulation or image not in a_set or _swap(image, base_cycles) != circulation:
            logger.error(f"Swap map fails on circulation {sorted(circulation)}")
            involution_ok = False
            break

    single_ok = all(_is_single_cycle_through(c, special) for c in b)
    meets_ok = all(cycle & c and not cycle <= c for c in b for cycle in base_cycles)
    logger.debug(f"Circulation partition: |A|={len(a)}, |B|={len(b)}")
    return CirculationPartition(tuple(a), tuple(b), involution_ok, single_ok, meets_ok)


def _walk(start: int, end: int, layer: int, size: int, n: int) -> List[Arc]:
    arcs = []
    v = start
    while v != end:
        w = (v + 1) % size
        arcs.append((product_index(v, layer, n), product_index(w, layer, n)))
        v = w
    return arcs


def cycle_of_sequence(sequence: LevelSubsequence, k: int, n: int) -> FrozenSet[Arc]:
    """
    The B-cycle a level subsequence maps to.

    Starts at (v_1, w_1), follows each layer's base cycle up to the next
    level edge, climbs it, finishes at (v_2, w_n) and closes through e*.
    """
    size = 2 * k + 1
    arcs: List[Arc] = []
    current = 0
    for layer, index in enumerate(sequence):
        residue = index % size
        arcs.extend(_walk(current, residue, layer, size, n))
        arcs.append((product_index(residue, layer, n), product_index(residue, layer + 1, n)))
        current = residue
    arcs.extend(_walk(current, 1, n - 1, size, n))
    arcs.append((product_index(1, n - 1, n), product_index(0, 0, n)))
    return frozenset(arcs)


def bijection_check(k: int, n: int) -> SuiteResult:
    """
    Map R onto B explicitly and confirm the map is a bijection.

    The case also records |A|, its evenness and the involution and
    single-cycle checks of partition_circulations.
    """
    start = time.perf_counter()
    _, dstar = orient_thm21(k, n)
    partition = partition_circulations(dstar)
    sequences = enumerate_level_subsequences(k, n)

    images = [cycle_of_sequence(seq, k, n) for seq in sequences.r]
    b_set = set(partition.b)
    duplicates = [cycle for cycle, count in Counter(images).items() if count > 1]
    outside = [cycle for cycle in images if cycle not in b_set]
    bijective = not duplicates and not outside and len(images) == len(b_set)

    values = {
        "a_count": len(partition.a),
        "b_count": len(partition.b),
        "r_count": sequences.r_count,
        "q_count": sequences.q_count,
        "circulations": partition.total,
        "a_even": len(partition.a) % 2 == 0,
        "involution": partition.involution_ok,
        "b_single_cycles": partition.b_single_cycles_ok,
        "b_meets_every_base_cycle": partition.b_meets_every_base_cycle,
        "bijection": bijective,
    }
    passed = bijective and all(
        values[key] for key in ("a_even", "involution", "b_single_cycles", "b_meets_every_base_cycle")
    )
    status = CaseStatus.PASS if passed else CaseStatus.FAIL
    logger.info(f"Bijection k={k}, n={n}: |B|={len(partition.b)}, |R|={sequences.r_count} -> {status.value}")
    return SuiteResult(
        "bijection",
        [CaseResult({"k": k, "n": n}, status, values)],
        int((time.perf_counter() - start) * 1000),
    )
