"""Named verification suites for the product orientation constructions"""

import inspect
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from src.circulations.coefficient import census_dp
from src.circulations.enumerator import census_enumerate
from src.circulations.witness import at_witness_check
from src.config import Config
from src.errors import AtLabError, PreconditionError, ResourceLimitError
from src.graphs.builder import (
    build_family,
    cartesian_product,
    edit_edges,
    graph_power,
    join,
    partial_join_with_universal,
    product_index,
)
from src.graphs.enums import GraphFamily
from src.graphs.models import Graph
from src.graphs.structure import back_degree, find_hamilton_path, max_degree
from src.invariants.alon_tarsi import alon_tarsi_number, orientation_with_bounded_indegree
from src.invariants.bounds import bound_borowiecki, bound_delta_sum, bound_list_brooks
from src.invariants.choosability import two_choosable_by_characterization
from src.invariants.coloring import check_list_colorable, chromatic_number, coloring_number
from src.invariants.models import ListAssignment
from src.orientations.constructions import (
    orient_blocks_acyclic,
    orient_thm21,
    orient_thm24,
    orient_thm25,
    orient_thm26,
    partition_parameters,
    thm26_indegree_bound,
)
from src.orientations.digraph import degree_profile, is_acyclic, orient_by_order, orients, sub_orientation
from src.orientations.models import Orientation
from src.verification.level_sequences import d_table
from src.verification.models import CaseResult, CaseStatus, SuiteResult
from src.verification.proof_artifacts import bijection_check

logger = logging.getLogger(__name__)

CaseCheck = Callable[[Dict[str, Any]], Tuple[bool, Dict[str, Any]]]


def _cycle(n: int) -> Graph:
    return build_family(GraphFamily.CYCLE, n)


def _path(n: int) -> Graph:
    return build_family(GraphFamily.PATH, n)


def _complete(n: int) -> Graph:
    return build_family(GraphFamily.COMPLETE, n)


def _two_triangles() -> Graph:
    # Every vertex of the second triangle sees two of the first
    return join(_complete(3), _complete(3), [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)])


def _h5() -> Graph:
    """K_5 minus the edges of a path on four vertices"""
    return edit_edges(_complete(5), delete=[(0, 1), (1, 2), (2, 3)])


def _run_case(suite: str, params: Dict[str, Any], check: CaseCheck) -> CaseResult:
    try:
        passed, values = check(params)
    except ResourceLimitError as e:
        logger.info(f"{suite} {params}: skipped ({e.limit_name})")
        return CaseResult(params, CaseStatus.SKIP, {"reason": str(e)})
    except AtLabError as e:
        logger.error(f"{suite} {params}: {e}")
        return CaseResult(params, CaseStatus.FAIL, {"error": str(e)})

    status = CaseStatus.PASS if passed else CaseStatus.FAIL
    log = logger.info if passed else logger.error
    log(f"{suite} {params}: {status.value}")
    return CaseResult(params, status, values)


def _run_cases(suite: str, cases: Sequence[Dict[str, Any]], check: CaseCheck) -> SuiteResult:
    """Run every case, in parallel up to Config.THREADS; results keep case order"""
    start = time.perf_counter()
    threads = max(1, min(Config.THREADS, len(cases)))
    results: List[Optional[CaseResult]] = [None] * len(cases)
    if threads == 1:
        results = [_run_case(suite, params, check) for params in cases]
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            future_to_index = {
                executor.submit(_run_case, suite, params, check): i
                for i, params in enumerate(cases)
            }
            for future in as_completed(future_to_index):
                results[future_to_index[future]] = future.result()

    result = SuiteResult(suite, list(results), int((time.perf_counter() - start) * 1000))
    logger.info(
        f"Suite {suite}: {len(result.cases) - len(result.failures) - len(result.skipped)} pass, "
        f"{len(result.failures)} fail, {len(result.skipped)} skip in {result.runtime_ms} ms"
    )
    return result


def _census_values(D: Orientation) -> Dict[str, Any]:
    """Census of D by enumeration when small enough, else its signed difference by DP"""
    if D.arc_count <= Config.ENUMERATION_ARC_LIMIT:
        census = census_enumerate(D)
        return {
            "census_method": "enumeration",
            "even": census.even_count,
            "odd": census.odd_count,
            "diff": census.diff,
            "parity": "odd" if census.total % 2 else "even",
        }
    diff = census_dp(D)
    # even - odd and even + odd share parity
    return {"census_method": "dp", "diff": diff, "parity": "odd" if diff % 2 else "even"}


def _comparison_bounds(G: Graph, H: Graph, at_upper: int) -> Dict[str, Any]:
    """Known list-coloring bounds for G□H next to the AT upper bound"""
    values: Dict[str, Any] = {"at_upper": at_upper, "bound_delta_sum": bound_delta_sum(G, H)}
    try:
        values["bound_borowiecki"] = bound_borowiecki(G, H)
    except ResourceLimitError as e:
        logger.debug(f"Borowiecki bound skipped: {e}")
        values["bound_borowiecki"] = None
    values["bound_list_brooks"] = bound_list_brooks(cartesian_product(G, H))
    known = [v for key, v in values.items() if key.startswith("bound_") and v is not None]
    values["improves"] = at_upper < min(known)
    return values


def _grid(k_max: int, n_values: Sequence[int]) -> List[Dict[str, Any]]:
    if k_max < 1:
        raise PreconditionError(f"k_max must be >= 1, got {k_max}")
    return [{"k": k, "n": n} for k in range(1, k_max + 1) for n in n_values]


# Odd cycle times path

def _thm21_case(params: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    k, n = params["k"], params["n"]
    cycle = _cycle(2 * k + 1)
    if n == 1:
        D = orient_by_order(cycle, range(cycle.vertex_count))
        chi = chromatic_number(cycle)
    else:
        _, D = orient_thm21(k, n)
        chi = chromatic_number(cartesian_product(cycle, _path(n)))

    profile = degree_profile(D)
    values = {"arcs": D.arc_count, "max_indegree": profile.max_indegree, "chi": chi}
    values.update(_census_values(D))
    passed = profile.max_indegree == 2 and values["diff"] != 0 and values["parity"] == "odd" and chi == 3
    values["at"] = 3 if passed else None
    return passed, values


def suite_thm21(k_max: int = 2, n_max: int = 3) -> SuiteResult:
    """AT(C_{2k+1}□P_n) = 3: indegree-2 witness with odd census, chi = 3 from below"""
    return _run_cases("thm21", _grid(k_max, range(1, n_max + 1)), _thm21_case)


def _cor22_case(params: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    k, n = params["k"], params["n"]
    even = _cycle(2 * k + 2)
    G = even if n == 1 else cartesian_product(even, _path(n))
    two_choosable = two_choosable_by_characterization(G)
    values: Dict[str, Any] = {"two_choosable": two_choosable, "chi": chromatic_number(G)}

    if n == 1:
        values["chi_list"] = 2 if two_choosable else None
        return two_choosable and values["chi"] == 2, values

    values["bound_borowiecki"] = bound_borowiecki(even, _path(n), chi_list_g=2, chi_list_h=2)
    witness = orientation_with_bounded_indegree(G, 2)
    at_ok = witness is not None and at_witness_check(witness)
    values["at"] = 3 if at_ok else None
    values["chi_list"] = 3 if not two_choosable and (at_ok or values["bound_borowiecki"] == 3) else None
    return not two_choosable and values["bound_borowiecki"] == 3 and at_ok, values


def suite_cor22(k_max: int = 2, n_max: int = 3) -> SuiteResult:
    """chi_l(C_{2k+2}□P_n) is 2 for n = 1 and 3 otherwise"""
    return _run_cases("cor22", _grid(k_max, range(1, n_max + 1)), _cor22_case)


# Hamilton-path second factor

THM24_CASES: Dict[str, Callable[[], Tuple[Graph, Graph, Optional[Tuple[int, ...]]]]] = {
    "K3xP2": lambda: (_complete(3), _path(2), None),
    "K4xP3": lambda: (_complete(4), _path(3), None),
    "C5xP2": lambda: (_cycle(5), _path(2), None),
    "C5xC4": lambda: (_cycle(5), _cycle(4), None),
    "K4xP4^2": lambda: (_complete(4), graph_power(_path(4), 2), None),
    "C5+pendant xP2": lambda: (join(_cycle(5), _complete(1), [(0, 0)]), _path(2), (0, 1, 2, 3, 4)),
}


def _named_cases(table: Dict[str, Any], cases: Optional[Sequence[str]]) -> List[Dict[str, Any]]:
    if isinstance(cases, str):
        cases = [cases]
    names = list(table) if cases is None else list(cases)
    unknown = [name for name in names if name not in table]
    if unknown:
        raise PreconditionError(f"unknown cases {unknown}; choose from {list(table)}")
    return [{"case": name} for name in names]


def _thm24_case(params: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    G, H, cycle = THM24_CASES[params["case"]]()
    ham_path = find_hamilton_path(H)
    k = back_degree(H, ham_path)
    D = orient_thm24(G, H, ham_path, cycle)
    bound = max_degree(G) - 1 + k
    profile = degree_profile(D)
    witness = at_witness_check(D)
    covers = orients(D, cartesian_product(G, H), [D.annotations.special_arc])

    values = {"k": k, "max_indegree": profile.max_indegree, "indegree_bound": bound, "witness": witness}
    values.update(_comparison_bounds(G, H, bound + 1))
    return profile.max_indegree <= bound and witness and covers, values


def suite_thm24(cases: Optional[Sequence[str]] = None) -> SuiteResult:
    """AT(G□H) <= Delta(G) + k for complete or odd-cycle G and back-degree-k Hamilton paths"""
    return _run_cases("thm24", _named_cases(THM24_CASES, cases), _thm24_case)


# Partitions into odd cycles (and cliques)

THM25_CASES: Dict[str, Callable[[], Tuple[Graph, List[List[int]], int]]] = {
    "C5 k=1": lambda: (_cycle(5), [[0, 1, 2, 3, 4]], 1),
    "C5 k=2": lambda: (_cycle(5), [[0, 1, 2, 3, 4]], 2),
    "C5 k=3": lambda: (_cycle(5), [[0, 1, 2, 3, 4]], 3),
    "2C3 k=1": lambda: (_two_triangles(), [[0, 1, 2], [3, 4, 5]], 1),
    "2C3 k=2": lambda: (_two_triangles(), [[0, 1, 2], [3, 4, 5]], 2),
    "C3+C5 k=1": lambda: (partial_join_with_universal(_cycle(3), _cycle(5), [0]), [[0, 1, 2], [3, 4, 5, 6, 7]], 1),
    "C3+C5 k=2": lambda: (partial_join_with_universal(_cycle(3), _cycle(5), [0]), [[0, 1, 2], [3, 4, 5, 6, 7]], 2),
}


def _census_total_parity(D: Orientation) -> Tuple[Optional[int], int]:
    # (total if enumerated, parity of total)
    if D.arc_count <= Config.ENUMERATION_ARC_LIMIT:
        census = census_enumerate(D)
        return census.total, census.total % 2
    return None, census_dp(D) % 2


def _thm25_case(params: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    G, partition, k = THM25_CASES[params["case"]]()
    rho = max(p.rho for p in partition_parameters(G, partition))
    D = orient_thm25(G, partition, k)
    profile = degree_profile(D)
    values: Dict[str, Any] = {"rho": rho, "max_indegree": profile.max_indegree, "indegree_bound": 2 + rho}
    bounded = profile.max_indegree <= 2 + rho

    if k == 1:
        census = census_enumerate(D)
        values.update({"acyclic": is_acyclic(D), "even": census.even_count, "odd": census.odd_count})
        return bounded and values["acyclic"] and (census.even_count, census.odd_count) == (1, 0), values

    block_totals = []
    for block in D.annotations.blocks:
        total, parity = _census_total_parity(sub_orientation(D, sorted(block)))
        if parity != 1:
            return False, {**values, "block_totals": block_totals, "odd_blocks": False}
        block_totals.append(total)
    total, parity = _census_total_parity(D)
    product = None
    if total is not None and None not in block_totals:
        product = 1
        for block_total in block_totals:
            product *= block_total
    values.update({"block_totals": block_totals, "total": total, "parity": "odd" if parity else "even"})
    product_ok = product is None or product == total
    return bounded and parity == 1 and product_ok and at_witness_check(D), values


def suite_thm25(cases: Optional[Sequence[str]] = None) -> SuiteResult:
    """AT(G□P_k) <= 3 + rho for a partition of G into odd cycles"""
    return _run_cases("thm25", _named_cases(THM25_CASES, cases), _thm25_case)


THM26_CASES: Dict[str, Callable[[], Tuple[Graph, List[List[int]], Graph]]] = {
    "K3+C5xP2": lambda: (join(_complete(3), _cycle(5)), [[0, 1, 2], [3, 4, 5, 6, 7]], _path(2)),
    "K4+C3xP2": lambda: (join(_complete(4), _cycle(3)), [[0, 1, 2, 3], [4, 5, 6]], _path(2)),
    "C5xP3": lambda: (_cycle(5), [[0, 1, 2, 3, 4]], _path(3)),
    "2C3xP3": lambda: (_two_triangles(), [[0, 1, 2], [3, 4, 5]], _path(3)),
}


def _thm26_case(params: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    G, partition, H = THM26_CASES[params["case"]]()
    ham_path = find_hamilton_path(H)
    alpha = max(p.alpha for p in partition_parameters(G, partition))
    bound = thm26_indegree_bound(G, partition, H, ham_path)
    D = orient_thm26(G, partition, H, ham_path)
    profile = degree_profile(D)

    acyclic = orient_blocks_acyclic(G, partition)
    acyclic_ok = is_acyclic(acyclic) and degree_profile(acyclic).max_indegree <= alpha - 1
    blocks_ok = all(at_witness_check(sub_orientation(D, sorted(block))) for block in D.annotations.blocks)
    witness = at_witness_check(D)

    values = {
        "alpha": alpha,
        "max_indegree": profile.max_indegree,
        "indegree_bound": bound,
        "blocks_witness": blocks_ok,
        "acyclic_half": acyclic_ok,
        "witness": witness,
    }
    values.update(_comparison_bounds(G, H, bound + 1))
    return profile.max_indegree <= bound and blocks_ok and acyclic_ok and witness, values


def suite_thm26(cases: Optional[Sequence[str]] = None) -> SuiteResult:
    """AT(G□H) <= alpha + k - 1 for a partition into odd cycles and cliques"""
    return _run_cases("thm26", _named_cases(THM26_CASES, cases), _thm26_case)


# Corollaries and examples

def _cor31_case(params: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    k, r, n = params["k"], params["r"], params["n"]
    G = _cycle(2 * k + 1)
    H = graph_power(_path(n), r)
    ham_path = tuple(range(n))
    back = back_degree(H, ham_path)
    D = orient_thm24(G, H, ham_path)
    profile = degree_profile(D)
    lower = chromatic_number(cartesian_product(G, H))
    expected_lower = max(3, min(r + 1, n))
    witness = at_witness_check(D)

    values = {
        "lower": lower,
        "lower_method": "chromatic_number",
        "max_indegree": profile.max_indegree,
        "witness": witness,
    }
    values.update(_comparison_bounds(G, H, 2 + back))
    return lower == expected_lower and profile.max_indegree <= 1 + back and witness, values


def suite_cor31(k: int = 1, r_max: int = 3, n_max: int = 5) -> SuiteResult:
    """max{r+1, 3} <= AT(C_{2k+1}□P_n^r) <= r + 2"""
    if r_max < 2 or n_max < 3:
        raise PreconditionError("cor31 needs r_max >= 2 and n_max >= 3")
    cases = [{"k": k, "r": r, "n": n} for r in range(2, r_max + 1) for n in range(3, n_max + 1)]
    return _run_cases("cor31", cases, _cor31_case)


def _embeds(G: Graph, host: Graph, mapping: Sequence[int]) -> bool:
    return all(host.has_edge(mapping[u], mapping[v]) for u, v in G.edges)


def _cor32_case(params: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    m, k, n = params["m"], params["k"], params["n"]
    cycle = _cycle(2 * k + 1)
    G = join(_complete(m), cycle)
    target = m + 3

    if n == 1:
        chi, col = chromatic_number(G), coloring_number(G)
        return chi == target and col == target, {"chi": chi, "col": col, "at": target if chi == col else None}

    P = _path(n)
    chi = chromatic_number(cartesian_product(G, P))
    if m <= 2:
        host = partial_join_with_universal(_cycle(3), cycle, range(m))
        mapping = list(range(m)) + [3 + j for j in range(cycle.vertex_count)]
        partition = [[0, 1, 2], list(range(3, host.vertex_count))]
        D = orient_thm25(host, partition, n)
        bound = 2 + max(p.rho for p in partition_parameters(host, partition))
        values = {"construction": "partial_join", "subgraph": _embeds(G, host, mapping)}
    else:
        partition = [list(range(m)), list(range(m, G.vertex_count))]
        D = orient_thm26(G, partition, P, tuple(range(n)))
        bound = thm26_indegree_bound(G, partition, P, tuple(range(n)))
        values = {"construction": "mixed_partition", "subgraph": True}

    profile = degree_profile(D)
    witness = at_witness_check(D)
    values.update({"chi": chi, "max_indegree": profile.max_indegree, "indegree_bound": bound, "witness": witness})
    values.update(_comparison_bounds(G, P, bound + 1))
    passed = chi == target and bound == target - 1 and profile.max_indegree <= bound and witness \
        and values["subgraph"]
    values["at"] = target if passed else None
    return passed, values


def suite_cor32(m_max: int = 3, k: int = 1, n_max: int = 2) -> SuiteResult:
    """AT((K_m ∨ C_{2k+1})□P_n) = m + 3"""
    if m_max < 1:
        raise PreconditionError(f"m_max must be >= 1, got {m_max}")
    cases = [{"m": m, "k": k, "n": n} for m in range(1, m_max + 1) for n in range(1, n_max + 1)]
    return _run_cases("cor32", cases, _cor32_case)


def _sec3_case(params: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    if params["case"] == "C3xH5":
        G, H = _cycle(3), _h5()
        ham_path = find_hamilton_path(H)
        D = orient_thm24(G, H, ham_path)
        upper = max_degree(G) + back_degree(H, ham_path)
        lower = chromatic_number(cartesian_product(G, H))
        max_indegree = degree_profile(D).max_indegree
        witness = at_witness_check(D)
        values = {"lower": lower, "upper": upper, "max_indegree": max_indegree, "witness": witness,
                  "ham_path": [w + 1 for w in ham_path]}
        return lower >= 3 and upper <= 4 and max_indegree <= upper - 1 and witness, values

    n, m = params["n"], params["m"]
    G = cartesian_product(_complete(n), _path(m))
    if m == 2:
        result = alon_tarsi_number(G)
        return result.value == n, {"at": result.value, "method": "coefficients"}

    D = orient_thm24(_complete(n), _path(m), tuple(range(m)))
    chi = chromatic_number(G)
    profile = degree_profile(D)
    witness = at_witness_check(D)
    passed = chi == n and profile.max_indegree <= n - 1 and witness
    return passed, {"at": n if passed else None, "method": "witness", "chi": chi,
                    "max_indegree": profile.max_indegree}


def suite_sec3_facts() -> SuiteResult:
    """AT(K_n□P_m) = n for small n, m and the bracket 3 <= AT(C_3□H_5) <= 4"""
    cases: List[Dict[str, Any]] = [{"case": "KxP", "n": n, "m": m} for n in (3, 4) for m in (2, 3)]
    cases.append({"case": "C3xH5"})
    return _run_cases("sec3_facts", cases, _sec3_case)


def _remark_case(params: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    k, n, trials, seed = params["k"], params["n"], params["trials"], params["seed"]
    size = 2 * k + 1
    G = cartesian_product(_cycle(size), _path(n))
    _, dstar = orient_thm21(k, n)
    # (v_1, w_1) keeps three colors; the rest of the first base cycle gets two
    two_color = {product_index(i, 0, n) for i in range(1, size)}
    sizes = [2 if v in two_color else 3 for v in range(G.vertex_count)]
    indegrees = degree_profile(dstar).indegrees
    degrees_fit = all(indegrees[v] + 1 <= sizes[v] for v in range(G.vertex_count))

    rng = random.Random(f"{seed}:{k}:{n}")
    failures = 0
    for _ in range(trials):
        palette = list(range(1, rng.randint(3, 6) + 1))
        lists = [rng.sample(palette, s) for s in sizes]
        if check_list_colorable(G, ListAssignment.from_lists(lists)) is None:
            failures += 1
    values = {"trials": trials, "failures": failures, "degrees_fit": degrees_fit}
    return failures == 0 and degrees_fit, values


def suite_remark(k_max: int = 1, n_max: int = 3, trials: int = 200, seed: Optional[int] = None) -> SuiteResult:
    """Random 2/3 list assignments following the first base cycle are always colorable"""
    if trials < 1:
        raise PreconditionError(f"trials must be >= 1, got {trials}")
    seed = Config.DEFAULT_SEED if seed is None else seed
    cases = [{**case, "trials": trials, "seed": seed} for case in _grid(k_max, range(2, n_max + 1))]
    return _run_cases("remark", cases, _remark_case)


def _bijection_case(params: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    case = bijection_check(params["k"], params["n"]).cases[0]
    return case.status == CaseStatus.PASS, case.values


def suite_bijection(k_max: int = 2, n_max: int = 3) -> SuiteResult:
    """Involution on A and the bijection R -> B for every enumerable (k, n)"""
    return _run_cases("bijection", _grid(k_max, range(2, n_max + 1)), _bijection_case)


def _d_table_case(params: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    k, n_max = params["k"], params["n_max"]
    table = d_table(k, n_max)
    columns = range(2, n_max + 1)
    parity_ok = all(
        table.d(0, n) % 2 == 0 and all(table.d(r, n) % 2 == 1 for r in range(1, 2 * k + 1))
        for n in columns
    )
    r_odd = all(table.r_count(n) % 2 == 1 for n in columns)
    return parity_ok and r_odd, {"parity": parity_ok, "r_odd": r_odd, "r_counts": [table.r_count(n) for n in columns]}


def suite_d_table(k_max: int = 4, n_max: int = 12) -> SuiteResult:
    """d[0][n] even, d[r][n] odd for r >= 1, and |R| odd"""
    if n_max < 2:
        raise PreconditionError(f"n_max must be >= 2, got {n_max}")
    return _run_cases("d_table", [{"k": k, "n_max": n_max} for k in range(1, k_max + 1)], _d_table_case)


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "thm21": suite_thm21,
    "cor22": suite_cor22,
    "thm24": suite_thm24,
    "thm25": suite_thm25,
    "thm26": suite_thm26,
    "cor31": suite_cor31,
    "cor32": suite_cor32,
    "sec3_facts": suite_sec3_facts,
    "remark": suite_remark,
    "bijection": suite_bijection,
    "d_table": suite_d_table,
}


def run_suite(name: str, params: Optional[Dict[str, Any]] = None) -> SuiteResult:
    """
    Run a named suite with keyword parameters.

    Raises:
        PreconditionError: unknown suite or parameter
    """
    if name not in SUITES:
        raise PreconditionError(f"unknown suite '{name}'; choose from {', '.join(SUITES)}")
    suite = SUITES[name]
    params = dict(params or {})
    accepted = inspect.signature(suite).parameters
    unknown = sorted(set(params) - set(accepted))
    if unknown:
        raise PreconditionError(f"suite '{name}' does not take {', '.join(unknown)}; accepts {', '.join(accepted) or 'nothing'}")
    logger.info(f"Running suite {name} with {params or 'defaults'}")
    return suite(**params)
