"""Best-effort search for a k-list assignment with no proper coloring"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from src.config import Config
from src.errors import PreconditionError
from src.graphs.models import Graph
from src.invariants.coloring import check_list_colorable, count_list_colorings
from src.invariants.models import ListAssignment

logger = logging.getLogger(__name__)

STEPS_PER_RESTART = 200
COUNT_CAP = 256


def _initial(G: Graph, k: int, rng: random.Random, restart: int) -> List[set]:
    if restart == 0:
        return [set(range(1, k + 1)) for _ in range(G.vertex_count)]
    palette = list(range(1, rng.randint(k + 1, 2 * k + 1) + 1))
    return [set(rng.sample(palette, k)) for _ in range(G.vertex_count)]


def _restart(G: Graph, k: int, steps: int, seed: int, restart: int) -> Optional[ListAssignment]:
    """Hill-climb on the (capped) number of L-colorings from one start"""
    rng = random.Random(seed * 1_000_003 + restart)
    lists = _initial(G, k, rng, restart)
    palette_size = max(max(colors) for colors in lists) + 1
    score = count_list_colorings(G, ListAssignment.from_lists(lists), COUNT_CAP)

    for _ in range(steps):
        if score == 0:
            break
        v = rng.randrange(G.vertex_count)
        old = rng.choice(sorted(lists[v]))
        options = [c for c in range(1, palette_size + 1) if c not in lists[v]]
        new = rng.choice(options)
        lists[v].remove(old)
        lists[v].add(new)
        candidate = count_list_colorings(G, ListAssignment.from_lists(lists), COUNT_CAP)
        if candidate <= score:
            score = candidate
            palette_size = max(palette_size, new + 1)
        else:
            lists[v].remove(new)
            lists[v].add(old)

    if score != 0:
        return None
    assignment = ListAssignment.from_lists(lists)
    return assignment if check_list_colorable(G, assignment) is None else None


def find_bad_assignment(G: Graph, k: int, budget: int, seed: Optional[int] = None,
                        threads: Optional[int] = None) -> Optional[ListAssignment]:
    """
    Random restarts with local moves looking for an uncolorable k-assignment.

    budget counts local moves over all restarts. Restart 0 starts from
    identical lists; restart i is seeded from (seed, i) alone, so results do
    not depend on thread count. Any witness is verified by exact
    backtracking; None means the search was inconclusive.
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    if budget < 1:
        raise PreconditionError(f"budget must be positive, got {budget}")
    if G.vertex_count == 0:
        return None
    seed = Config.DEFAULT_SEED if seed is None else seed
    threads = threads or Config.THREADS

    restarts = max(1, -(-budget // STEPS_PER_RESTART))
    steps = [min(STEPS_PER_RESTART, budget - i * STEPS_PER_RESTART) for i in range(restarts)]

    if threads <= 1:
        for i in range(restarts):
            witness = _restart(G, k, steps[i], seed, i)
            if witness is not None:
                logger.info(f"Bad {k}-assignment found in restart {i}")
                return witness
        logger.info(f"No bad {k}-assignment within budget {budget}")
        return None

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda i: _restart(G, k, steps[i], seed, i), range(restarts)))
    for i, witness in enumerate(results):
        if witness is not None:
            logger.info(f"Bad {k}-assignment found in restart {i}")
            return witness
    logger.info(f"No bad {k}-assignment within budget {budget}")
    return None
