"""Level subsequences of the cycle-path orientation and their counting table"""

import itertools
import logging
from typing import List

from src.errors import AtLabError, PreconditionError
from src.verification.models import DTable, LevelSequences, LevelSubsequence

logger = logging.getLogger(__name__)

# Largest |Q| cross-checked against the recursion by direct enumeration
CROSS_CHECK_LIMIT = 4096


def _check(k: int, n: int):
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    if n < 2:
        raise PreconditionError(f"n must be >= 2, got {n}")


def enumerate_level_subsequences(k: int, n: int) -> LevelSequences:
    """
    All level subsequences a_0..a_{n-2} for C_{2k+1} □ P_n.

    a_i is the index of an inter-layer arc leaving layer i, so
    a_i = (2k+1)·i + r_i. Consecutive residues differ and r_0 != 0.
    R drops the sequences ending in (2k+1)(n-2) + 1.
    """
    _check(k, n)
    size = 2 * k + 1
    q: List[LevelSubsequence] = []
    for residues in itertools.product(range(size), repeat=n - 1):
        if residues[0] == 0:
            continue
        if any(a == b for a, b in zip(residues, residues[1:])):
            continue
        q.append(tuple(size * i + r for i, r in enumerate(residues)))

    excluded = size * (n - 2) + 1
    r = tuple(seq for seq in q if seq[-1] != excluded)
    logger.debug(f"Level subsequences k={k}, n={n}: |Q|={len(q)}, |R|={len(r)}")
    return LevelSequences(k, n, tuple(q), r)


def d_table(k: int, n_max: int) -> DTable:
    """
    d[r][n] by the recursion d[r][n] = sum of d[i][n-1] over i != r,
    starting from d[0][2] = 0 and d[r][2] = 1.

    Columns small enough to enumerate are checked against
    enumerate_level_subsequences.
    """
    _check(k, n_max)
    size = 2 * k + 1
    columns = [tuple(0 if r == 0 else 1 for r in range(size))]
    for _ in range(3, n_max + 1):
        previous = columns[-1]
        total = sum(previous)
        columns.append(tuple(total - previous[r] for r in range(size)))

    table = DTable(k, n_max, tuple(tuple(column[r] for column in columns) for r in range(size)))

    for n in range(2, n_max + 1):
        if (2 * k) ** (n - 1) > CROSS_CHECK_LIMIT:
            break
        enumerated = enumerate_level_subsequences(k, n)
        by_residue = [sum(1 for seq in enumerated.q if seq[-1] % size == r) for r in range(size)]
        if tuple(by_residue) != table.column(n) or enumerated.r_count != table.r_count(n):
            raise AtLabError(f"d-table column n={n} disagrees with enumeration for k={k}")
    return table
