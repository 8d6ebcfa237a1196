"""Alon-Tarsi witness check for a single orientation"""

import logging

from src.circulations.coefficient import census_dp
from src.circulations.enumerator import census_enumerate
from src.config import Config
from src.errors import ResourceLimitError
from src.orientations.models import Orientation

logger = logging.getLogger(__name__)


def at_witness_check(D: Orientation) -> bool:
    """
    True iff the even and odd circulation counts of D differ.

    Uses the frontier DP; if its state budget runs out on a digraph small
    enough to enumerate, the enumerator decides instead.
    """
    try:
        return census_dp(D) != 0
    except ResourceLimitError:
        if D.arc_count > Config.ENUMERATION_ARC_LIMIT:
            raise
        logger.debug(f"Frontier DP over budget on {D!r}, enumerating instead")
        return census_enumerate(D).diff != 0
