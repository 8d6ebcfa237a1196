"""Enums for orientation constructions"""

from enum import Enum


class BlockKind(str, Enum):
    """Shape of a partition block G[S_i]"""
    ODD_CYCLE = "odd_cycle"
    COMPLETE = "complete"
    INDUCED_CYCLE = "induced_cycle"
