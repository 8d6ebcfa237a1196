"""Enums for graph construction"""

from enum import Enum


class GraphFamily(str, Enum):
    """Parameterised graph families with canonical labelling"""
    PATH = "P"
    CYCLE = "C"
    COMPLETE = "K"
    THETA = "Theta"
    NAMED = "Named"
