"""Enums for the invariant solvers"""

from enum import Enum


class Phase(str, Enum):
    """Player to move in the paint game"""
    MARKER = "marker"
    REMOVER = "remover"


class InvariantMethod(str, Enum):
    """How an invariant value was obtained"""
    BRANCH_AND_BOUND = "branch_and_bound"
    DEGENERACY = "degeneracy"
    ENUMERATION = "enumeration"
    SQUEEZE = "squeeze"
    SMALL_GRAPH = "small_graph"
    GAME_SOLVER = "game_solver"
    COEFFICIENTS = "coefficients"
    CHARACTERIZATION = "characterization"


class InvariantStatus(str, Enum):
    COMPUTED = "computed"
    SKIPPED = "skipped"
