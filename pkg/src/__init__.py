"""AT-Lab: exact Alon-Tarsi and list-colouring toolkit for Cartesian products"""

__version__ = "1.0.0"
