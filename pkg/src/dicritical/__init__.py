"""Exhaustive re-verification of the 3-dicritical semi-complete digraphs."""

from .digraph import Digraph, DigraphError, DmatParseError, PatternQuery, canonical_code, contains_pattern
from .dicolour import TwoColouring, has_uv_colouring, is_three_dicritical, is_two_dicolourable

__all__ = [
    "Digraph",
    "DigraphError",
    "DmatParseError",
    "PatternQuery",
    "TwoColouring",
    "canonical_code",
    "contains_pattern",
    "has_uv_colouring",
    "is_three_dicritical",
    "is_two_dicolourable",
]

__version__ = "0.1.0"
