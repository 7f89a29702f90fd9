"""Skew left braces on finite soluble groups."""
from .brace import SkewBrace, kernel, make_skew_brace, socle, trivial_brace
from .groups import FiniteGroup, Subgroup, make_group

__all__ = [
    "FiniteGroup",
    "SkewBrace",
    "Subgroup",
    "kernel",
    "make_group",
    "make_skew_brace",
    "socle",
    "trivial_brace",
]
__version__ = "0.1.0"
