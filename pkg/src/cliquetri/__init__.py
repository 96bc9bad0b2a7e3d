"""Optimal graph triangulations parameterized by edge clique cover.

Enumeration of minimal separators and potential maximal cliques, the
Bouchitte-Todinca dynamic program over block realizations, subset-convolution
solvers that exploit a given cover, polynomial-space variants, fractional
hypertreewidth, and perfect phylogeny via chordal sandwich.
"""

from .graph import CliqueCover, Graph, greedy_cover, validate_cover
from .separators import (
    Block,
    all_blocks,
    enumerate_minimal_separators,
    full_components,
    is_good_part,
    is_minimal_separator,
    minimal_separators,
    part_components,
)
from .pmc import (
    enumerate_pmcs,
    enumerate_pmcs_dupes,
    enumerate_pmcs_polyspace,
    is_pmc,
    lift_pmc,
    type1_pmcs,
)

__all__ = [
    "Graph", "CliqueCover", "greedy_cover", "validate_cover",
    "Block", "all_blocks", "enumerate_minimal_separators", "full_components",
    "is_good_part", "is_minimal_separator", "minimal_separators",
    "part_components",
    "is_pmc", "lift_pmc", "type1_pmcs", "enumerate_pmcs",
    "enumerate_pmcs_dupes", "enumerate_pmcs_polyspace",
]

__version__ = "0.1.0"
