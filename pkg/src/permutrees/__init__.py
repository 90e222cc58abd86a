"""Permutrees: insertion, congruences, lattices, polytopes, Hopf algebras and Schröder faces."""

__version__ = "0.1.0"

from .core import (
    Decoration,
    EdgeCut,
    Letter,
    Permutree,
    as_decoration,
    boundary_normalize,
    parse_decoration,
    symmetree,
    tree_from_cuts,
    tree_from_edges,
    validate,
)
from .correspond import congruent, insert, linear_extensions, p_symbol, rewriting_class
from .enumeration import count, enumerate_permutrees, f_vector, h_vector, schroder_count
from .errors import PermutreeError, SizeBound
from .geometry import polytope, vertex
from .lattice import class_max, class_min, lattice_join, lattice_meet, refine_project, rotate, rotation_graph, tree_leq

__all__ = [name for name in dir() if not name.startswith("_")]
