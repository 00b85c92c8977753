"""Colorings of Kneser-type, symplectic and Farey graphs, and of homologous curves on surfaces."""

from .graph import Coloring, Graph
from .solvers import (BudgetExhausted, PropagationFailure, chromatic_number, clique_number,
                      find_isomorphism, is_core, is_proper, max_clique_graph,
                      maximal_independent_sets, propagate_unique_coloring)

__version__ = "0.1.0"

__all__ = [
    "Graph", "Coloring", "BudgetExhausted", "PropagationFailure", "chromatic_number",
    "clique_number", "find_isomorphism", "is_core", "is_proper", "max_clique_graph",
    "maximal_independent_sets", "propagate_unique_coloring",
]
