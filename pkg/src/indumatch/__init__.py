"""Recognition of well-indumatched graphs.

A graph is well-indumatched when all of its maximal induced matchings have the
same size.  The package provides an exhaustive oracle, a linear-time recognizer
for trees, a fixed-k recognizer, a recognizer for the minimal such graphs of
girth at least 9, and generators for known families.
"""

from .families import FamilySpec
from .girth import is_minimal_wim_girth9, search_girth11, search_unicyclic
from .graph import Graph, GraphError, ParseError, ValidationError, format_graph, parse_graph, reduce
from .kwim import classify_k, is_k_wim
from .oracle import (
    BudgetExceeded,
    Certificate,
    enumerate_maximal_induced,
    is_maximal_induced,
    mim,
    mmim,
    oracle_is_wim,
)
from .trees import is_wim_tree

__all__ = [
    "BudgetExceeded", "Certificate", "FamilySpec", "Graph", "GraphError", "ParseError",
    "ValidationError", "classify_k", "enumerate_maximal_induced", "format_graph",
    "is_k_wim", "is_maximal_induced", "is_minimal_wim_girth9", "is_wim_tree", "mim", "mmim",
    "oracle_is_wim", "parse_graph", "reduce", "search_girth11", "search_unicyclic",
]
