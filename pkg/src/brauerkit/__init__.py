"""Combinatorics of symmetric special biserial algebras.

SB quivers and Brauer graphs, the bijection between them, mutation and
flip, reduction to double-star form, and exact Cartan/Ext checks.
"""

from .structures import (
    Arrow, BGVertex, BrauerGraph, Cycle, Edge, SBQuiver, StructureError,
    is_multiplex, opposite, validate, validate_graph,
)
from .canonical import canonical_form, isomorphic
from .correspondence import brauer_graph_of, brauer_quiver
from .algebra import cartan_matrix, local_module, oracle_quotient, path_basis
from .mutation import flip_left, flip_right, mutate_left, mutate_right

__all__ = [
    "Arrow", "BGVertex", "BrauerGraph", "Cycle", "Edge", "SBQuiver",
    "StructureError", "is_multiplex", "opposite", "validate", "validate_graph",
    "canonical_form", "isomorphic", "brauer_graph_of", "brauer_quiver",
    "cartan_matrix", "local_module", "oracle_quotient", "path_basis",
    "flip_left", "flip_right", "mutate_left", "mutate_right",
]
