"""Explicit landmark constructions and closed-form values for line graphs."""

from src.constructions.in_edge_deletion import in_edge_deletion_set, theorem1_resolving_set
from src.constructions.line_bounds import line_bounds, spanning_tree_resolving_set
from src.constructions.trees import tree_line_metric_dimension, tree_metric_dimension

__all__ = [
    "in_edge_deletion_set",
    "line_bounds",
    "spanning_tree_resolving_set",
    "theorem1_resolving_set",
    "tree_line_metric_dimension",
    "tree_metric_dimension",
]
