"""Connectivity and shape predicates used to gate the constructions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.graph.constants import UNREACHABLE
from src.graph.core import DiGraph, Graph
from src.graph.distances import bfs_distances


@dataclass(frozen=True)
class StructuralPredicates:
    """Shape summary of an undirected graph."""

    is_connected: bool
    is_tree: bool
    is_path: bool
    max_degree: int


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    if g.n <= 1:
        return True
    return not bool(np.any(bfs_distances(g, 0) == UNREACHABLE))


def is_strongly_connected(g: DiGraph) -> bool:
    """True iff every ordered pair is joined by a directed path.

    Forward reachability from 0 plus reachability of 0 from every vertex,
    the latter via BFS on the reversed arcs.
    """
    if g.n <= 1:
        return True
    if np.any(bfs_distances(g, 0) == UNREACHABLE):
        return False
    reversed_g = DiGraph.from_edges(
        g.n, [(tail, head) for head, tail in g.edges], allows_loops=g.allows_loops
    )
    return not bool(np.any(bfs_distances(reversed_g, 0) == UNREACHABLE))


def is_directed_cycle(g: DiGraph) -> bool:
    """True iff ``g`` is strongly connected with all in/out-degrees equal to 1."""
    if g.n == 0:
        return False
    if any(d != 1 for d in g.in_degrees()) or any(d != 1 for d in g.out_degrees()):
        return False
    return is_strongly_connected(g)


def structural_predicates(g: Graph) -> StructuralPredicates:
    connected = is_connected(g)
    max_degree = max(g.degrees(), default=0)
    tree = connected and g.m == g.n - 1
    return StructuralPredicates(
        is_connected=connected,
        is_tree=tree,
        is_path=tree and max_degree <= 2,
        max_degree=max_degree,
    )
