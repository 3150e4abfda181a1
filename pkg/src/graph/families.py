"""Named graph families with deterministic vertex and edge numbering."""

from itertools import combinations

from src.graph.core import DiGraph, Graph
from src.graph.errors import GraphStructureError


def path_graph(n: int) -> Graph:
    """P_n: vertices 0..n-1, edges i-(i+1)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n for n >= 3."""
    if n < 3:
        raise GraphStructureError(f"Cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(m: int, n: int) -> Graph:
    """K_{m,n}: parts 0..m-1 and m..m+n-1."""
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n}: centre 0 with leaves 1..n."""
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def directed_cycle(n: int) -> DiGraph:
    """Directed n-cycle 0->1->...->n-1->0 for n >= 2."""
    if n < 2:
        raise GraphStructureError(f"Directed cycle needs at least 2 vertices, got {n}")
    return DiGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
