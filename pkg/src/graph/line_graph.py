"""Line graphs of digraphs and graphs, with the edge <-> vertex bijection.

Directed: arc ``(a, b)`` is in L(G) iff the tail of ``a`` is the head of
``b``. Undirected: ``{a, b}`` is an edge of L(G) iff ``a`` and ``b`` share an
endpoint. Line-graph vertex ids equal the original edge ids.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from src.graph.core import DiGraph, Graph
from src.graph.distances import all_pairs_distances
from src.graph.errors import DisconnectedGraphError, PreconditionError
from src.graph.predicates import is_strongly_connected

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LineGraphMap:
    """A line graph plus the mapping back to the original edges.

    Attributes:
        line: The constructed line graph.
        to_line: Original edge id -> line vertex id.
        from_line: Line vertex id -> original edge id.
        original_edge_endpoints: Line vertex id -> ``(head, tail)`` for
            digraphs, ``(u, v)`` with ``u < v`` for graphs.
    """

    line: Graph | DiGraph
    to_line: dict[int, int]
    from_line: dict[int, int]
    original_edge_endpoints: dict[int, tuple[int, int]]

    @property
    def directed(self) -> bool:
        return self.line.directed


class IdentityViolation(NamedTuple):
    a: int
    b: int
    lhs: int
    rhs: int


def _identity_maps(edges: tuple[tuple[int, int], ...]) -> tuple[dict, dict, dict]:
    to_line = {e: e for e in range(len(edges))}
    from_line = dict(to_line)
    endpoints = {e: edges[e] for e in range(len(edges))}
    return to_line, from_line, endpoints


def directed_line_graph(g: DiGraph) -> LineGraphMap:
    """Build L(g).

    A loop ``a = (x, x)`` yields the loop ``(a, a)`` in L(g), so L(g) has
    exactly sum_x |E-(x)| * |E+(x)| arcs.

    Raises:
        PreconditionError: ``g`` has no arcs.
    """
    if g.m == 0:
        raise PreconditionError("Line digraph needs at least one arc")

    arcs = [(a, b) for a, (_, tail) in enumerate(g.edges) for b in g.out_edges[tail]]
    line = DiGraph.from_edges(g.m, arcs, allows_loops=g.loop_count > 0)
    to_line, from_line, endpoints = _identity_maps(g.edges)
    logger.debug("Line digraph: %d vertices, %d arcs", line.n, line.m)
    return LineGraphMap(line, to_line, from_line, endpoints)


def undirected_line_graph(g: Graph) -> LineGraphMap:
    """Build L(g); ``|E(L)| = sum_v C(deg(v), 2)``.

    Raises:
        PreconditionError: ``g`` has fewer than two edges.
    """
    if g.m < 2:
        raise PreconditionError(f"Line graph needs at least 2 edges, got {g.m}")

    pairs = [pair for v in range(g.n) for pair in combinations(g.incident_edges[v], 2)]
    line = Graph.from_edges(g.m, pairs)
    to_line, from_line, endpoints = _identity_maps(g.edges)
    logger.debug("Line graph: %d vertices, %d edges", line.n, line.m)
    return LineGraphMap(line, to_line, from_line, endpoints)


def line_graph(g: Graph | DiGraph) -> LineGraphMap:
    """Dispatch on the graph kind."""
    if g.directed:
        return directed_line_graph(g)
    return undirected_line_graph(g)


def iterated_line_digraph(g: DiGraph, times: int) -> DiGraph:
    """Apply the line-digraph operator ``times`` times (``times >= 0``)."""
    if times < 0:
        raise PreconditionError(f"Iteration count must be non-negative, got {times}")
    current = g
    for _ in range(times):
        current = directed_line_graph(current).line
    return current


def check_distance_identity(g: DiGraph, lgm: LineGraphMap) -> list[IdentityViolation]:
    """Compare d_L(a, b) with d_G(tail(a), head(b)) + 1 for all a != b.

    Returns:
        The violating pairs in row-major order; empty when the identity holds.

    Raises:
        DisconnectedGraphError: ``g`` is not strongly connected.
    """
    if not is_strongly_connected(g):
        raise DisconnectedGraphError("Distance identity requires a strongly connected digraph")

    d_g = all_pairs_distances(g).matrix
    d_l = all_pairs_distances(lgm.line).matrix

    m = lgm.line.n
    heads = np.array([lgm.original_edge_endpoints[lgm.from_line[a]][0] for a in range(m)])
    tails = np.array([lgm.original_edge_endpoints[lgm.from_line[a]][1] for a in range(m)])
    rhs = d_g[tails[:, None], heads[None, :]] + 1

    mismatch = d_l != rhs
    np.fill_diagonal(mismatch, False)
    return [
        IdentityViolation(int(a), int(b), int(d_l[a, b]), int(rhs[a, b]))
        for a, b in zip(*np.nonzero(mismatch))
    ]


def edge_label(lgm: LineGraphMap, line_vertex: int, labels: list[str]) -> str:
    """Render a line vertex as ``u—v`` (graph) or ``u→v`` (digraph)."""
    u, v = lgm.original_edge_endpoints[line_vertex]
    sep = "→" if lgm.directed else "—"
    return f"{labels[u]}{sep}{labels[v]}"
