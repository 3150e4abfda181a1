"""Resolving sets of line digraphs by deleting one in-edge per vertex.

For a strongly connected digraph G that is not a directed cycle, dropping one
in-coming arc of every vertex from E(G) leaves |E| - |V| arcs, and those arcs
resolve L(G) as landmarks. No smaller set can: the in-arcs of a vertex have
equal distances to every other line vertex, so all but one of them must be
landmarks.
"""

from __future__ import annotations

import logging

import numpy as np

from src.graph.core import DiGraph
from src.graph.errors import DisconnectedGraphError, PreconditionError, VerificationError
from src.graph.line_graph import directed_line_graph
from src.graph.predicates import is_directed_cycle, is_strongly_connected
from src.metric.resolving import is_resolving_set

logger = logging.getLogger(__name__)


def _require_strongly_connected(g: DiGraph) -> None:
    if not is_strongly_connected(g):
        raise DisconnectedGraphError("In-edge construction requires a strongly connected digraph")


def in_edge_deletion_set(
    g: DiGraph,
    rng: np.random.Generator | None = None,
) -> tuple[int, ...]:
    """Landmarks of L(g) built from E(g) minus one in-arc per vertex.

    The deleted in-arc is the smallest arc id at each vertex, or a uniformly
    random one when ``rng`` is given. The result is re-verified on L(g).

    Args:
        g: Strongly connected digraph that is not a directed cycle.
        rng: Optional generator replacing the smallest-id tie-break.

    Returns:
        Sorted line-vertex ids (equal to arc ids of ``g``), |E| - |V| of them.

    Raises:
        DisconnectedGraphError: ``g`` is not strongly connected.
        PreconditionError: ``g`` is a directed cycle (μ(L(g)) = 1 there).
        VerificationError: the set does not resolve L(g).
    """
    _require_strongly_connected(g)
    if g.m == 0:
        raise PreconditionError("In-edge construction needs at least one arc")
    if is_directed_cycle(g):
        raise PreconditionError("Directed cycle: L(G) is a cycle with metric dimension 1")

    deleted = set()
    for x in range(g.n):
        in_arcs = g.in_edges[x]
        choice = in_arcs[0] if rng is None else in_arcs[int(rng.integers(len(in_arcs)))]
        logger.debug("Vertex %d: deleting in-arc %d %s", x, choice, g.edges[choice])
        deleted.add(choice)

    landmarks = tuple(e for e in range(g.m) if e not in deleted)
    lgm = directed_line_graph(g)
    result = is_resolving_set(lgm.line, landmarks)
    if not result.resolving:
        raise VerificationError(
            f"In-edge deletion set {landmarks} does not resolve L(G); "
            f"line vertices {result.witness} collide"
        )
    return landmarks


# Public name used by callers that follow the equality |E| - |V| = μ(L(G)).
theorem1_resolving_set = in_edge_deletion_set


def in_edge_lower_bound(g: DiGraph) -> int:
    """Sum over vertices of (in-degree - 1): landmarks forced by shared in-arc rows."""
    return sum(max(len(arcs) - 1, 0) for arcs in g.in_edges)


def line_digraph_metric_dimension(g: DiGraph) -> int:
    """Closed-form μ(L(g)) for a strongly connected digraph.

    0 for a single arc (L(g) is one vertex), 1 for any other directed
    cycle, |E| - |V| otherwise.
    """
    _require_strongly_connected(g)
    if g.m == 0:
        raise PreconditionError("Line digraph needs at least one arc")
    if g.m == 1:
        return 0
    if is_directed_cycle(g):
        return 1
    return g.m - g.n
