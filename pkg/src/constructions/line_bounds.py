"""Bounds on μ(L(G)) for undirected graphs and the spanning-tree landmark set.

For a connected graph on n >= 5 vertices, ceil(log2 Δ) <= μ(L(G)) <= n - 2.
The upper bound is witnessed by the edges of a spanning tree minus the tree
edge at one of its leaves.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

import numpy as np

from src.graph.core import Graph
from src.graph.errors import DisconnectedGraphError, PreconditionError, VerificationError
from src.graph.line_graph import undirected_line_graph
from src.graph.predicates import is_connected, structural_predicates
from src.metric.config import SolverConfig
from src.metric.resolving import is_resolving_set
from src.metric.solver import exact_metric_dimension

logger = logging.getLogger(__name__)

MIN_BOUND_VERTICES = 5


@dataclass(frozen=True)
class BoundsReport:
    """Both sides of the line-graph bound.

    ``applicable`` is False below five vertices, where the bound is not
    claimed; the two values are still filled in.
    """

    lower_log: int
    upper: int
    applicable: bool
    max_degree: int


def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length() if x > 1 else 0


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("Input graph is not connected")


def _require_bound_range(g: Graph) -> None:
    if g.n < MIN_BOUND_VERTICES:
        raise PreconditionError(
            f"Line-graph bounds need at least {MIN_BOUND_VERTICES} vertices, got {g.n}"
        )


def log2_lower_bound(g: Graph) -> int:
    """ceil(log2 Δ(G)).

    Raises:
        DisconnectedGraphError: ``g`` is not connected.
        PreconditionError: fewer than five vertices.
    """
    _require_connected(g)
    _require_bound_range(g)
    return _ceil_log2(structural_predicates(g).max_degree)


def line_bounds(g: Graph) -> BoundsReport:
    """Report the bound for ``g``; never rejects small graphs."""
    _require_connected(g)
    max_degree = structural_predicates(g).max_degree
    return BoundsReport(
        lower_log=_ceil_log2(max_degree),
        upper=g.n - 2,
        applicable=g.n >= MIN_BOUND_VERTICES,
        max_degree=max_degree,
    )


def bfs_spanning_tree(g: Graph, root: int = 0) -> tuple[int, ...]:
    """Edge ids of the BFS tree from ``root``, ascending.

    Neighbors are scanned in ascending order, so the tree is deterministic.
    """
    _require_connected(g)
    seen = [False] * g.n
    seen[root] = True
    tree_edges: list[int] = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                tree_edges.append(g.edge_id(u, v))
                queue.append(v)
    return tuple(sorted(tree_edges))


def _tree_leaves(g: Graph, tree_edges: tuple[int, ...]) -> list[int]:
    degree = [0] * g.n
    for e in tree_edges:
        u, v = g.edges[e]
        degree[u] += 1
        degree[v] += 1
    return [v for v in range(g.n) if degree[v] == 1]


def spanning_tree_resolving_set(
    g: Graph,
    rng: np.random.Generator | None = None,
    config: SolverConfig | None = None,
) -> tuple[int, ...]:
    """Landmarks of L(g) with exactly n - 2 members (at most n - 2 when n = 5).

    From n = 6 on: the BFS spanning tree from vertex 0 minus the tree edge at
    its smallest-id leaf (a random leaf when ``rng`` is given). At n = 5 the
    exact solver's minimum set is returned instead.

    Returns:
        Sorted line-vertex ids (equal to edge ids of ``g``).

    Raises:
        DisconnectedGraphError: ``g`` is not connected.
        PreconditionError: fewer than five vertices.
        VerificationError: the result does not resolve L(g) or exceeds n - 2.
    """
    _require_connected(g)
    _require_bound_range(g)
    lgm = undirected_line_graph(g)

    if g.n == MIN_BOUND_VERTICES:
        cert = exact_metric_dimension(lgm.line, config)
        if len(cert.landmarks) > g.n - 2:
            raise VerificationError(
                f"Minimum resolving set of L(G) has {len(cert.landmarks)} > {g.n - 2} landmarks"
            )
        return cert.landmarks

    tree_edges = bfs_spanning_tree(g)
    leaves = _tree_leaves(g, tree_edges)
    leaf = leaves[0] if rng is None else leaves[int(rng.integers(len(leaves)))]
    dropped = next(e for e in tree_edges if leaf in g.edges[e])
    logger.debug("Spanning tree leaf %d: dropping tree edge %d %s", leaf, dropped, g.edges[dropped])

    landmarks = tuple(e for e in tree_edges if e != dropped)
    result = is_resolving_set(lgm.line, landmarks)
    if not result.resolving:
        raise VerificationError(
            f"Spanning-tree set {landmarks} does not resolve L(G); "
            f"line vertices {result.witness} collide"
        )
    return landmarks


def claw_resolving_set(g: Graph) -> tuple[int, ...]:
    """Three edges of a K_{1,3} that resolve L(g) on five vertices.

    Uses the smallest-id vertex of degree >= 3 and its three smallest-id
    incident edges. Every connected five-vertex graph other than P_5 and
    C_5 has such a vertex.

    Raises:
        PreconditionError: ``g`` does not have five vertices, or has maximum
            degree below 3 (P_5 or C_5).
        VerificationError: the claw does not resolve L(g).
    """
    _require_connected(g)
    if g.n != MIN_BOUND_VERTICES:
        raise PreconditionError(f"Claw construction is for five vertices, got {g.n}")
    centre = next((v for v in range(g.n) if g.degree(v) >= 3), None)
    if centre is None:
        raise PreconditionError("No vertex of degree 3: graph is P_5 or C_5")

    landmarks = tuple(sorted(g.incident_edges[centre])[:3])
    lgm = undirected_line_graph(g)
    result = is_resolving_set(lgm.line, landmarks)
    if not result.resolving:
        raise VerificationError(f"Claw {landmarks} at vertex {centre} does not resolve L(G)")
    return landmarks
