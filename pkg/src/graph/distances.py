"""Unweighted shortest-path distances by breadth-first search."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from src.graph.constants import UNREACHABLE
from src.graph.core import DiGraph, Graph
from src.graph.errors import GraphStructureError


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs distances; ``matrix[u, v]`` is d(u, v) or ``UNREACHABLE``.

    The array is marked read-only on construction.
    """

    matrix: np.ndarray
    directed: bool

    def __post_init__(self) -> None:
        self.matrix.setflags(write=False)

    @property
    def n(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def has_unreachable(self) -> bool:
        return bool(np.any(self.matrix == UNREACHABLE))

    def distance(self, u: int, v: int) -> int:
        return int(self.matrix[u, v])


def bfs_distances(g: Graph | DiGraph, source: int) -> np.ndarray:
    """Distances from ``source`` to every vertex, following arc direction.

    Loops never shorten a path, so they are irrelevant here.

    Raises:
        GraphStructureError: ``source`` is not a vertex of ``g``.
    """
    if not 0 <= source < g.n:
        raise GraphStructureError(f"Source {source} outside vertex range 0..{g.n - 1}")

    row = np.full(g.n, UNREACHABLE, dtype=np.int64)
    row[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = row[u]
        for v in g.neighbors(u):
            if row[v] == UNREACHABLE:
                row[v] = du + 1
                queue.append(v)
    return row


def all_pairs_distances(g: Graph | DiGraph) -> DistanceMatrix:
    """Stack one BFS row per vertex."""
    if g.n == 0:
        return DistanceMatrix(matrix=np.zeros((0, 0), dtype=np.int64), directed=g.directed)
    matrix = np.vstack([bfs_distances(g, s) for s in range(g.n)])
    return DistanceMatrix(matrix=matrix, directed=g.directed)
