"""Twin blocks: vertices no third vertex can tell apart."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.graph.core import DiGraph, Graph
from src.graph.distances import DistanceMatrix, all_pairs_distances
from src.metric.resolving import ensure_connected


@dataclass(frozen=True)
class TwinPartition:
    """Partition of V into blocks of mutual twins.

    Any resolving set contains all but at most one vertex of every block.
    """

    blocks: tuple[tuple[int, ...], ...]

    @property
    def lower_bound(self) -> int:
        return sum(len(b) - 1 for b in self.blocks)

    def nontrivial(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in self.blocks if len(b) > 1)


def twin_matrix(dm: DistanceMatrix) -> np.ndarray:
    """Boolean n x n matrix of the twin relation (diagonal False).

    ``u`` and ``v`` are twins iff their rows agree off ``{u, v}`` and
    d(u, v) = d(v, u).
    """
    d = dm.matrix
    n = dm.n
    differs = d[:, None, :] != d[None, :, :]  # [u, v, w]
    idx = np.arange(n)
    # Ignore w in {u, v}
    differs[idx, :, idx] = False
    differs[:, idx, idx] = False
    twins = ~differs.any(axis=2)
    twins &= d == d.T
    np.fill_diagonal(twins, False)
    return twins


def twin_classes_from_matrix(dm: DistanceMatrix) -> TwinPartition:
    ensure_connected(dm)
    twins = twin_matrix(dm)
    # Digraph twin relations need not be transitive: a vertex joins the first
    # block whose members are all its twins, so each block is a twin clique.
    blocks: list[list[int]] = []
    for u in range(dm.n):
        for block in blocks:
            if all(twins[u, v] for v in block):
                block.append(u)
                break
        else:
            blocks.append([u])
    return TwinPartition(blocks=tuple(tuple(b) for b in blocks))


def twin_classes(g: Graph | DiGraph, dm: DistanceMatrix | None = None) -> TwinPartition:
    """Twin blocks of a (strongly) connected graph."""
    if dm is None:
        dm = all_pairs_distances(g)
    return twin_classes_from_matrix(dm)
