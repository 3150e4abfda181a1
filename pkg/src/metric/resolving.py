"""Distance vectors D(u|W), resolving-set checks and certificates.

Orientation is fixed: D(u|W) lists distances FROM ``u`` TO each landmark.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from src.graph.constants import UNREACHABLE
from src.graph.core import DiGraph, Graph
from src.graph.distances import DistanceMatrix, all_pairs_distances
from src.graph.errors import DisconnectedGraphError, GraphStructureError, PreconditionError


@dataclass(frozen=True)
class ResolutionResult:
    """Outcome of a resolving-set check.

    ``witness`` is the lexicographically smallest pair ``(u, v)``, ``u < v``,
    with D(u|W) = D(v|W); ``None`` when ``resolving``.
    """

    resolving: bool
    witness: tuple[int, int] | None = None


@dataclass(frozen=True)
class ResolvingCertificate:
    """Landmarks W with the vector D(u|W) of every vertex."""

    landmarks: tuple[int, ...]
    vectors: dict[int, tuple[int, ...]]
    mu_claimed: int | None = None

    def verify(self, dm: DistanceMatrix) -> bool:
        """Replay the vectors against ``dm``.

        True iff every stored vector matches, vectors are pairwise distinct,
        and each landmark has 0 in its own coordinate.
        """
        if set(self.vectors) != set(range(dm.n)):
            return False
        for u, vec in self.vectors.items():
            if tuple(int(x) for x in dm.matrix[u, list(self.landmarks)]) != vec:
                return False
        if len(set(self.vectors.values())) != dm.n:
            return False
        return all(self.vectors[w][i] == 0 for i, w in enumerate(self.landmarks))


def ensure_connected(dm: DistanceMatrix) -> None:
    if dm.has_unreachable:
        kind = "strongly connected" if dm.directed else "connected"
        raise DisconnectedGraphError(f"Input graph is not {kind}")


def _check_landmarks(n: int, landmarks: Sequence[int]) -> None:
    if len(landmarks) == 0:
        raise PreconditionError("Landmark set must be nonempty")
    for w in landmarks:
        if not 0 <= w < n:
            raise GraphStructureError(f"Landmark {w} outside vertex range 0..{n - 1}")


def distance_vector(dm: DistanceMatrix, u: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    """D(u|W) = (d(u, w_1), ..., d(u, w_m)).

    Raises:
        DisconnectedGraphError: some landmark is unreachable from ``u``.
    """
    vec = []
    for w in landmarks:
        d = int(dm.matrix[u, w])
        if d == UNREACHABLE:
            raise DisconnectedGraphError(f"Landmark {w} is unreachable from vertex {u}")
        vec.append(d)
    return tuple(vec)


def resolve_with_matrix(dm: DistanceMatrix, landmarks: Sequence[int]) -> ResolutionResult:
    """``is_resolving_set`` on a precomputed distance matrix."""
    ensure_connected(dm)
    _check_landmarks(dm.n, landmarks)

    groups: dict[tuple[int, ...], list[int]] = {}
    for u in range(dm.n):
        groups.setdefault(distance_vector(dm, u, landmarks), []).append(u)

    collisions = [(members[0], members[1]) for members in groups.values() if len(members) > 1]
    if not collisions:
        return ResolutionResult(resolving=True)
    return ResolutionResult(resolving=False, witness=min(collisions))


def is_resolving_set(
    g: Graph | DiGraph,
    landmarks: Sequence[int],
    dm: DistanceMatrix | None = None,
) -> ResolutionResult:
    """Check whether ``landmarks`` resolves ``g``.

    Args:
        g: A connected graph or strongly connected digraph.
        landmarks: Nonempty landmark vertex ids.
        dm: Optional precomputed distance matrix of ``g``.

    Raises:
        DisconnectedGraphError: ``g`` is not (strongly) connected.
        PreconditionError: empty landmark set.
    """
    if dm is None:
        dm = all_pairs_distances(g)
    return resolve_with_matrix(dm, landmarks)


def build_certificate(
    dm: DistanceMatrix,
    landmarks: Sequence[int],
    mu_claimed: int | None = None,
) -> ResolvingCertificate:
    ensure_connected(dm)
    _check_landmarks(dm.n, landmarks)
    cols = dm.matrix[:, list(landmarks)]
    vectors = {u: tuple(int(x) for x in cols[u]) for u in range(dm.n)}
    return ResolvingCertificate(
        landmarks=tuple(int(w) for w in landmarks),
        vectors=vectors,
        mu_claimed=mu_claimed,
    )


def distinguishing_masks(dm: DistanceMatrix) -> np.ndarray:
    """One uint64 mask per unordered pair ``u < v``: bit ``w`` set iff d(u,w) != d(v,w).

    A landmark bitmask resolves the graph iff it intersects every mask.
    """
    n = dm.n
    if n < 2:
        return np.zeros(0, dtype=np.uint64)
    d = dm.matrix
    iu, iv = np.triu_indices(n, k=1)
    differs = d[iu] != d[iv]  # (pairs, n)
    weights = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    return (differs.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
