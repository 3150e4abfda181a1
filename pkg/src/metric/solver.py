"""Exact metric dimension by exhaustive subset search.

Candidate landmark sets are enumerated by cardinality, each level in
lexicographic order, and evaluated in numpy batches as uint64 bitmasks
against the per-pair distinguishing masks. The first resolving set found is
the lexicographically least one of minimum size.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from itertools import combinations, islice

import numpy as np

from src.graph.core import DiGraph, Graph
from src.graph.distances import DistanceMatrix, all_pairs_distances
from src.graph.errors import PreconditionError, SizeCapExceededError
from src.metric.config import SolverConfig, load_solver_config
from src.metric.resolving import (
    ResolvingCertificate,
    build_certificate,
    distinguishing_masks,
    ensure_connected,
)
from src.metric.twins import twin_classes_from_matrix

logger = logging.getLogger(__name__)

# (block members, minimum members a resolving set must contain)
TwinRequirement = tuple[tuple[int, ...], int]


def _first_resolving_in_range(
    masks: np.ndarray,
    n: int,
    k: int,
    first: int,
    requirements: tuple[TwinRequirement, ...],
    batch_size: int,
) -> tuple[int, ...] | None:
    """Least resolving k-set whose smallest landmark is ``first``, or None."""
    rest_iter = combinations(range(first + 1, n), k - 1)
    one = np.uint64(1)
    while True:
        chunk = list(islice(rest_iter, batch_size))
        if not chunk:
            return None
        rest = np.array(chunk, dtype=np.int64).reshape(len(chunk), k - 1)
        cand = np.hstack([np.full((len(chunk), 1), first, dtype=np.int64), rest])

        if requirements:
            keep = np.ones(len(cand), dtype=bool)
            for members, need in requirements:
                keep &= np.isin(cand, members).sum(axis=1) >= need
            cand = cand[keep]
            if len(cand) == 0:
                continue

        wmask = np.bitwise_or.reduce(np.left_shift(one, cand.astype(np.uint64)), axis=1)
        resolves = ((wmask[:, None] & masks[None, :]) != 0).all(axis=1)
        if resolves.any():
            return tuple(int(x) for x in cand[int(np.argmax(resolves))])


def _search_level(
    masks: np.ndarray,
    n: int,
    k: int,
    requirements: tuple[TwinRequirement, ...],
    config: SolverConfig,
    pool: Executor | None,
) -> tuple[int, ...] | None:
    firsts = range(n - k + 1)
    if pool is None:
        for first in firsts:
            found = _first_resolving_in_range(masks, n, k, first, requirements, config.batch_size)
            if found is not None:
                return found
        return None

    futures = [
        pool.submit(
            _first_resolving_in_range, masks, n, k, first, requirements, config.batch_size
        )
        for first in firsts
    ]
    winners = [r for r in (f.result() for f in futures) if r is not None]
    # Ranges may finish in any order; the least winner is schedule-independent.
    return min(winners) if winners else None


def _twin_requirements(dm: DistanceMatrix) -> tuple[int, tuple[TwinRequirement, ...]]:
    partition = twin_classes_from_matrix(dm)
    reqs = tuple((block, len(block) - 1) for block in partition.nontrivial())
    return partition.lower_bound, reqs


def _check_size(dm: DistanceMatrix, config: SolverConfig) -> None:
    if dm.n == 0:
        raise PreconditionError("Metric dimension of the empty graph is undefined")
    if dm.n > config.size_cap:
        raise SizeCapExceededError(
            f"Exact search on {dm.n} vertices exceeds the size cap of {config.size_cap}"
        )


def find_resolving_set_of_size(
    dm: DistanceMatrix,
    k: int,
    config: SolverConfig | None = None,
) -> tuple[int, ...] | None:
    """Lexicographically least resolving set with exactly ``k`` landmarks.

    Returns None when no k-subset resolves. Used for minimality refutations.
    """
    config = config or load_solver_config()
    ensure_connected(dm)
    _check_size(dm, config)
    if not 1 <= k <= dm.n:
        raise PreconditionError(f"Landmark count must be in 1..{dm.n}, got {k}")

    masks = distinguishing_masks(dm)
    requirements: tuple[TwinRequirement, ...] = ()
    if config.prune:
        _, requirements = _twin_requirements(dm)
    return _search_level(masks, dm.n, k, requirements, config, pool=None)


def exact_metric_dimension(
    g: Graph | DiGraph,
    config: SolverConfig | None = None,
    dm: DistanceMatrix | None = None,
) -> ResolvingCertificate:
    """Minimum resolving set of ``g`` with its certificate.

    Args:
        g: Connected graph or strongly connected digraph.
        config: Solver settings; ``load_solver_config()`` when omitted.
        dm: Optional precomputed distance matrix of ``g``.

    Returns:
        Certificate whose ``mu_claimed`` is the metric dimension and whose
        landmarks are the lexicographically least minimum resolving set.

    Raises:
        DisconnectedGraphError: ``g`` is not (strongly) connected.
        PreconditionError: ``g`` has no vertices.
        SizeCapExceededError: ``g`` has more vertices than ``config.size_cap``.
    """
    config = config or load_solver_config()
    if dm is None:
        dm = all_pairs_distances(g)
    ensure_connected(dm)
    _check_size(dm, config)

    n = dm.n
    if n == 1:
        return ResolvingCertificate(landmarks=(), vectors={0: ()}, mu_claimed=0)

    started = time.perf_counter()
    masks = distinguishing_masks(dm)
    start_k = 1
    requirements: tuple[TwinRequirement, ...] = ()
    if config.prune:
        bound, requirements = _twin_requirements(dm)
        start_k = max(1, bound)

    pool = ProcessPoolExecutor(max_workers=config.workers) if config.workers > 1 else None
    try:
        found = None
        for k in range(start_k, n + 1):
            logger.debug("Searching landmark sets of size %d on %d vertices", k, n)
            found = _search_level(masks, n, k, requirements, config, pool)
            if found is not None:
                break
    finally:
        if pool is not None:
            pool.shutdown()

    if found is None:
        # V minus one vertex always resolves a connected graph
        raise RuntimeError("Exhaustive search found no resolving set")

    logger.info(
        "Metric dimension %d on %d vertices (start k=%d, %.3fs)",
        len(found), n, start_k, time.perf_counter() - started,
    )
    return build_certificate(dm, found, mu_claimed=len(found))
