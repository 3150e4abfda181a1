"""Exact-solver configuration with environment overrides."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from src.graph.constants import DEFAULT_SIZE_CAP, MAX_BITSET_VERTICES

logger = logging.getLogger(__name__)

ENV_SIZE_CAP = "LINE_METRIC_SIZE_CAP"
ENV_WORKERS = "LINE_METRIC_WORKERS"


@dataclass(frozen=True)
class SolverConfig:
    """Tunables for the exhaustive metric-dimension search.

    Attributes:
        size_cap: Largest vertex count the solver accepts.
        workers: Worker processes per cardinality level (1 = serial).
        prune: Start at the twin lower bound and skip candidates that miss
            two members of one twin block.
        batch_size: Candidate sets evaluated per numpy batch.
    """

    size_cap: int = DEFAULT_SIZE_CAP
    workers: int = 1
    prune: bool = True
    batch_size: int = 4096

    def __post_init__(self) -> None:
        if not 1 <= self.size_cap <= MAX_BITSET_VERTICES:
            raise ValueError(
                f"size_cap must be in 1..{MAX_BITSET_VERTICES}, got {self.size_cap}"
            )
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.batch_size < 1:
            raise ValueError(f"batch_size must be >= 1, got {self.batch_size}")


def _env_int(name: str, default: int, low: int, high: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r (not an integer); using %d", name, raw, default)
        return default
    if not low <= value <= high:
        logger.warning("Ignoring %s=%d (outside %d..%d); using %d", name, value, low, high, default)
        return default
    return value


def load_solver_config(
    size_cap: int | None = None,
    workers: int | None = None,
    prune: bool | None = None,
) -> SolverConfig:
    """Build a ``SolverConfig``: explicit arguments, then environment, then defaults.

    Parameters
    ----------
    size_cap : int | None
        Vertex cap. Falls back to ``LINE_METRIC_SIZE_CAP``.
    workers : int | None
        Worker processes. Falls back to ``LINE_METRIC_WORKERS``.
    prune : bool | None
        Twin pruning switch; defaults to on.
    """
    defaults = SolverConfig()
    resolved_cap = size_cap if size_cap is not None else _env_int(
        ENV_SIZE_CAP, defaults.size_cap, 1, MAX_BITSET_VERTICES
    )
    resolved_workers = workers if workers is not None else _env_int(
        ENV_WORKERS, defaults.workers, 1, os.cpu_count() or 1
    )
    return SolverConfig(
        size_cap=resolved_cap,
        workers=resolved_workers,
        prune=defaults.prune if prune is None else prune,
        batch_size=defaults.batch_size,
    )
