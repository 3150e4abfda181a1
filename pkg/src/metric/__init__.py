"""Resolving sets and the exact metric-dimension solver."""

from src.metric.config import SolverConfig, load_solver_config
from src.metric.resolving import ResolvingCertificate, is_resolving_set
from src.metric.solver import exact_metric_dimension

__all__ = [
    "ResolvingCertificate",
    "SolverConfig",
    "exact_metric_dimension",
    "is_resolving_set",
    "load_solver_config",
]
