"""Side-by-side μ(G) and μ(L(G)) for experimenting with which graphs match."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import asdict, dataclass

import pandas as pd

from src.constructions.line_bounds import line_bounds
from src.graph.core import Graph
from src.graph.line_graph import undirected_line_graph
from src.metric.config import SolverConfig, load_solver_config
from src.metric.solver import exact_metric_dimension

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurveyRow:
    n: int
    m: int
    mu_graph: int
    mu_line: int
    lower_log: int  # ceil(log2 Δ)
    upper: int  # n - 2
    equal: bool


def compare_graph_and_line(g: Graph, config: SolverConfig | None = None) -> SurveyRow:
    """Exact μ of a connected graph and of its line graph.

    Raises:
        DisconnectedGraphError: ``g`` is not connected.
        PreconditionError: ``g`` has fewer than two edges.
        SizeCapExceededError: ``g`` or L(g) is above the solver cap.
    """
    config = config or load_solver_config()
    bounds = line_bounds(g)
    mu_graph = len(exact_metric_dimension(g, config).landmarks)
    mu_line = len(exact_metric_dimension(undirected_line_graph(g).line, config).landmarks)
    return SurveyRow(
        n=g.n,
        m=g.m,
        mu_graph=mu_graph,
        mu_line=mu_line,
        lower_log=bounds.lower_log,
        upper=bounds.upper,
        equal=mu_graph == mu_line,
    )


def survey(graphs: Iterable[Graph], config: SolverConfig | None = None) -> pd.DataFrame:
    """One ``SurveyRow`` per graph, as a DataFrame."""
    config = config or load_solver_config()
    rows = [asdict(compare_graph_and_line(g, config)) for g in graphs]
    df = pd.DataFrame(rows, columns=list(SurveyRow.__dataclass_fields__))
    if not df.empty:
        logger.info("Survey: %d graphs, %d with μ(G) = μ(L(G))", len(df), int(df["equal"].sum()))
    return df
