"""Tests for the graph versus line-graph survey."""

import pytest

from src.experiments.survey import SurveyRow, compare_graph_and_line, survey
from src.graph.core import Graph
from src.graph.errors import DisconnectedGraphError, PreconditionError
from src.graph.families import complete_graph, cycle_graph, path_graph, star_graph
from src.metric.config import SolverConfig

SERIAL = SolverConfig(workers=1)


class TestCompareGraphAndLine:
    def test_claw(self) -> None:
        row = compare_graph_and_line(star_graph(3), SERIAL)
        assert row == SurveyRow(n=4, m=3, mu_graph=2, mu_line=2, lower_log=2, upper=2, equal=True)

    def test_single_edge_has_no_line_graph(self) -> None:
        with pytest.raises(PreconditionError, match="at least 2 edges"):
            compare_graph_and_line(path_graph(2), SERIAL)

    def test_complete_graph_on_four(self) -> None:
        row = compare_graph_and_line(complete_graph(4), SERIAL)
        assert (row.mu_graph, row.mu_line) == (3, 3)

    def test_disconnected(self) -> None:
        with pytest.raises(DisconnectedGraphError):
            compare_graph_and_line(Graph.from_edges(4, [(0, 1), (2, 3)]), SERIAL)


class TestSurvey:
    def test_frame(self) -> None:
        df = survey([path_graph(4), cycle_graph(5), star_graph(4)], SERIAL)
        assert list(df.columns) == ["n", "m", "mu_graph", "mu_line", "lower_log", "upper", "equal"]
        assert df["mu_line"].tolist() == [1, 2, 3]
        assert df["equal"].all()

    def test_empty(self) -> None:
        df = survey([], SERIAL)
        assert df.empty
        assert "equal" in df.columns
