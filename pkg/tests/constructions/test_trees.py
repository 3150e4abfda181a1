"""Tests for the terminal-vertex profile of trees."""

import numpy as np
import pytest

from src.constructions.trees import tree_line_metric_dimension, tree_metric_dimension, tree_profile
from src.graph.core import Graph
from src.graph.errors import PreconditionError
from src.graph.families import cycle_graph, path_graph, star_graph
from src.graph.line_graph import undirected_line_graph
from src.metric.config import SolverConfig
from src.metric.resolving import is_resolving_set
from src.metric.solver import exact_metric_dimension
from tests.corpus import non_path_trees

SERIAL = SolverConfig(workers=1)


@pytest.fixture
def spider() -> Graph:
    """Three legs of length two around vertex 0."""
    return Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


@pytest.fixture
def caterpillar() -> Graph:
    """Vertex 0 with leaves 1, 2, 3 and a tail 0-4-5."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])


@pytest.fixture
def double_star() -> Graph:
    return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


class TestTreeProfile:
    def test_star(self) -> None:
        profile = tree_profile(star_graph(3))
        assert profile.end_vertices == (1, 2, 3)
        assert profile.major_vertices == (0,)
        assert profile.terminal_map == {0: (1, 2, 3)}
        assert (profile.sigma, profile.ex) == (3, 1)

    def test_spider(self, spider: Graph) -> None:
        profile = tree_profile(spider)
        assert profile.terminal_map == {0: (2, 4, 6)}
        assert tree_metric_dimension(spider) == 2

    def test_caterpillar(self, caterpillar: Graph) -> None:
        profile = tree_profile(caterpillar)
        assert (profile.sigma, profile.ex) == (4, 1)
        assert tree_metric_dimension(caterpillar) == 3

    def test_double_star(self, double_star: Graph) -> None:
        profile = tree_profile(double_star)
        assert profile.exterior_major == (0, 1)
        assert profile.terminal_map == {0: (2, 3), 1: (4, 5)}
        assert tree_metric_dimension(double_star) == 2

    def test_terminals_partition_end_vertices(self) -> None:
        for t in non_path_trees(8):
            profile = tree_profile(t)
            terminals = sorted(u for us in profile.terminal_map.values() for u in us)
            assert tuple(terminals) == profile.end_vertices

    @pytest.mark.parametrize("g", [path_graph(5), cycle_graph(5)])
    def test_rejects_paths_and_non_trees(self, g: Graph) -> None:
        with pytest.raises(PreconditionError):
            tree_profile(g)


class TestTreeLine:
    def test_star_landmarks(self) -> None:
        result = tree_line_metric_dimension(star_graph(3))
        assert result.mu == 2
        assert result.vertex_landmarks == (2, 3)
        assert result.landmarks == (1, 2)

    def test_double_star(self, double_star: Graph) -> None:
        result = tree_line_metric_dimension(double_star)
        assert result.vertex_landmarks == (3, 5)
        assert result.landmarks == (2, 4)

    def test_random_terminal_choice(self, caterpillar: Graph) -> None:
        rng = np.random.default_rng(2)
        line = undirected_line_graph(caterpillar).line
        for _ in range(5):
            result = tree_line_metric_dimension(caterpillar, rng=rng)
            assert len(result.landmarks) == 3
            assert is_resolving_set(line, result.landmarks).resolving

    def test_path_rejected(self) -> None:
        with pytest.raises(PreconditionError):
            tree_line_metric_dimension(path_graph(4))


@pytest.mark.slow
def test_formula_matches_exact_search() -> None:
    for t in non_path_trees(10):
        result = tree_line_metric_dimension(t)
        assert exact_metric_dimension(t, SERIAL).mu_claimed == result.mu
        line = undirected_line_graph(t).line
        assert exact_metric_dimension(line, SERIAL).mu_claimed == result.mu
