"""Tests for the exact metric dimension solver."""

from itertools import combinations

import pytest

from src.graph.core import Graph
from src.graph.distances import all_pairs_distances
from src.graph.errors import DisconnectedGraphError, PreconditionError, SizeCapExceededError
from src.graph.families import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    directed_cycle,
    path_graph,
)
from src.graph.line_graph import directed_line_graph, undirected_line_graph
from src.metric.config import SolverConfig
from src.metric.resolving import is_resolving_set
from src.metric.solver import exact_metric_dimension, find_resolving_set_of_size
from src.topologies.generators import de_bruijn, kautz
from tests.corpus import connected_graphs, strongly_connected_non_cycles

SERIAL = SolverConfig(workers=1)
UNPRUNED = SolverConfig(workers=1, prune=False)


class TestExactMetricDimension:
    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_directed_cycle(self, n: int) -> None:
        cert = exact_metric_dimension(directed_cycle(n), SERIAL)
        assert cert.mu_claimed == 1
        assert cert.landmarks == (0,)

    def test_line_of_k6(self) -> None:
        line = undirected_line_graph(complete_graph(6)).line
        assert exact_metric_dimension(line, SERIAL).mu_claimed == 4

    def test_line_of_k23(self) -> None:
        line = undirected_line_graph(complete_bipartite_graph(2, 3)).line
        assert exact_metric_dimension(line, SERIAL).mu_claimed == 2

    def test_lexicographically_least(self) -> None:
        assert exact_metric_dimension(path_graph(3), SERIAL).landmarks == (0,)
        assert exact_metric_dimension(cycle_graph(5), SERIAL).landmarks == (0, 1)
        assert exact_metric_dimension(complete_graph(5), SERIAL).landmarks == (0, 1, 2, 3)

    def test_certificate_verifies(self) -> None:
        g = kautz(2, 2)
        cert = exact_metric_dimension(g, SERIAL)
        assert cert.verify(all_pairs_distances(g))
        assert is_resolving_set(g, cert.landmarks).resolving

    def test_single_vertex(self) -> None:
        cert = exact_metric_dimension(Graph.from_edges(1, []), SERIAL)
        assert cert.mu_claimed == 0
        assert cert.landmarks == ()

    def test_size_cap(self) -> None:
        with pytest.raises(SizeCapExceededError):
            exact_metric_dimension(path_graph(10), SolverConfig(size_cap=5))

    def test_disconnected(self) -> None:
        with pytest.raises(DisconnectedGraphError):
            exact_metric_dimension(Graph.from_edges(4, [(0, 1), (2, 3)]), SERIAL)

    def test_small_batches_same_answer(self) -> None:
        g = undirected_line_graph(complete_bipartite_graph(3, 3)).line
        small = SolverConfig(workers=1, batch_size=3)
        assert exact_metric_dimension(g, small) == exact_metric_dimension(g, SERIAL)

    def test_parallel_matches_serial(self) -> None:
        parallel = SolverConfig(workers=2)
        for g in (kautz(2, 2), de_bruijn(2, 3), undirected_line_graph(complete_graph(5)).line):
            assert exact_metric_dimension(g, parallel) == exact_metric_dimension(g, SERIAL)

    def test_pruned_matches_unpruned_on_graphs(self) -> None:
        for n in (3, 4, 5):
            for g in connected_graphs(n):
                assert exact_metric_dimension(g, SERIAL) == exact_metric_dimension(g, UNPRUNED)

    @pytest.mark.slow
    def test_pruned_matches_unpruned_on_line_digraphs(self) -> None:
        for n in (3, 4):
            for g in strongly_connected_non_cycles(n):
                if g.m > 8:
                    continue
                line = directed_line_graph(g).line
                assert exact_metric_dimension(line, SERIAL) == exact_metric_dimension(line, UNPRUNED)


class TestFindResolvingSetOfSize:
    def test_finds_least_set(self) -> None:
        dm = all_pairs_distances(cycle_graph(5))
        assert find_resolving_set_of_size(dm, 2) == (0, 1)
        assert find_resolving_set_of_size(dm, 1) is None

    def test_bad_size(self) -> None:
        dm = all_pairs_distances(cycle_graph(5))
        with pytest.raises(PreconditionError):
            find_resolving_set_of_size(dm, 0)

    def test_refutes_below_in_edge_count(self) -> None:
        # L(B(2,3)) = B(2,4) has 16 vertices; μ = 16 - 8 = 8
        dm = all_pairs_distances(directed_line_graph(de_bruijn(2, 3)).line)
        assert find_resolving_set_of_size(dm, 7, SERIAL) is None
        assert find_resolving_set_of_size(dm, 8, SERIAL) is not None


@pytest.mark.slow
class TestMinimality:
    def _assert_minimal(self, g) -> None:
        cert = exact_metric_dimension(g, SERIAL)
        mu = cert.mu_claimed
        assert is_resolving_set(g, cert.landmarks).resolving
        if mu < 2:
            return
        dm = all_pairs_distances(g)
        assert find_resolving_set_of_size(dm, mu - 1, UNPRUNED) is None
        for subset in combinations(range(g.n), mu - 1):
            assert not is_resolving_set(g, subset, dm).resolving

    def test_connected_graphs_up_to_six(self) -> None:
        for n in range(2, 7):
            for g in connected_graphs(n):
                self._assert_minimal(g)

    def test_line_graphs_up_to_ten_vertices(self) -> None:
        for g in connected_graphs(5):
            if 2 <= g.m <= 10:
                self._assert_minimal(undirected_line_graph(g).line)

    def test_line_digraphs_up_to_ten_vertices(self) -> None:
        for g in strongly_connected_non_cycles(3) + strongly_connected_non_cycles(4):
            if g.m <= 10:
                self._assert_minimal(directed_line_graph(g).line)
