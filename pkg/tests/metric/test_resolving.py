"""Tests for distance vectors, resolving checks and certificates."""

import numpy as np
import pytest

from src.graph.core import DiGraph, Graph
from src.graph.distances import all_pairs_distances
from src.graph.errors import DisconnectedGraphError, GraphStructureError, PreconditionError
from src.graph.families import cycle_graph, directed_cycle, path_graph
from src.graph.line_graph import directed_line_graph
from src.metric.resolving import (
    build_certificate,
    distance_vector,
    distinguishing_masks,
    is_resolving_set,
)
from src.topologies.generators import complete_digraph
from tests.corpus import connected_graphs


class TestDistanceVector:
    def test_own_landmark_is_zero(self) -> None:
        dm = all_pairs_distances(cycle_graph(5))
        for u in range(5):
            assert distance_vector(dm, u, [u]) == (0,)

    def test_path_end(self) -> None:
        assert distance_vector(all_pairs_distances(path_graph(3)), 0, [2]) == (2,)

    def test_orientation_is_from_vertex_to_landmark(self) -> None:
        dm = all_pairs_distances(directed_cycle(3))
        assert distance_vector(dm, 2, [0, 1]) == (1, 2)

    def test_unreachable_landmark(self) -> None:
        dm = all_pairs_distances(DiGraph.from_edges(2, [(0, 1)]))
        with pytest.raises(DisconnectedGraphError):
            distance_vector(dm, 1, [0])


class TestIsResolvingSet:
    def test_path_end_resolves(self) -> None:
        result = is_resolving_set(path_graph(3), [0])
        assert result.resolving
        assert result.witness is None

    def test_cycle_single_landmark_fails_with_neighbours(self) -> None:
        result = is_resolving_set(cycle_graph(5), [0])
        assert not result.resolving
        assert result.witness == (1, 4)

    def test_in_edge_set_resolves_line_digraph(self) -> None:
        line = directed_line_graph(complete_digraph(3)).line
        assert is_resolving_set(line, [3, 4, 5]).resolving

    def test_disconnected(self) -> None:
        with pytest.raises(DisconnectedGraphError):
            is_resolving_set(Graph.from_edges(4, [(0, 1), (2, 3)]), [0])

    def test_empty_landmarks(self) -> None:
        with pytest.raises(PreconditionError):
            is_resolving_set(path_graph(3), [])

    def test_landmark_out_of_range(self) -> None:
        with pytest.raises(GraphStructureError):
            is_resolving_set(path_graph(3), [3])

    def test_all_but_one_vertex_resolves(self) -> None:
        for g in connected_graphs(5):
            for v in range(g.n):
                assert is_resolving_set(g, [u for u in range(g.n) if u != v]).resolving

    @pytest.mark.slow
    def test_superset_of_resolving_set_resolves(self) -> None:
        rng = np.random.default_rng(11)
        graphs = connected_graphs(6)
        checked = 0
        while checked < 1000:
            g = graphs[int(rng.integers(len(graphs)))]
            size = int(rng.integers(1, g.n))
            landmarks = sorted(rng.choice(g.n, size=size, replace=False).tolist())
            if not is_resolving_set(g, landmarks).resolving:
                continue
            extra = [v for v in range(g.n) if v not in landmarks and rng.random() < 0.5]
            assert is_resolving_set(g, landmarks + extra).resolving
            checked += 1


class TestCertificate:
    def test_build_and_verify(self) -> None:
        dm = all_pairs_distances(cycle_graph(5))
        cert = build_certificate(dm, [0, 1], mu_claimed=2)
        assert cert.vectors[3] == (2, 2)
        assert cert.verify(dm)

    def test_tampered_vectors_fail(self) -> None:
        dm = all_pairs_distances(cycle_graph(5))
        cert = build_certificate(dm, [0, 1])
        cert.vectors[3] = (2, 1)
        assert not cert.verify(dm)

    def test_non_resolving_landmarks_fail_replay(self) -> None:
        dm = all_pairs_distances(cycle_graph(5))
        assert not build_certificate(dm, [0]).verify(dm)


class TestDistinguishingMasks:
    def test_path_three(self) -> None:
        dm = all_pairs_distances(path_graph(3))
        # pairs (0,1), (0,2), (1,2); vertex 1 cannot split (0,2)
        assert distinguishing_masks(dm).tolist() == [0b111, 0b101, 0b111]
