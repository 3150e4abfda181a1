"""Tests for line graph construction and the distance identity."""

from math import comb

import networkx as nx
import pytest

from src.graph.core import DiGraph
from src.graph.errors import DisconnectedGraphError, PreconditionError
from src.graph.families import complete_graph, directed_cycle, path_graph, star_graph
from src.graph.line_graph import (
    check_distance_identity,
    directed_line_graph,
    edge_label,
    iterated_line_digraph,
    undirected_line_graph,
)
from src.graph.predicates import is_directed_cycle, structural_predicates
from src.topologies.generators import complete_digraph, de_bruijn, flowered_complete, kautz
from tests.corpus import connected_graphs, random_strongly_connected, strongly_connected_non_cycles, to_nx


def _arc_set(g: DiGraph) -> set:
    lgm = directed_line_graph(g)
    return {(g.edges[a], g.edges[b]) for a, b in lgm.line.edges}


class TestDirectedLineGraph:
    def test_directed_cycle_stays_cycle(self) -> None:
        line = directed_line_graph(directed_cycle(3)).line
        assert line.n == 3
        assert is_directed_cycle(line)

    def test_flowered_two(self) -> None:
        line = directed_line_graph(flowered_complete(2)).line
        assert (line.n, line.m, line.loop_count) == (4, 8, 2)

    def test_complete_digraph_three(self) -> None:
        line = directed_line_graph(complete_digraph(3)).line
        assert (line.n, line.m) == (6, 12)

    def test_adjacency_rule(self) -> None:
        g = kautz(2, 2)
        lgm = directed_line_graph(g)
        for a, b in lgm.line.edges:
            assert g.tail(a) == g.head(b)
        expected = sum(i * o for i, o in zip(g.in_degrees(), g.out_degrees()))
        assert lgm.line.m == expected

    @pytest.mark.parametrize("g", [de_bruijn(2, 2), kautz(2, 2), complete_digraph(4)])
    def test_matches_networkx(self, g: DiGraph) -> None:
        expected = set(nx.line_graph(to_nx(g)).edges)
        assert _arc_set(g) == expected

    def test_bijection_round_trip(self) -> None:
        g = de_bruijn(2, 2)
        lgm = directed_line_graph(g)
        for e in range(g.m):
            assert lgm.from_line[lgm.to_line[e]] == e
            assert lgm.original_edge_endpoints[lgm.to_line[e]] == g.edges[e]

    def test_needs_an_arc(self) -> None:
        with pytest.raises(PreconditionError):
            directed_line_graph(DiGraph.from_edges(2, []))

    def test_iterated_matches_de_bruijn_counts(self) -> None:
        g = iterated_line_digraph(flowered_complete(2), 2)
        assert (g.n, g.m, g.loop_count) == (8, 16, 2)
        c = directed_cycle(4)
        assert iterated_line_digraph(c, 0) is c

    def test_iterated_rejects_negative(self) -> None:
        with pytest.raises(PreconditionError):
            iterated_line_digraph(directed_cycle(3), -1)


class TestUndirectedLineGraph:
    def test_star_to_triangle(self) -> None:
        line = undirected_line_graph(star_graph(3)).line
        assert (line.n, line.m) == (3, 3)

    def test_path_shortens(self) -> None:
        line = undirected_line_graph(path_graph(5)).line
        assert line.n == 4
        assert structural_predicates(line).is_path

    def test_complete_four(self) -> None:
        assert undirected_line_graph(complete_graph(4)).line.m == 12

    def test_needs_two_edges(self) -> None:
        with pytest.raises(PreconditionError):
            undirected_line_graph(path_graph(2))

    def test_edge_count_identity_on_atlas(self) -> None:
        for n in (4, 5):
            for g in connected_graphs(n):
                if g.m < 2:
                    continue
                line = undirected_line_graph(g).line
                assert line.m == sum(comb(d, 2) for d in g.degrees())
                assert structural_predicates(line).is_connected

    def test_edge_label(self) -> None:
        lgm = undirected_line_graph(path_graph(3))
        assert edge_label(lgm, 1, ["a", "b", "c"]) == "b—c"
        dlgm = directed_line_graph(directed_cycle(3))
        assert edge_label(dlgm, 2, ["x", "y", "z"]) == "z→x"


class TestDistanceIdentity:
    @pytest.mark.parametrize("g", [directed_cycle(3), complete_digraph(3), de_bruijn(2, 2)])
    def test_holds(self, g: DiGraph) -> None:
        assert check_distance_identity(g, directed_line_graph(g)) == []

    def test_requires_strong_connectivity(self) -> None:
        g = DiGraph.from_edges(3, [(0, 1), (1, 2)])
        with pytest.raises(DisconnectedGraphError):
            check_distance_identity(g, directed_line_graph(g))

    def test_reports_violations(self) -> None:
        # Distances of K_4 against the line digraph of a 4-cycle on the same vertices
        violations = check_distance_identity(complete_digraph(4), directed_line_graph(directed_cycle(4)))
        assert (0, 3, 3, 2) in violations
        assert all(v.lhs != v.rhs for v in violations)

    @pytest.mark.slow
    def test_holds_on_exhaustive_corpus(self) -> None:
        for n in (3, 4):
            for g in strongly_connected_non_cycles(n):
                assert check_distance_identity(g, directed_line_graph(g)) == []
        for g in random_strongly_connected(200):
            assert check_distance_identity(g, directed_line_graph(g)) == []
