"""Immutable simple graph and digraph with dense integer vertex ids.

Vertices are ``0..n-1``. Edge ids are positions in the input edge sequence
and stay stable, so line-graph vertices can reuse them directly.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from src.graph.errors import GraphStructureError


def _check_endpoint(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise GraphStructureError(f"Endpoint {v} outside vertex range 0..{n - 1}")


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    Attributes:
        n: Vertex count.
        edges: Edge ``i`` as the normalized pair ``(u, v)`` with ``u < v``.
        adjacency: Sorted neighbor tuple per vertex.
        incident_edges: Sorted incident edge ids per vertex.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    incident_edges: tuple[tuple[int, ...], ...]

    directed = False

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        """Validate an edge list and freeze it into a ``Graph``.

        Raises:
            GraphStructureError: negative ``n``, out-of-range endpoint,
                self-loop or repeated edge.
        """
        if n < 0:
            raise GraphStructureError(f"Vertex count must be non-negative, got {n}")

        edges: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        neighbors: list[list[int]] = [[] for _ in range(n)]
        incident: list[list[int]] = [[] for _ in range(n)]

        for u, v in pairs:
            _check_endpoint(n, u)
            _check_endpoint(n, v)
            if u == v:
                raise GraphStructureError(f"Self-loop at {u} not allowed in an undirected graph")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphStructureError(f"Parallel edge {key[0]}-{key[1]}")
            seen.add(key)
            eid = len(edges)
            edges.append(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
            incident[u].append(eid)
            incident[v].append(eid)

        return cls(
            n=n,
            edges=tuple(edges),
            adjacency=tuple(tuple(sorted(nb)) for nb in neighbors),
            incident_edges=tuple(tuple(inc) for inc in incident),
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edge_id(self, u: int, v: int) -> int:
        """Return the id of edge ``{u, v}``."""
        key = (min(u, v), max(u, v))
        for eid in self.incident_edges[u]:
            if self.edges[eid] == key:
                return eid
        raise GraphStructureError(f"No edge {u}-{v}")


@dataclass(frozen=True)
class DiGraph:
    """Directed simple graph; loops only when ``allows_loops`` is set.

    For an arc ``a = (x, y)``, ``x`` is the head and ``y`` the tail. A loop
    at ``x`` is listed in both ``out_edges[x]`` and ``in_edges[x]``.

    Attributes:
        n: Vertex count.
        edges: Arc ``i`` as ``(head, tail)``.
        out_edges: Ascending ids of arcs leaving each vertex.
        in_edges: Ascending ids of arcs entering each vertex.
        allows_loops: Whether self-loops were permitted at build time.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    out_edges: tuple[tuple[int, ...], ...]
    in_edges: tuple[tuple[int, ...], ...]
    allows_loops: bool = False

    directed = True

    @classmethod
    def from_edges(
        cls,
        n: int,
        arcs: Iterable[tuple[int, int]],
        allows_loops: bool = False,
    ) -> DiGraph:
        """Validate an arc list and freeze it into a ``DiGraph``.

        Raises:
            GraphStructureError: negative ``n``, out-of-range endpoint,
                repeated arc, or a loop without ``allows_loops``.
        """
        if n < 0:
            raise GraphStructureError(f"Vertex count must be non-negative, got {n}")

        edges: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        out_lists: list[list[int]] = [[] for _ in range(n)]
        in_lists: list[list[int]] = [[] for _ in range(n)]

        for head, tail in arcs:
            _check_endpoint(n, head)
            _check_endpoint(n, tail)
            if head == tail and not allows_loops:
                raise GraphStructureError(
                    f"Self-loop at {head} requires allows_loops=True"
                )
            if (head, tail) in seen:
                raise GraphStructureError(f"Parallel arc {head}->{tail}")
            seen.add((head, tail))
            eid = len(edges)
            edges.append((head, tail))
            out_lists[head].append(eid)
            in_lists[tail].append(eid)

        return cls(
            n=n,
            edges=tuple(edges),
            out_edges=tuple(tuple(x) for x in out_lists),
            in_edges=tuple(tuple(x) for x in in_lists),
            allows_loops=allows_loops,
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def loop_count(self) -> int:
        return sum(1 for head, tail in self.edges if head == tail)

    def head(self, e: int) -> int:
        return self.edges[e][0]

    def tail(self, e: int) -> int:
        return self.edges[e][1]

    def out_degrees(self) -> list[int]:
        return [len(x) for x in self.out_edges]

    def in_degrees(self) -> list[int]:
        return [len(x) for x in self.in_edges]

    def successors(self, v: int) -> list[int]:
        return [self.edges[e][1] for e in self.out_edges[v]]

    def neighbors(self, v: int) -> list[int]:
        """Out-neighbors; lets BFS treat both graph kinds alike."""
        return self.successors(v)
