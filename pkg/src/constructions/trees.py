"""Terminal-vertex profile of a tree and the σ(T) - ex(T) formulas.

For a tree T that is not a path, μ(T) = μ(L(T)) = σ(T) - ex(T). The vertex
landmarks are all end-vertices except one terminal vertex per exterior major
vertex; the line landmarks are their pendant edges.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from src.graph.core import Graph
from src.graph.distances import all_pairs_distances
from src.graph.errors import PreconditionError, VerificationError
from src.graph.line_graph import undirected_line_graph
from src.graph.predicates import structural_predicates
from src.metric.resolving import is_resolving_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeProfile:
    """End, major and exterior major vertices of a tree.

    Attributes:
        end_vertices: Degree-1 vertices, ascending.
        major_vertices: Vertices of degree >= 3, ascending.
        exterior_major: Major vertices with at least one terminal vertex.
        terminal_map: Exterior major vertex -> its terminal vertices, ascending.
        sigma: Total number of terminal vertices.
        ex: Number of exterior major vertices.
    """

    end_vertices: tuple[int, ...]
    major_vertices: tuple[int, ...]
    exterior_major: tuple[int, ...]
    terminal_map: dict[int, tuple[int, ...]]
    sigma: int
    ex: int


@dataclass(frozen=True)
class TreeLineResult:
    mu: int
    landmarks: tuple[int, ...]
    vertex_landmarks: tuple[int, ...]


def _require_non_path_tree(t: Graph) -> None:
    shape = structural_predicates(t)
    if not shape.is_tree:
        raise PreconditionError("Input graph is not a tree")
    if shape.is_path:
        raise PreconditionError("Input tree is a path; σ(T) and ex(T) are undefined")


def tree_profile(t: Graph) -> TreeProfile:
    """Classify the vertices of ``t``.

    An end-vertex is terminal for a major vertex only when it is strictly
    closer to it than to every other major vertex.

    Raises:
        PreconditionError: ``t`` is not a tree, or is a path.
    """
    _require_non_path_tree(t)
    degrees = t.degrees()
    ends = tuple(v for v in range(t.n) if degrees[v] == 1)
    majors = tuple(v for v in range(t.n) if degrees[v] >= 3)

    d = all_pairs_distances(t).matrix
    terminals: dict[int, list[int]] = {}
    major_idx = np.array(majors)
    for u in ends:
        row = d[u, major_idx]
        nearest = int(row.min())
        if int(np.count_nonzero(row == nearest)) == 1:
            terminals.setdefault(majors[int(np.argmin(row))], []).append(u)

    terminal_map = {v: tuple(sorted(us)) for v, us in sorted(terminals.items())}
    return TreeProfile(
        end_vertices=ends,
        major_vertices=majors,
        exterior_major=tuple(terminal_map),
        terminal_map=terminal_map,
        sigma=sum(len(us) for us in terminal_map.values()),
        ex=len(terminal_map),
    )


def tree_metric_dimension(t: Graph) -> int:
    """μ(T) = σ(T) - ex(T) for a tree that is not a path."""
    profile = tree_profile(t)
    return profile.sigma - profile.ex


def tree_line_metric_dimension(
    t: Graph,
    rng: np.random.Generator | None = None,
) -> TreeLineResult:
    """μ(L(T)) with a minimum resolving set of L(T).

    One terminal vertex per exterior major vertex is left out of the vertex
    landmarks: the smallest id, or a random one when ``rng`` is given. Both
    the vertex landmarks (on T) and the pendant-edge landmarks (on L(T)) are
    re-verified.

    Raises:
        PreconditionError: ``t`` is not a tree, or is a path (μ(L(P)) = 1).
        VerificationError: a landmark set fails to resolve.
    """
    profile = tree_profile(t)

    skipped = set()
    for v, terms in profile.terminal_map.items():
        choice = terms[0] if rng is None else terms[int(rng.integers(len(terms)))]
        logger.debug("Exterior major %d: leaving out terminal vertex %d", v, choice)
        skipped.add(choice)

    vertex_landmarks = tuple(u for u in profile.end_vertices if u not in skipped)
    line_landmarks = tuple(sorted(t.incident_edges[u][0] for u in vertex_landmarks))

    on_tree = is_resolving_set(t, vertex_landmarks)
    if not on_tree.resolving:
        raise VerificationError(
            f"Vertex landmarks {vertex_landmarks} do not resolve T; {on_tree.witness} collide"
        )
    on_line = is_resolving_set(undirected_line_graph(t).line, line_landmarks)
    if not on_line.resolving:
        raise VerificationError(
            f"Pendant edges {line_landmarks} do not resolve L(T); {on_line.witness} collide"
        )

    return TreeLineResult(
        mu=profile.sigma - profile.ex,
        landmarks=line_landmarks,
        vertex_landmarks=vertex_landmarks,
    )
