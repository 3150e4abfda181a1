"""Edge-list graph files.

Format::

    # comments and blank lines are ignored
    digraph loops        <- "graph" or "digraph", optional "loops"
    a b                  <- one edge per line, two whitespace-separated labels

Labels are arbitrary strings, numbered in first-appearance order.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from src.graph.core import DiGraph, Graph


class GraphFormatError(ValueError):
    """Malformed graph file; ``line_no`` is 1-based, 0 when not line-specific."""

    def __init__(self, message: str, line_no: int = 0) -> None:
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}" if line_no else message)


@dataclass(frozen=True)
class ParsedGraph:
    graph: Graph | DiGraph
    labels: list[str]

    def label_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}


def _content_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line_no, line


def parse_graph_text(text: str) -> ParsedGraph:
    """Parse edge-list text into a graph and its vertex labels.

    Raises:
        GraphFormatError: missing or bad header, malformed edge line,
            duplicate edge, or a loop where loops are not allowed.
    """
    lines = _content_lines(text)
    first = next(lines, None)
    if first is None:
        raise GraphFormatError("empty file: expected a 'graph' or 'digraph' header")

    header_no, header = first
    tokens = header.split()
    if tokens[0] not in ("graph", "digraph") or tokens[1:] not in ([], ["loops"]):
        raise GraphFormatError(f"bad header {header!r}", header_no)
    directed = tokens[0] == "digraph"
    allows_loops = tokens[1:] == ["loops"]
    if allows_loops and not directed:
        raise GraphFormatError("'loops' is only allowed for digraphs", header_no)

    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for line_no, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two labels, got {line!r}", line_no)
        u, v = (index.setdefault(label, len(index)) for label in parts)
        if u == v and not allows_loops:
            raise GraphFormatError(f"loop at {parts[0]!r} needs the 'loops' header", line_no)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {parts[0]} {parts[1]} (first on line {seen[key]})", line_no)
        seen[key] = line_no
        edges.append((u, v))

    labels = list(index)
    if directed:
        graph: Graph | DiGraph = DiGraph.from_edges(len(labels), edges, allows_loops=allows_loops)
    else:
        graph = Graph.from_edges(len(labels), edges)
    return ParsedGraph(graph=graph, labels=labels)


def read_graph_file(path: str | Path) -> ParsedGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_graph_text(text)


def format_graph_file(g: Graph | DiGraph, labels: list[str]) -> str:
    """Canonical text: header, then one line per edge in edge-id order."""
    if g.directed:
        header = "digraph loops" if g.allows_loops else "digraph"
    else:
        header = "graph"
    body = [f"{labels[u]} {labels[v]}" for u, v in g.edges]
    return "\n".join([header, *body]) + "\n"


def write_graph_file(path: str | Path, g: Graph | DiGraph, labels: list[str]) -> None:
    Path(path).write_text(format_graph_file(g, labels), encoding="utf-8")
