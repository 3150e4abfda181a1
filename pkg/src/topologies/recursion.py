"""Closed-form metric dimensions and the line-digraph recursion check.

B(d, n) = L(B(d, n-1)) and K(d, n) = L(K(d, n-1)). The check compares the
word-built digraph with the order-1 digraph put through the line-digraph
operator n - 1 times, on invariant fingerprints, not by isomorphism.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple

import pandas as pd

from src.graph.core import DiGraph
from src.graph.errors import PreconditionError
from src.graph.line_graph import iterated_line_digraph
from src.graph.predicates import is_strongly_connected
from src.metric.config import SolverConfig, load_solver_config
from src.metric.solver import exact_metric_dimension
from src.topologies.generators import TopologyFamily, TopologySpec, parse_family

logger = logging.getLogger(__name__)

FINGERPRINT_NOTE = "Invariant fingerprints are compared; isomorphism is not tested."


def corollary_mu(family: TopologyFamily | str, d: int, n: int) -> int:
    """μ of B(d, n) or K(d, n) from the line-digraph formula.

    B(d, n): d^(n-1) (d - 1). K(d, n): d when n = 1, else d^(n-2) (d^2 - 1).
    """
    family = parse_family(family)
    if d < 2 or n < 1:
        raise PreconditionError(f"Closed form needs d >= 2 and n >= 1, got d={d}, n={n}")
    if family is TopologyFamily.DE_BRUIJN:
        return d ** (n - 1) * (d - 1)
    if family is TopologyFamily.KAUTZ:
        return d if n == 1 else d ** (n - 2) * (d * d - 1)
    raise PreconditionError(f"No closed form for family {family.value!r}")


class RecursionCheck(NamedTuple):
    name: str
    direct: object
    recursive: object
    passed: bool


@dataclass(frozen=True)
class RecursionReport:
    family: TopologyFamily
    d: int
    n: int
    checks: tuple[RecursionCheck, ...]
    note: str

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {"check": c.name, "direct": str(c.direct), "recursive": str(c.recursive), "pass": c.passed}
                for c in self.checks
            ]
        )


def _fingerprint(g: DiGraph) -> dict[str, object]:
    return {
        "vertices": g.n,
        "arcs": g.m,
        "loops": g.loop_count,
        "in_degrees": tuple(sorted(g.in_degrees())),
        "out_degrees": tuple(sorted(g.out_degrees())),
        "strongly_connected": is_strongly_connected(g),
    }


def cross_check_recursion(
    family: TopologyFamily | str,
    d: int,
    n: int,
    config: SolverConfig | None = None,
) -> RecursionReport:
    """Compare the word-built order-n digraph with L^(n-1)(order 1).

    Exact μ of both sides is added as a check when the digraph fits under
    ``config.size_cap``; otherwise it is left out and the note says so.

    Raises:
        PreconditionError: ``n < 2`` or a family without the recursion.
    """
    family = parse_family(family)
    if family not in (TopologyFamily.DE_BRUIJN, TopologyFamily.KAUTZ):
        raise PreconditionError(f"Family {family.value!r} has no line-digraph recursion")
    if n < 2:
        raise PreconditionError(f"Recursion check needs n >= 2, got {n}")
    config = config or load_solver_config()

    direct = TopologySpec(family, d, n).build()
    recursive = iterated_line_digraph(TopologySpec(family, d, 1).build(), n - 1)

    left, right = _fingerprint(direct), _fingerprint(recursive)
    checks = [RecursionCheck(k, left[k], right[k], left[k] == right[k]) for k in left]

    note = FINGERPRINT_NOTE
    if direct.n <= config.size_cap and recursive.n <= config.size_cap:
        mu_direct = len(exact_metric_dimension(direct, config).landmarks)
        mu_recursive = len(exact_metric_dimension(recursive, config).landmarks)
        checks.append(RecursionCheck("mu", mu_direct, mu_recursive, mu_direct == mu_recursive))
    else:
        note = f"{note} Exact μ skipped: {direct.n} vertices exceed the size cap {config.size_cap}."

    report = RecursionReport(family, d, n, tuple(checks), note)
    logger.info("Recursion check %s(%d,%d): %s", family.value, d, n, "pass" if report.passed else "FAIL")
    return report
