"""Published closed forms for μ(L(G)) on named families.

These are test expectations only. Parameters outside the range a formula
is known for are refused rather than extrapolated.
"""

from __future__ import annotations

import math
from enum import Enum

from src.graph.errors import PreconditionError


class LineFamily(str, Enum):
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    STAR = "star"
    PATH = "path"
    DIRECTED_CYCLE = "directed_cycle"


def _bipartite(m: int, n: int) -> int:
    m, n = min(m, n), max(m, n)
    if m < 1 or n < 2:
        raise PreconditionError(f"K_{{{m},{n}}} is outside the known range (n >= 2)")
    if n >= 2 * m:
        return n - 1
    return 2 * (m + n - 1) // 3


def known_line_mu(family: LineFamily | str, n: int, m: int | None = None) -> int:
    """μ(L(G)) for a named family.

    Args:
        family: One of ``LineFamily``.
        n: Family size: K_n, K_{1,n}, P_n (vertices), directed n-cycle, or
            the second part of K_{m,n}.
        m: First part of K_{m,n}; required for that family only.

    Raises:
        PreconditionError: unknown family or parameters outside the known range.
    """
    try:
        family = LineFamily(family)
    except ValueError:
        raise PreconditionError(f"Unknown family {family!r}") from None

    if family is LineFamily.COMPLETE:
        if n < 6:
            raise PreconditionError(f"μ(L(K_n)) is only known for n >= 6, got {n}")
        return math.ceil(2 * n / 3)
    if family is LineFamily.COMPLETE_BIPARTITE:
        if m is None:
            raise PreconditionError("complete_bipartite needs both part sizes")
        return _bipartite(m, n)
    if family is LineFamily.STAR:
        if n < 2:
            raise PreconditionError(f"L(K_{{1,n}}) needs n >= 2, got {n}")
        return n - 1
    if family is LineFamily.PATH:
        if n < 3:
            raise PreconditionError(f"L(P_n) needs n >= 3, got {n}")
        return 1
    if n < 2:
        raise PreconditionError(f"Directed cycle needs n >= 2, got {n}")
    return 1
