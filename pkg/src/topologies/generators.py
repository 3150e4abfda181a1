"""Interconnection topologies built directly from words.

Vertices are words over the digit-letter alphabet ``0-9a-z``, numbered in
lexicographic order. B(d, 1) and K_d^+ therefore share the exact same
labelled arc list, and K(d, 1) is the complete digraph K_{d+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

from src.graph.core import DiGraph
from src.graph.errors import PreconditionError

SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"

Word = tuple[int, ...]


class TopologyFamily(str, Enum):
    DE_BRUIJN = "de_bruijn"
    KAUTZ = "kautz"
    FLOWERED_COMPLETE = "flowered_complete"
    COMPLETE_DIGRAPH = "complete_digraph"


def parse_family(value: TopologyFamily | str) -> TopologyFamily:
    try:
        return TopologyFamily(value)
    except ValueError:
        raise PreconditionError(f"Unknown topology family {value!r}") from None


def _check_alphabet(size: int) -> None:
    if size > len(SYMBOLS):
        raise PreconditionError(f"Alphabet of {size} symbols exceeds {len(SYMBOLS)}")


def _de_bruijn_words(d: int, n: int) -> list[Word]:
    return list(product(range(d), repeat=n))


def _kautz_words(d: int, n: int) -> list[Word]:
    return [w for w in product(range(d + 1), repeat=n) if all(a != b for a, b in zip(w, w[1:]))]


def _shift_digraph(words: list[Word], symbols: int, allows_loops: bool) -> DiGraph:
    index = {w: i for i, w in enumerate(words)}
    arcs = [
        (index[w], index[w[1:] + (a,)])
        for w in words
        for a in range(symbols)
        # Kautz words never repeat a symbol, even at n = 1
        if (allows_loops or a != w[-1]) and w[1:] + (a,) in index
    ]
    return DiGraph.from_edges(len(words), arcs, allows_loops=allows_loops)


def word_label(word: Word) -> str:
    return "".join(SYMBOLS[s] for s in word)


def flowered_complete(d: int) -> DiGraph:
    """K_d^+: all d^2 ordered pairs on d vertices, loops included."""
    if d < 1:
        raise PreconditionError(f"Flowered complete digraph needs d >= 1, got {d}")
    _check_alphabet(d)
    return DiGraph.from_edges(d, product(range(d), repeat=2), allows_loops=True)


def complete_digraph(k: int) -> DiGraph:
    """K_k: every ordered pair of distinct vertices, no loops."""
    if k < 1:
        raise PreconditionError(f"Complete digraph needs k >= 1, got {k}")
    _check_alphabet(k)
    return DiGraph.from_edges(k, [(i, j) for i, j in product(range(k), repeat=2) if i != j])


def de_bruijn(d: int, n: int) -> DiGraph:
    """B(d, n): length-n words over d symbols, arcs shift left and append.

    Has d^n vertices, d^(n+1) arcs and a loop at each constant word.
    """
    if d < 2 or n < 1:
        raise PreconditionError(f"de Bruijn digraph needs d >= 2 and n >= 1, got d={d}, n={n}")
    _check_alphabet(d)
    return _shift_digraph(_de_bruijn_words(d, n), d, allows_loops=True)


def kautz(d: int, n: int) -> DiGraph:
    """K(d, n): length-n words over d + 1 symbols with no equal neighbours.

    Has d^n + d^(n-1) vertices, d^(n+1) + d^n arcs and no loops.
    """
    if d < 2 or n < 1:
        raise PreconditionError(f"Kautz digraph needs d >= 2 and n >= 1, got d={d}, n={n}")
    _check_alphabet(d + 1)
    return _shift_digraph(_kautz_words(d, n), d + 1, allows_loops=False)


@dataclass(frozen=True)
class TopologySpec:
    """A family with its parameters; ``n`` is ignored by the complete families."""

    family: TopologyFamily
    d: int
    n: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", parse_family(self.family))

    def build(self) -> DiGraph:
        if self.family is TopologyFamily.DE_BRUIJN:
            return de_bruijn(self.d, self.n)
        if self.family is TopologyFamily.KAUTZ:
            return kautz(self.d, self.n)
        if self.family is TopologyFamily.FLOWERED_COMPLETE:
            return flowered_complete(self.d)
        return complete_digraph(self.d)

    def labels(self) -> list[str]:
        """Word label of every vertex, in id order."""
        if self.family is TopologyFamily.DE_BRUIJN:
            words = _de_bruijn_words(self.d, self.n)
        elif self.family is TopologyFamily.KAUTZ:
            words = _kautz_words(self.d, self.n)
        else:
            words = [(i,) for i in range(self.d)]
        return [word_label(w) for w in words]

    def expected_counts(self) -> tuple[int, int]:
        """(vertices, arcs) from the family's counting formulas."""
        d, n = self.d, self.n
        if self.family is TopologyFamily.DE_BRUIJN:
            return d**n, d ** (n + 1)
        if self.family is TopologyFamily.KAUTZ:
            return d**n + d ** (n - 1), d ** (n + 1) + d**n
        if self.family is TopologyFamily.FLOWERED_COMPLETE:
            return d, d * d
        return d, d * (d - 1)
