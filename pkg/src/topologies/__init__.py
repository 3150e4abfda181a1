"""de Bruijn, Kautz and complete-digraph generators."""

from src.topologies.generators import TopologyFamily, TopologySpec, de_bruijn, kautz
from src.topologies.recursion import corollary_mu, cross_check_recursion

__all__ = [
    "TopologyFamily",
    "TopologySpec",
    "corollary_mu",
    "cross_check_recursion",
    "de_bruijn",
    "kautz",
]
