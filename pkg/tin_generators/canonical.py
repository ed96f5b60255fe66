"""Canonical labelling by colour refinement and individualisation.

The colouring is refined until stable; while some colour class has more
than one vertex, each vertex of the first such class is individualised
in turn and the search recurses. Every discrete colouring gives an
ordering of the vertices, and the ordering whose adjacency string is
smallest is canonical. Twins in a class are interchangeable, so only
one vertex per twin class is individualised.
"""

import logging
from collections import Counter
from typing import List, Optional, Tuple

from tin_common.formats import to_graph6
from tin_common.graph import Graph

__all__ = ["refine", "canonical_order", "canonical_graph", "canonical_form", "is_isomorphic"]

logger = logging.getLogger(__name__)


def refine(G: Graph, colors: List[int]) -> List[int]:
    """Refine `colors` until vertices of one colour see the same multiset of colours."""
    count = len(set(colors))
    while True:
        signatures = [(colors[v], tuple(sorted(colors[u] for u in G.adj(v)))) for v in range(G.n)]
        rank = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colors = [rank[sig] for sig in signatures]
        if len(rank) == count:
            return colors
        count = len(rank)


def _adjacency_key(G: Graph, order: List[int]) -> Tuple[int, ...]:
    return tuple(int(G.has_edge(order[i], order[j])) for j in range(len(order)) for i in range(j))


def _twin_representatives(G: Graph, cell: List[int]) -> List[int]:
    """One vertex per class of u ~ v iff N(u) - v = N(v) - u."""
    chosen = []
    for v in cell:
        if not any(G.adj(u) - {v} == G.adj(v) - {u} for u in chosen):
            chosen.append(v)
    return chosen


def canonical_order(G: Graph) -> List[int]:
    """Vertices listed in canonical position order."""
    best_key: Optional[Tuple[int, ...]] = None
    best_order: List[int] = []

    def search(colors):
        nonlocal best_key, best_order
        colors = refine(G, colors)
        sizes = Counter(colors)
        split = [c for c in sorted(sizes) if sizes[c] > 1]
        if not split:
            order = sorted(range(G.n), key=colors.__getitem__)
            key = _adjacency_key(G, order)
            if best_key is None or key < best_key:
                best_key, best_order = key, order
            return
        cell = [v for v in range(G.n) if colors[v] == split[0]]
        for v in _twin_representatives(G, cell):
            individualised = [2 * c + 1 for c in colors]
            individualised[v] -= 1
            search(individualised)

    search([0] * G.n)
    return best_order


def _relabelled_edges(G: Graph, order: List[int]):
    position = {v: i for i, v in enumerate(order)}
    return [(position[u], position[v]) for u, v in G.edges()]


def canonical_graph(G: Graph) -> Graph:
    """G relabelled so that vertex i is the vertex in canonical position i."""
    return Graph(G.n, _relabelled_edges(G, canonical_order(G)))


def canonical_form(G: Graph) -> str:
    """graph6 of the canonical relabelling; equal exactly for isomorphic graphs."""
    return to_graph6(canonical_graph(G))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.edge_count == H.edge_count and canonical_form(G) == canonical_form(H)
