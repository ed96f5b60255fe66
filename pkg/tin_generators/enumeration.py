"""Graphs on n vertices up to isomorphism, optionally within a hereditary class.

Level k+1 is built from level k by adding a vertex with every possible
neighbourhood and keeping one graph per canonical form. For a
hereditary predicate a graph that fails it is never extended, since
every graph in the class arises from a member of the class one vertex
smaller.
"""

import logging
from typing import Callable, Dict, Iterator, List, Optional

from tin_common.errors import CapExceededError, PreconditionError
from tin_common.graph import Graph
from tin_generators.canonical import canonical_form, canonical_graph

__all__ = ["enumerate_graphs", "enumerate_levels", "free_predicate", "ENUMERATE_CAP"]

logger = logging.getLogger(__name__)

ENUMERATE_CAP = 9

Predicate = Callable[[Graph], bool]


def free_predicate(t: int, r: int = 6) -> Predicate:
    """Membership in the {P_r, K_{2,t}}-free class."""
    from tin_patterns.paths import is_free

    return lambda G: is_free(G, t, r)


def _extensions(G: Graph) -> Iterator[Graph]:
    edges = G.edges()
    for mask in range(1 << G.n):
        yield Graph(G.n + 1, edges + [(v, G.n) for v in range(G.n) if mask >> v & 1])


def enumerate_levels(n: int, predicate: Optional[Predicate] = None,
                     cap: int = ENUMERATE_CAP) -> Iterator[List[Graph]]:
    """Yield, for k = 1..n, the canonical representatives on k vertices.

    :raises CapExceededError: when n exceeds `cap`
    """
    if n < 1:
        raise PreconditionError(cause="enumeration needs n >= 1, got %s" % n)
    if n > cap:
        raise CapExceededError(what="graph enumeration", cap=cap, n=n)
    keep = predicate or (lambda G: True)
    level = [Graph(1)] if keep(Graph(1)) else []
    yield level
    for k in range(2, n + 1):
        seen: Dict[str, Graph] = {}
        for G in level:
            for H in _extensions(G):
                form = canonical_form(H)
                if form in seen:
                    continue
                if keep(H):
                    seen[form] = canonical_graph(H)
                else:
                    seen[form] = None
        level = [H for _, H in sorted(seen.items()) if H is not None]
        logger.debug(f"{len(level)} classes on {k} vertices")
        yield level


def enumerate_graphs(n: int, predicate: Optional[Predicate] = None,
                     cap: int = ENUMERATE_CAP) -> Iterator[Graph]:
    """Every graph on n vertices up to isomorphism, as canonical representatives in graph6 order."""
    level = []
    for level in enumerate_levels(n, predicate, cap):
        pass
    yield from level
