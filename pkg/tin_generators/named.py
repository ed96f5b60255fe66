""" Named graph constructions """

import logging
from itertools import combinations
from typing import Callable, Dict

import networkx as nx

from tin_common.errors import PreconditionError
from tin_common.graph import Graph
from tin_patterns.pyramids import PyramidPresentation

__all__ = ["path", "cycle", "complete", "complete_bipartite", "t_pyramid", "t_pyramid_presentation",
           "comb", "pyramid_fan", "subdivided_star", "line_graph_of_subdivided_star", "one_subdivision",
           "line_graph", "star", "named", "NAMED", "WRAPPERS"]

logger = logging.getLogger(__name__)


def _check(condition: bool, cause: str):
    if not condition:
        raise PreconditionError(cause=cause)


def path(n: int) -> Graph:
    """P_n, the path on n vertices."""
    _check(n >= 1, "a path needs at least one vertex, got %s" % n)
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _check(n >= 3, "a cycle needs at least three vertices, got %s" % n)
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _check(n >= 0, "vertex count must be non-negative, got %s" % n)
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}; the side of size s is 0..s-1."""
    _check(s >= 1 and t >= 1, "both sides need a vertex, got %s and %s" % (s, t))
    return Graph(s + t, ((u, s + v) for u in range(s) for v in range(t)))


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def t_pyramid_presentation(t: int) -> PyramidPresentation:
    """Apex 0, legs 1..t, base t+1..2t."""
    return PyramidPresentation(0, tuple(range(1, t + 1)), tuple(range(t + 1, 2 * t + 1)))


def t_pyramid(t: int) -> Graph:
    """The t-pyramid on 2t+1 vertices."""
    _check(t >= 2, "a t-pyramid needs t >= 2, got %s" % t)
    p = t_pyramid_presentation(t)
    edges = [(p.apex, x) for x in p.legs] + list(zip(p.legs, p.base)) + list(combinations(p.base, 2))
    return Graph(2 * t + 1, edges)


def comb(k: int) -> Graph:
    """A spine path 0..k-1 with a tooth k+i hanging from each spine vertex i."""
    _check(k >= 1, "a comb needs a spine vertex, got %s" % k)
    spine = [(i, i + 1) for i in range(k - 1)]
    return Graph(2 * k, spine + [(i, k + i) for i in range(k)])


def pyramid_fan(k: int) -> Graph:
    """Apex 0 with legs 1..k, a base clique k+1..2k matched to the legs, and 2k+1 complete to the base.

    Every leg lies on an induced path of three edges from the apex to 2k+1.
    """
    _check(k >= 3, "a pyramid fan needs k >= 3, got %s" % k)
    base = list(range(k + 1, 2 * k + 1))
    edges = [(0, x) for x in range(1, k + 1)] + [(x, x + k) for x in range(1, k + 1)]
    edges += list(combinations(base, 2)) + [(y, 2 * k + 1) for y in base]
    return Graph(2 * k + 2, edges)


def one_subdivision(G: Graph) -> Graph:
    """Replace every edge by a path of length two; subdivision vertices come after the originals."""
    edges = []
    for i, (u, v) in enumerate(G.edges()):
        middle = G.n + i
        edges += [(u, middle), (middle, v)]
    return Graph(G.n + G.edge_count, edges)


def line_graph(G: Graph) -> Graph:
    """Vertices are the edges of G in sorted order."""
    return Graph.from_networkx(nx.line_graph(G.nx_graph))


def subdivided_star(k: int) -> Graph:
    return one_subdivision(star(k))


def line_graph_of_subdivided_star(k: int) -> Graph:
    """A k-clique with a pendant vertex on each of its vertices."""
    return line_graph(subdivided_star(k))


NAMED: Dict[str, Callable[..., Graph]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "t_pyramid": t_pyramid,
    "comb": comb,
    "pyramid_fan": pyramid_fan,
    "subdivided_star": subdivided_star,
    "line_graph_of_subdivided_star": line_graph_of_subdivided_star
}


# constructions applied to another graph, given as `of`
WRAPPERS: Dict[str, Callable[[Graph], Graph]] = {
    "one_subdivision": one_subdivision,
    "line_graph": line_graph
}


def named(kind: str, **params) -> Graph:
    """Build the named graph `kind` from keyword parameters.

    The wrappers in WRAPPERS take the graph they act on as ``of``, either
    a Graph or a mapping ``{"name": ..., **params}`` built by this function,
    e.g. ``named("line_graph", of={"name": "cycle", "n": 5})``.
    """
    if kind in WRAPPERS:
        inner = params.pop("of", None)
        if params:
            raise PreconditionError(cause="bad parameters for %s: unexpected %s" % (kind, sorted(params)))
        if isinstance(inner, dict):
            inner = dict(inner)
            inner = named(inner.pop("name", None), **inner)
        if not isinstance(inner, Graph):
            raise PreconditionError(cause="%s needs the graph it acts on as 'of'" % kind)
        return WRAPPERS[kind](inner)
    try:
        build = NAMED[kind]
    except KeyError:
        raise PreconditionError(cause="unknown construction %s, expected one of %s"
                                % (kind, ", ".join(sorted(set(NAMED) | set(WRAPPERS)))))
    try:
        return build(**params)
    except TypeError as err:
        raise PreconditionError(cause="bad parameters for %s: %s" % (kind, err))
