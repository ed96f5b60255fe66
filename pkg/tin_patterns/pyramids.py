"""Pyramids: an apex joined to t legs, each leg matched to one vertex of a base clique."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from tin_common.errors import BudgetExhaustedError, PreconditionError
from tin_common.graph import Graph, VertexSet, is_clique

__all__ = ["PyramidPresentation", "is_pyramid_presentation", "check_presentation",
           "find_t_pyramid", "is_simplicial_pyramid", "basic_vertices", "DEFAULT_BUDGET"]

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True)
class PyramidPresentation:
    """A t-pyramid named inside a host graph.

    :param apex: the apex a
    :param legs: x_1..x_t, the neighbours of the apex
    :param base: y_1..y_t, where y_i is matched to x_i
    """

    apex: int
    legs: Tuple[int, ...]
    base: Tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.legs)

    @property
    def vertices(self) -> VertexSet:
        return frozenset((self.apex,) + self.legs + self.base)

    def relabelled(self, labels: Sequence[int]) -> "PyramidPresentation":
        return PyramidPresentation(labels[self.apex], tuple(labels[x] for x in self.legs),
                                   tuple(labels[y] for y in self.base))

    def lowered(self, G: Graph) -> "PyramidPresentation":
        """The same pyramid in the local ids of the induced subgraph G."""
        index = {label: i for i, label in enumerate(G.labels)}
        return PyramidPresentation(index[self.apex], tuple(index[x] for x in self.legs),
                                   tuple(index[y] for y in self.base))

    def restricted(self, keep: int) -> "PyramidPresentation":
        """The sub-pyramid on the first `keep` legs."""
        return PyramidPresentation(self.apex, self.legs[:keep], self.base[:keep])

    def to_dict(self):
        return {"apex": self.apex, "legs": list(self.legs), "base": list(self.base)}


def _expected_edges(p: PyramidPresentation):
    edges = {frozenset((p.apex, x)) for x in p.legs}
    edges |= {frozenset(pair) for pair in zip(p.legs, p.base)}
    edges |= {frozenset(pair) for pair in combinations(p.base, 2)}
    return edges


def is_pyramid_presentation(G: Graph, p: PyramidPresentation) -> bool:
    """True iff the 2t+1 vertices are distinct and induce exactly the pyramid edges."""
    if p.t < 2 or len(p.base) != p.t:
        return False
    vs = (p.apex,) + p.legs + p.base
    if len(set(vs)) != len(vs) or any(not (0 <= v < G.n) for v in vs):
        return False
    expected = _expected_edges(p)
    return all(G.has_edge(u, v) == (frozenset((u, v)) in expected) for u, v in combinations(vs, 2))


def check_presentation(G: Graph, p: PyramidPresentation):
    if not is_pyramid_presentation(G, p):
        raise PreconditionError(cause="%s is not a pyramid presentation in the host graph" % (p.to_dict(),))


def find_t_pyramid(G: Graph, t: int, apexes: Optional[Iterable[int]] = None,
                   bases: Optional[Iterable[int]] = None, legs: Optional[Iterable[int]] = None,
                   budget: int = DEFAULT_BUDGET) -> Optional[PyramidPresentation]:
    """Exact backtracking search for a t-pyramid.

    Leg/base pairs are chosen with increasing leg ids. The optional
    `apexes`, `bases` and `legs` restrict where those parts may lie.

    :raises BudgetExhaustedError: when more than `budget` search nodes
        are expanded
    """
    if t < 2:
        raise PreconditionError(cause="a t-pyramid needs t >= 2, got %s" % t)
    apex_pool = sorted(range(G.n) if apexes is None else set(apexes))
    base_pool = None if bases is None else frozenset(bases)
    leg_pool = None if legs is None else frozenset(legs)
    nodes = 0

    def extend(a, chosen_x, chosen_y, leg_cand):
        nonlocal nodes
        if len(chosen_x) == t:
            return PyramidPresentation(a, tuple(chosen_x), tuple(chosen_y))
        for x in leg_cand:
            if chosen_x and x <= chosen_x[-1]:
                continue
            if any(G.has_edge(x, z) for z in chosen_x) or any(G.has_edge(x, z) for z in chosen_y):
                continue
            for y in sorted(G.adj(x)):
                nodes += 1
                if nodes > budget:
                    raise BudgetExhaustedError(search="find_t_pyramid", budget=budget)
                if y == a or y in G.adj(a) or y in chosen_y:
                    continue
                if base_pool is not None and y not in base_pool:
                    continue
                if not all(G.has_edge(y, z) for z in chosen_y):
                    continue
                if any(G.has_edge(y, z) for z in chosen_x):
                    continue
                found = extend(a, chosen_x + [x], chosen_y + [y], leg_cand)
                if found:
                    return found
        return None

    for a in apex_pool:
        leg_cand = sorted(x for x in G.adj(a) if leg_pool is None or x in leg_pool)
        if len(leg_cand) < t:
            continue
        found = extend(a, [], [], leg_cand)
        if found:
            logger.debug(f"{t}-pyramid found: {found.to_dict()} after {nodes} nodes")
            return found
    return None


def is_simplicial_pyramid(G: Graph, p: PyramidPresentation) -> Tuple[bool, List[int]]:
    """Check every outside vertex sees a non-empty clique of the pyramid; returns (ok, violators)."""
    check_presentation(G, p)
    inside = p.vertices
    violators = []
    for v in range(G.n):
        if v in inside:
            continue
        seen = G.adj(v) & inside
        if not seen or not is_clique(G, seen):
            violators.append(v)
    return not violators, violators


def basic_vertices(G: Graph, p: PyramidPresentation, among: Optional[Iterable[int]] = None) -> VertexSet:
    """Outside vertices whose neighbourhood in the pyramid is exactly its base."""
    inside = p.vertices
    base = frozenset(p.base)
    pool = range(G.n) if among is None else among
    return frozenset(v for v in pool if v not in inside and (G.adj(v) & inside) == base)
