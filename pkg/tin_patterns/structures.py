"""Structures attaching an independent set to a connected set.

A structure on a connected set C and an independent set Y outside it is
an induced subgraph G[X + Y'] with X inside C whose degree-one vertices
are exactly Y'. Three shapes are searched for: a star, the
1-subdivision of a star, and the line graph of the 1-subdivision of a
star. Two structures sharing their leaves across a minimal separator
combine into either a pyramid, an induced K_{2,t}, or a long induced
path; :func:`combine_structures` builds whichever one the pair of
shapes gives.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from tin_common.errors import BudgetExhaustedError, PreconditionError
from tin_common.graph import Graph, VertexSet, components, is_independent
from tin_patterns.paths import is_induced_k2t, is_induced_path
from tin_patterns.pyramids import DEFAULT_BUDGET, PyramidPresentation, is_pyramid_presentation

__all__ = ["StructureTag", "StructureKind", "AttachedStructure", "CombinationOutcome",
           "find_attached_structure", "combine_structures", "is_attached_structure"]

logger = logging.getLogger(__name__)


class StructureTag(enum.Enum):
    STAR = "Star"
    ONE_SUBDIVIDED_STAR = "OneSubdividedStar"
    LINE_GRAPH_OF_ONE_SUBDIVIDED_STAR = "LineGraphOfOneSubdividedStar"


@dataclass(frozen=True)
class StructureKind:
    tag: StructureTag
    attach: VertexSet


@dataclass(frozen=True)
class AttachedStructure:
    """A found structure.

    `match[y]` is the vertex of X adjacent to leaf y; `center` is the
    star centre for the two star shapes and None for the line graph.
    Unpacks as ``(kind, X, leaves)``.
    """

    kind: StructureKind
    X: VertexSet
    leaves: VertexSet
    center: Optional[int]
    match: Dict[int, int] = field(compare=False)

    @property
    def tag(self) -> StructureTag:
        return self.kind.tag

    def __iter__(self) -> Iterator:
        return iter((self.kind, self.X, self.leaves))


def _make(tag, center, match) -> AttachedStructure:
    leaves = frozenset(match)
    X = frozenset(match.values()) | ({center} if center is not None else frozenset())
    return AttachedStructure(StructureKind(tag, leaves), X, leaves, center, dict(match))


def is_attached_structure(G: Graph, s: AttachedStructure) -> bool:
    """Check the induced shape of G[X + leaves] against the structure's tag."""
    leaves = sorted(s.leaves)
    if not is_independent(G, leaves) or s.X & s.leaves:
        return False
    mids = [s.match[y] for y in leaves]
    for y in leaves:
        seen = G.adj(y) & s.X
        if s.tag is StructureTag.STAR:
            if seen != {s.center}:
                return False
        elif seen != {s.match[y]}:
            return False
    if s.tag is StructureTag.STAR:
        return s.X == {s.center}
    if len(set(mids)) != len(mids):
        return False
    if s.tag is StructureTag.ONE_SUBDIVIDED_STAR:
        if s.X != frozenset(mids) | {s.center} or s.center in mids:
            return False
        return all(G.has_edge(s.center, m) for m in mids) and is_independent(G, mids)
    return s.X == frozenset(mids) and all(G.has_edge(u, v) for u in mids for v in mids if u != v)


class _Search:
    """Bounded backtracking shared by the two subdivided shapes."""

    def __init__(self, G: Graph, C: VertexSet, Y: List[int], k: int, budget: int):
        self.G = G
        self.C = C
        self.Y = Y
        self.k = k
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhaustedError(search="find_attached_structure", budget=self.budget)

    def fits(self, tag, center, match, y, m) -> bool:
        G = self.G
        if m in match.values() or m == center:
            return False
        if any(G.has_edge(m, z) for z in match):
            return False
        if any(G.has_edge(y, z) for z in match.values()):
            return False
        if tag is StructureTag.ONE_SUBDIVIDED_STAR:
            return G.has_edge(center, m) and not any(G.has_edge(m, z) for z in match.values())
        return all(G.has_edge(m, z) for z in match.values())

    def candidates(self, tag, center, y):
        pool = self.G.adj(y) & self.C
        if tag is StructureTag.ONE_SUBDIVIDED_STAR:
            pool = pool & self.G.adj(center)
        return sorted(pool)

    def run(self, tag, center=None) -> Optional[Dict[int, int]]:
        ys = self.Y if center is None else [y for y in self.Y if not self.G.has_edge(center, y)]
        if len(ys) < self.k:
            return None

        def extend(start, match):
            if len(match) >= self.k:
                return match
            if len(match) + len(ys) - start < self.k:
                return None
            for i in range(start, len(ys)):
                y = ys[i]
                for m in self.candidates(tag, center, y):
                    self.tick()
                    if self.fits(tag, center, match, y, m):
                        found = extend(i + 1, {**match, y: m})
                        if found:
                            return found
            return None

        match = extend(0, {})
        if match is None:
            return None
        # grow past k greedily
        for y in ys:
            if y in match:
                continue
            for m in self.candidates(tag, center, y):
                if self.fits(tag, center, match, y, m):
                    match[y] = m
                    break
        return match


def find_attached_structure(G: Graph, C: Iterable[int], Y: Iterable[int], k: int,
                            budget: int = DEFAULT_BUDGET) -> Optional[AttachedStructure]:
    """Find a star, 1-subdivided star or line graph of a 1-subdivided star attaching >= k vertices of Y to C.

    A single centre seeing the most vertices of Y is tried first; the
    two subdivided shapes are then searched by bounded backtracking.

    :raises PreconditionError: when C is not connected, Y is not
        independent, meets C, or has a vertex without a neighbour in C
    :raises BudgetExhaustedError: when the backtracking exceeds `budget` nodes
    """
    C = frozenset(C)
    Y = sorted(set(Y))
    G.check_vertices(C | set(Y))
    if k < 3:
        raise PreconditionError(cause="structures need k >= 3, got %s" % k)
    if not C or len(components(G.induced_subgraph(C))) != 1:
        raise PreconditionError(cause="C does not induce a connected subgraph")
    if not is_independent(G, Y):
        raise PreconditionError(cause="Y is not independent")
    if C.intersection(Y):
        raise PreconditionError(cause="Y meets C in %s" % sorted(C.intersection(Y)))
    lonely = [y for y in Y if not G.adj(y) & C]
    if lonely:
        raise PreconditionError(cause="vertices %s of Y have no neighbour in C" % lonely)
    if len(Y) < k:
        return None

    center = max(sorted(C), key=lambda c: len(G.adj(c).intersection(Y)))
    star_leaves = sorted(G.adj(center).intersection(Y))
    if len(star_leaves) >= k:
        logger.debug(f"star at {center} with {len(star_leaves)} leaves")
        return _make(StructureTag.STAR, center, {y: center for y in star_leaves})

    search = _Search(G, C, Y, k, budget)
    match = search.run(StructureTag.LINE_GRAPH_OF_ONE_SUBDIVIDED_STAR)
    if match:
        logger.debug(f"line graph of a subdivided star with {len(match)} leaves, {search.nodes} nodes")
        return _make(StructureTag.LINE_GRAPH_OF_ONE_SUBDIVIDED_STAR, None, match)
    for c in sorted(C):
        match = search.run(StructureTag.ONE_SUBDIVIDED_STAR, c)
        if match:
            logger.debug(f"subdivided star at {c} with {len(match)} leaves, {search.nodes} nodes")
            return _make(StructureTag.ONE_SUBDIVIDED_STAR, c, match)
    return None


@dataclass(frozen=True)
class CombinationOutcome:
    """What two structures across a separator give.

    `kind` is ``pyramid``, ``K2t`` or ``P6``..``P9``; `vertices` is the
    path in order, or the pair followed by the independent set.
    """

    kind: str
    vertices: Tuple[int, ...]
    pyramid: Optional[PyramidPresentation] = None

    def verify(self, G: Graph) -> bool:
        if self.kind == "pyramid":
            return self.pyramid is not None and is_pyramid_presentation(G, self.pyramid)
        if self.kind == "K2t":
            return is_induced_k2t(G, self.vertices[:2], self.vertices[2:], len(self.vertices) - 2)
        return len(self.vertices) == int(self.kind[1:]) and is_induced_path(G, self.vertices)

    def to_dict(self):
        item = {"kind": self.kind, "vertices": list(self.vertices)}
        if self.pyramid is not None:
            item["pyramid"] = self.pyramid.to_dict()
        return item


_STAR = StructureTag.STAR
_SUB = StructureTag.ONE_SUBDIVIDED_STAR
_LINE = StructureTag.LINE_GRAPH_OF_ONE_SUBDIVIDED_STAR


def combine_structures(first: AttachedStructure, second: AttachedStructure) -> CombinationOutcome:
    """Combine structures living in two different components of G - S with common leaves in S.

    The common leaves must number at least three (two suffice for two
    stars). The outcome is always an induced object of G.
    """
    common = sorted(first.leaves & second.leaves)
    if len(common) < 2 or (len(common) < 3 and not (first.tag is _STAR and second.tag is _STAR)):
        raise PreconditionError(cause="structures share only %s leaves" % len(common))
    order = {_LINE: 0, _SUB: 1, _STAR: 2}
    one, two = sorted((first, second), key=lambda s: order[s.tag])
    y1, y2, y3 = (common + [None])[:3]

    if one.tag is _STAR:
        return CombinationOutcome("K2t", (one.center, two.center) + tuple(common))
    if one.tag is _SUB and two.tag is _STAR:
        m = one.match
        return CombinationOutcome("P6", (y1, two.center, y2, m[y2], one.center, m[y3]))
    if one.tag is _SUB:
        m, n = one.match, two.match
        return CombinationOutcome("P9", (y3, m[y3], one.center, m[y1], y1, n[y1], two.center, n[y2], y2))
    k = one.match
    if two.tag is _STAR:
        pyramid = PyramidPresentation(two.center, tuple(common), tuple(k[y] for y in common))
        return CombinationOutcome("pyramid", (pyramid.apex,) + pyramid.legs + pyramid.base, pyramid)
    n = two.match
    if two.tag is _SUB:
        return CombinationOutcome("P8", (y1, k[y1], k[y2], y2, n[y2], two.center, n[y3], y3))
    return CombinationOutcome("P7", (y1, k[y1], k[y2], y2, n[y2], n[y3], y3))
