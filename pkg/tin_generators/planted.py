"""Graphs with a known lemma configuration planted in them.

Structure graphs share one layout: an independent separator Y on the
vertices 0..t-1, the first side's structure next and the second side's
last. :class:`PlantedSeparator` records the three parts.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from tin_common.errors import PreconditionError
from tin_common.graph import Graph, VertexSet
from tin_patterns.pyramids import PyramidPresentation
from tin_patterns.structures import StructureTag

__all__ = ["PlantedSeparator", "planted_structures", "lemma44_witness", "planted_pyramid",
           "COMBINATION_CASES"]

logger = logging.getLogger(__name__)

# first side, second side, what combining them gives
COMBINATION_CASES = (
    (StructureTag.STAR, StructureTag.STAR, "K2t"),
    (StructureTag.ONE_SUBDIVIDED_STAR, StructureTag.STAR, "P6"),
    (StructureTag.ONE_SUBDIVIDED_STAR, StructureTag.ONE_SUBDIVIDED_STAR, "P9"),
    (StructureTag.LINE_GRAPH_OF_ONE_SUBDIVIDED_STAR, StructureTag.ONE_SUBDIVIDED_STAR, "P8"),
    (StructureTag.LINE_GRAPH_OF_ONE_SUBDIVIDED_STAR, StructureTag.LINE_GRAPH_OF_ONE_SUBDIVIDED_STAR, "P7"),
    (StructureTag.LINE_GRAPH_OF_ONE_SUBDIVIDED_STAR, StructureTag.STAR, "pyramid"),
)


@dataclass(frozen=True)
class PlantedSeparator:
    graph: Graph
    separator: VertexSet
    first: VertexSet
    second: VertexSet


def _attach(tag: StructureTag, leaves: List[int], start: int) -> Tuple[List[Tuple[int, int]], int]:
    """Edges of one structure on fresh vertices from `start`; returns the edges and the next free id."""
    t = len(leaves)
    if tag is StructureTag.STAR:
        return [(start, y) for y in leaves], start + 1
    mids = list(range(start, start + t))
    edges = list(zip(mids, leaves))
    if tag is StructureTag.ONE_SUBDIVIDED_STAR:
        center = start + t
        return edges + [(center, m) for m in mids], start + t + 1
    edges += [(u, v) for i, u in enumerate(mids) for v in mids[i + 1:]]
    return edges, start + t


def planted_structures(first: StructureTag, second: StructureTag, t: int = 3) -> PlantedSeparator:
    """Two structures on t common leaves, one in each full component of G - Y."""
    if t < 3:
        raise PreconditionError(cause="structures need t >= 3, got %s" % t)
    leaves = list(range(t))
    edges_one, middle = _attach(first, leaves, t)
    edges_two, end = _attach(second, leaves, middle)
    G = Graph(end, edges_one + edges_two)
    return PlantedSeparator(G, frozenset(leaves), frozenset(range(t, middle)), frozenset(range(middle, end)))


def lemma44_witness(t: int = 3) -> PlantedSeparator:
    """A star and a line graph of a subdivided star across Y; together they form a t-pyramid."""
    return planted_structures(StructureTag.STAR, StructureTag.LINE_GRAPH_OF_ONE_SUBDIVIDED_STAR, t)


def planted_pyramid(basic: int = 1, apex_side: int = 1, attachments: int = 0) -> Tuple[Graph, PyramidPresentation]:
    """A 3-pyramid with extra vertices of each role.

    Apex 0, legs 1..3, base 4..6. Then come `basic` vertices complete to
    the base, `apex_side` pendant neighbours of the apex, and
    `attachments` vertices adjacent to the first two legs.
    """
    p = PyramidPresentation(0, (1, 2, 3), (4, 5, 6))
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 5), (4, 6), (5, 6)]
    v = 7
    for _ in range(basic):
        edges += [(v, y) for y in p.base]
        v += 1
    for _ in range(apex_side):
        edges.append((v, p.apex))
        v += 1
    for _ in range(attachments):
        edges += [(v, p.legs[0]), (v, p.legs[1])]
        v += 1
    return Graph(v, edges), p
