"""Exact tree-independence number and treewidth by dynamic programming over elimination orderings.

Eliminating v after the set S has been eliminated creates the bag
{v} + Q(S, v), where Q(S, v) holds the vertices outside S + {v} that
v reaches through S. Every minimal triangulation arises from some
ordering, so minimising the largest bag measure over orderings gives
the exact value. The minimum is computed over subsets S instead of
orderings: best(S) = min over v in S of max(best(S - v), measure(v, S - v)).
"""

import logging
from typing import Callable, Dict, List, Sequence, Tuple

from tin_common.errors import CapExceededError, PreconditionError
from tin_common.graph import Graph, independence_number
from tin_decomposition.tree_decomposition import TreeDecomposition, chain_forest, compress

__all__ = ["exact_tree_independence", "exact_treewidth", "optimal_elimination",
           "decomposition_from_ordering", "elimination_bags", "DEFAULT_CAP"]

logger = logging.getLogger(__name__)

DEFAULT_CAP = 12
MEASURES = ("alpha", "width")


def _reach_outside(masks: Sequence[int], eliminated: int, v: int) -> int:
    """Q(S, v) as a bitmask."""
    seen = 1 << v
    out = 0
    stack = [v]
    while stack:
        u = stack.pop()
        fresh = masks[u] & ~seen
        seen |= fresh
        out |= fresh & ~eliminated
        inner = fresh & eliminated
        while inner:
            low = inner & -inner
            stack.append(low.bit_length() - 1)
            inner ^= low
    return out


def _members(mask: int) -> List[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def _measure_fn(G: Graph, measure: str) -> Callable[[int], int]:
    if measure == "width":
        return lambda bag: bin(bag).count("1") - 1
    if measure == "alpha":
        cache: Dict[int, int] = {}

        def alpha(bag):
            if bag not in cache:
                cache[bag] = independence_number(G, _members(bag))
            return cache[bag]
        return alpha
    raise PreconditionError(cause="unknown measure %s, expected one of %s" % (measure, MEASURES))


def optimal_elimination(G: Graph, measure: str = "alpha", cap: int = DEFAULT_CAP) -> Tuple[int, List[int]]:
    """The optimal value and an ordering achieving it.

    :raises CapExceededError: when G has more than `cap` vertices
    """
    if G.n > cap:
        raise CapExceededError(what="exact %s oracle" % measure, cap=cap, n=G.n)
    if G.n == 0:
        return (0 if measure == "alpha" else -1), []
    masks = G.masks
    value_of = _measure_fn(G, measure)
    full = (1 << G.n) - 1
    best = {0: -1 if measure == "width" else 0}
    choice = {}
    for S in range(1, full + 1):
        value = None
        for v in range(G.n):
            if not S >> v & 1:
                continue
            rest = S & ~(1 << v)
            candidate = best[rest]
            if value is not None and candidate >= value:
                continue
            bag_value = value_of((1 << v) | _reach_outside(masks, rest, v))
            candidate = max(candidate, bag_value)
            if value is None or candidate < value:
                value, choice[S] = candidate, v
        best[S] = value
    ordering = []
    S = full
    while S:
        v = choice[S]
        ordering.append(v)
        S &= ~(1 << v)
    ordering.reverse()
    logger.debug(f"exact {measure} on {G.n} vertices: {best[full]}")
    return best[full], ordering


def exact_tree_independence(G: Graph, cap: int = DEFAULT_CAP) -> int:
    """Minimum alpha-width over all tree decompositions of G."""
    return optimal_elimination(G, "alpha", cap)[0]


def exact_treewidth(G: Graph, cap: int = DEFAULT_CAP) -> int:
    return optimal_elimination(G, "width", cap)[0]


def elimination_bags(G: Graph, ordering: Sequence[int]) -> Dict[int, frozenset]:
    """bag(v) = {v} + Q(vertices before v, v) for every v."""
    if sorted(ordering) != list(range(G.n)):
        raise PreconditionError(cause="ordering is not a permutation of the vertices")
    masks = G.masks
    eliminated = 0
    bags = {}
    for v in ordering:
        bags[v] = frozenset(_members((1 << v) | _reach_outside(masks, eliminated, v)))
        eliminated |= 1 << v
    return bags


def decomposition_from_ordering(G: Graph, ordering: Sequence[int], reduce: bool = True) -> TreeDecomposition:
    """The tree decomposition of the fill-in of `ordering`.

    Each vertex gets its elimination bag; its parent is the earliest
    eliminated vertex among the rest of its bag.
    """
    if G.n == 0:
        return TreeDecomposition.build(G, {0: ()}, [])
    position = {v: i for i, v in enumerate(ordering)}
    bags = elimination_bags(G, ordering)
    edges = []
    for v, bag in bags.items():
        later = [u for u in bag if u != v]
        if later:
            edges.append((v, min(later, key=position.__getitem__)))
    D = TreeDecomposition.build(G, bags, chain_forest(bags, edges))
    return compress(D) if reduce else D
