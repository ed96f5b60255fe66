""" Set of induced path and induced K_{2,t} detectors """

import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from tin_common.errors import PreconditionError
from tin_common.graph import Graph, is_independent, maximum_independent_set

__all__ = ["find_induced_path", "is_induced_path", "find_k2t", "is_induced_k2t", "is_free"]

logger = logging.getLogger(__name__)


def is_induced_path(G: Graph, vs: Sequence[int]) -> bool:
    """True iff `vs` lists distinct vertices inducing exactly the path in that order."""
    if len(set(vs)) != len(vs):
        return False
    for i, j in combinations(range(len(vs)), 2):
        if G.has_edge(vs[i], vs[j]) != (j == i + 1):
            return False
    return True


def find_induced_path(G: Graph, r: int) -> Optional[List[int]]:
    """An induced path on `r` vertices, or None.

    Every path is grown from its smallest vertex s, first to the right
    and then to the left, using only vertices larger than s. A vertex
    may be appended only if its single neighbour on the path is the end
    it is appended to.
    """
    if r < 1:
        raise PreconditionError(cause="path length r must be at least 1, got %s" % r)
    if r == 1:
        return [0] if G.n else None
    touch = [0] * G.n

    def place(u, delta):
        for x in G.adj(u):
            touch[x] += delta

    def grow(path, on_path, s, right_open):
        if len(path) == r:
            return list(path)
        ends = [(True, path[-1])] if right_open else []
        ends.append((False, path[0]))
        for to_right, end in ends:
            for u in sorted(G.adj(end)):
                if u <= s or u in on_path or touch[u] != 1:
                    continue
                if to_right:
                    path.append(u)
                else:
                    path.insert(0, u)
                on_path.add(u)
                place(u, 1)
                found = grow(path, on_path, s, to_right)
                place(u, -1)
                on_path.discard(u)
                if to_right:
                    path.pop()
                else:
                    path.pop(0)
                if found:
                    return found
        return None

    for s in range(G.n):
        place(s, 1)
        found = grow([s], {s}, s, True)
        place(s, -1)
        if found:
            logger.debug(f"induced P{r} found: {found}")
            return found
    return None


def is_induced_k2t(G: Graph, pair: Sequence[int], independent: Sequence[int], t: int) -> bool:
    u, v = pair
    vs = [u, v] + list(independent)
    if len(set(vs)) != len(vs) or len(independent) != t or G.has_edge(u, v):
        return False
    if not is_independent(G, independent):
        return False
    return all(G.has_edge(u, x) and G.has_edge(v, x) for x in independent)


def find_k2t(G: Graph, t: int) -> Optional[Tuple[Tuple[int, int], Tuple[int, ...]]]:
    """An induced K_{2,t} as ((u, v), independent t-set), or None.

    A non-adjacent pair extends to an induced K_{2,t} exactly when its
    common neighbourhood has independence number at least t.
    """
    if t < 2:
        raise PreconditionError(cause="K_{2,t} needs t >= 2, got %s" % t)
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if G.has_edge(u, v):
                continue
            common = G.adj(u) & G.adj(v)
            if len(common) < t:
                continue
            independent = maximum_independent_set(G, common)
            if len(independent) >= t:
                return (u, v), tuple(independent[:t])
    return None


def is_free(G: Graph, t: int, r: int = 6) -> bool:
    """True iff G has neither an induced P_r nor an induced K_{2,t}."""
    return find_induced_path(G, r) is None and find_k2t(G, t) is None
