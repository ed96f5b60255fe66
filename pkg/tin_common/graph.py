"""Simple undirected graphs and the basic queries the engines share.

Vertices are the integers ``0..n-1``. A graph is immutable once built;
induced subgraphs are relabelled to ``0..k-1`` and remember, through
:attr:`Graph.labels`, which vertex of the parent graph each of their
vertices stands for.
"""

import logging
import numbers
from functools import cached_property
from itertools import combinations
from typing import (Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence,
                    Tuple)

import networkx as nx

from tin_common.errors import PreconditionError

__all__ = [
    "Graph", "VertexSet", "components", "full_components", "independence_number",
    "maximum_independent_set", "is_independent", "is_clique", "is_ab_separator",
    "minimal_separators", "iter_minimal_separators", "is_minimal_separator", "induced_paths",
    "path_neighbors", "has_path"
]

logger = logging.getLogger(__name__)

VertexSet = FrozenSet[int]


class Graph:
    """A finite simple graph on the vertices ``0..n-1``.

    :param n: number of vertices
    :param edges: iterable of vertex pairs
    :param labels: for an induced subgraph, ``labels[v]`` is the id of
        `v` in the parent graph; defaults to the identity
    """

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = (),
                 labels: Optional[Sequence[int]] = None):
        if n < 0:
            raise PreconditionError(cause="vertex count must be non-negative, got %s" % n)
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(cause="edge %s-%s leaves the vertex range 0..%s" % (u, v, n - 1))
            if u == v:
                raise PreconditionError(cause="self-loop at vertex %s" % u)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: Tuple[VertexSet, ...] = tuple(frozenset(s) for s in adj)
        self.labels: Tuple[int, ...] = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise PreconditionError(cause="expected %s labels, got %s" % (n, len(self.labels)))
        self._mis_cache: Dict[VertexSet, Tuple[int, ...]] = {}

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> "Graph":
        edges = [(u, v) for u, nbrs in enumerate(adjacency) for v in nbrs if u < v]
        return cls(len(adjacency), edges)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Convert a networkx graph; nodes are renumbered in sorted order."""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))

    # -- basic queries ---------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return frozenset(range(self.n))

    def adj(self, v: int) -> VertexSet:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def neighborhood(self, vs: Iterable[int]) -> VertexSet:
        """Open neighbourhood N(A) of a vertex set."""
        vs = frozenset(vs)
        out = set()
        for v in vs:
            out |= self._adj[v]
        return frozenset(out - vs)

    def closed_neighborhood(self, vs: Iterable[int]) -> VertexSet:
        vs = frozenset(vs)
        return vs | self.neighborhood(vs)

    def closed_adj(self, v: int) -> VertexSet:
        return self._adj[v] | {v}

    def check_vertices(self, vs: Iterable[int], what: str = "vertex set"):
        bad = [v for v in vs if not (isinstance(v, numbers.Integral) and 0 <= v < self.n)]
        if bad:
            raise PreconditionError(cause="%s contains %s, not a vertex of a graph on %s vertices"
                                    % (what, sorted(bad, key=str), self.n))

    # -- induced subgraphs -----------------------------------------------

    def induced_subgraph(self, vs: Iterable[int]) -> "Graph":
        """G[vs] relabelled to ``0..k-1`` in increasing order of `vs`.

        The labels of the result are ids of *this* graph, not of the
        root graph this one may itself have been cut from.
        """
        order = sorted(set(vs))
        self.check_vertices(order)
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u in order for v in self._adj[u] if v in index and u < v]
        return Graph(len(order), edges, labels=order)

    def without(self, vs: Iterable[int]) -> "Graph":
        """G - A"""
        removed = set(vs)
        return self.induced_subgraph(v for v in range(self.n) if v not in removed)

    def lift(self, vs: Iterable[int]) -> VertexSet:
        """Map local vertex ids to the ids of the parent graph."""
        return frozenset(self.labels[v] for v in vs)

    def local(self, v: int) -> int:
        """The local id of parent vertex `v`."""
        return self._index[v]

    def lower(self, vs: Iterable[int]) -> VertexSet:
        """Map parent ids to local ids; parent vertices not in this graph are dropped."""
        index = self._index
        return frozenset(index[v] for v in vs if v in index)

    @cached_property
    def _index(self) -> Dict[int, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def nx_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        """Adjacency as bitmasks, used by the exact solvers."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self._adj)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return "Graph(n=%s, m=%s)" % (self.n, self.edge_count)


def components(G: Graph, removed: Iterable[int] = ()) -> List[VertexSet]:
    """Components of G - removed, ordered by their minimum vertex."""
    removed = frozenset(removed)
    G.check_vertices(removed, "removed set")
    keep = [v for v in range(G.n) if v not in removed]
    view = G.nx_graph.subgraph(keep)
    return sorted((frozenset(c) for c in nx.connected_components(view)), key=min)


def has_path(G: Graph, a: int, b: int, removed: Iterable[int] = ()) -> bool:
    removed = set(removed)
    if a in removed or b in removed:
        return False
    view = G.nx_graph.subgraph(v for v in range(G.n) if v not in removed)
    return nx.has_path(view, a, b)


def full_components(G: Graph, S: Iterable[int]) -> List[VertexSet]:
    """Components D of G - S with N(D) = S."""
    S = frozenset(S)
    return [D for D in components(G, S) if G.neighborhood(D) == S]


def is_independent(G: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(not G.has_edge(u, v) for u, v in combinations(vs, 2))


def is_clique(G: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(G.has_edge(u, v) for u, v in combinations(vs, 2))


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _clique_cover_size(masks: Sequence[int], cand: int) -> int:
    """Number of cliques in a greedy clique cover of `cand`, an upper bound on alpha."""
    count = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        clique_cand = cand & masks[v]
        cand ^= low
        while clique_cand:
            low = clique_cand & -clique_cand
            u = low.bit_length() - 1
            cand &= ~low
            clique_cand &= masks[u]
        count += 1
    return count


def _greedy_independent(masks: Sequence[int], cand: int) -> List[int]:
    chosen = []
    while cand:
        v = min(_bits(cand), key=lambda u: (_popcount(masks[u] & cand), u))
        chosen.append(v)
        cand &= ~(masks[v] | (1 << v))
    return chosen


def _branch_and_bound(masks: Sequence[int], cand: int) -> List[int]:
    best = _greedy_independent(masks, cand)

    def expand(cand, chosen):
        nonlocal best
        # vertices of degree at most one can always be taken
        while cand:
            forced = next((v for v in _bits(cand) if _popcount(masks[v] & cand) <= 1), None)
            if forced is None:
                break
            chosen = chosen + [forced]
            cand &= ~(masks[forced] | (1 << forced))
        if not cand:
            if len(chosen) > len(best):
                best = chosen
            return
        if len(chosen) + _clique_cover_size(masks, cand) <= len(best):
            return
        v = max(_bits(cand), key=lambda u: (_popcount(masks[u] & cand), -u))
        expand(cand & ~(masks[v] | (1 << v)), chosen + [v])
        expand(cand & ~(1 << v), chosen)

    expand(cand, [])
    return best


def maximum_independent_set(G: Graph, restrict: Optional[Iterable[int]] = None) -> Tuple[int, ...]:
    """A maximum independent set of G[restrict], as a sorted tuple.

    Exact branch and bound: a greedy independent set seeds the lower
    bound and a greedy clique cover prunes branches. Results are cached
    on the graph.
    """
    restrict = G.vertices if restrict is None else frozenset(restrict)
    G.check_vertices(restrict, "restrict")
    cached = G._mis_cache.get(restrict)
    if cached is not None:
        return cached
    cand = sum(1 << v for v in restrict)
    result = tuple(sorted(_branch_and_bound(G.masks, cand)))
    G._mis_cache[restrict] = result
    return result


def independence_number(G: Graph, restrict: Optional[Iterable[int]] = None) -> int:
    """alpha(G[restrict]); the whole graph when `restrict` is omitted."""
    return len(maximum_independent_set(G, restrict))


def is_ab_separator(G: Graph, S: Iterable[int], a: int, b: int) -> bool:
    """True iff S meets every (a, b)-path of G."""
    S = frozenset(S)
    G.check_vertices(S | {a, b})
    if a == b:
        raise PreconditionError(cause="a and b must differ, both are %s" % a)
    if a in S or b in S:
        raise PreconditionError(cause="separator %s contains an endpoint of (%s, %s)" % (sorted(S), a, b))
    return not has_path(G, a, b, S)


def _separator_key(S: VertexSet):
    return tuple(sorted(S))


def iter_minimal_separators(G: Graph) -> Iterator[VertexSet]:
    """Yield the non-empty minimal separators of G, in generation order.

    Close-neighbourhood generation: seed with N(C) for every component
    C of G - N[v], then expand each separator S by N(C) for the
    components C of G - (S + N(x)), x in S.
    """
    found = set()
    pending = []

    def offer(S):
        if S and S not in found:
            found.add(S)
            pending.append(S)
            return True
        return False

    for v in range(G.n):
        for C in components(G, G.closed_adj(v)):
            S = G.neighborhood(C)
            if offer(S):
                yield S
    while pending:
        S = pending.pop()
        for x in sorted(S):
            for C in components(G, S | G.adj(x)):
                S2 = G.neighborhood(C)
                if offer(S2):
                    yield S2


def minimal_separators(G: Graph) -> List[VertexSet]:
    """All minimal separators of G, each with two full components.

    The empty set is a minimal separator exactly when G is disconnected.
    """
    found = set(iter_minimal_separators(G))
    if len(components(G)) >= 2:
        found.add(frozenset())
    logger.debug(f"{len(found)} minimal separators on {G.n} vertices")
    return sorted(found, key=_separator_key)


def is_minimal_separator(G: Graph, S: Iterable[int]) -> bool:
    return len(full_components(G, S)) >= 2


def induced_paths(G: Graph, a: int, b: int, max_vertices: Optional[int] = None) -> Iterator[List[int]]:
    """Yield every induced (a, b)-path, optionally only those on at most `max_vertices` vertices.

    Paths are produced depth first with neighbours in increasing order.
    A vertex may extend the current path only if its single neighbour
    on the path is the current end.
    """
    G.check_vertices((a, b))
    if a == b:
        yield [a]
        return
    path = [a]
    on_path = {a}
    # vertices adjacent to the path, counted with multiplicity
    touch = dict.fromkeys(range(G.n), 0)
    for u in G.adj(a):
        touch[u] += 1

    def extend():
        end = path[-1]
        if max_vertices is not None and len(path) >= max_vertices:
            return
        for u in sorted(G.adj(end)):
            if u in on_path or touch[u] != 1:
                continue
            if u == b:
                yield path + [b]
                continue
            path.append(u)
            on_path.add(u)
            for x in G.adj(u):
                touch[x] += 1
            yield from extend()
            for x in G.adj(u):
                touch[x] -= 1
            on_path.discard(u)
            path.pop()

    yield from extend()


def path_neighbors(G: Graph, a: int, b: int) -> VertexSet:
    """Neighbours of `a` lying on some induced (a, b)-path.

    For non-adjacent a and b these are the neighbours of `a` with a
    neighbour in the component of G - N[a] containing `b`.
    """
    if G.has_edge(a, b):
        raise PreconditionError(cause="%s and %s are adjacent" % (a, b))
    far = next((D for D in components(G, G.closed_adj(a)) if b in D), frozenset())
    return frozenset(x for x in G.adj(a) if G.adj(x) & far)
