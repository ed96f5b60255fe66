"""Tree decompositions: data model, validation, widths and dumps."""

import json
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from tin_common.errors import PreconditionError
from tin_common.graph import Graph, VertexSet, independence_number

__all__ = ["TreeDecomposition", "validate", "alpha_width", "width", "compress",
           "single_bag", "chain_forest"]

logger = logging.getLogger(__name__)

AXIOM_TREE = "tree"
AXIOM_VERTICES = "vertex-coverage"
AXIOM_EDGES = "edge-coverage"
AXIOM_SUBTREE = "subtree"


@dataclass(frozen=True, eq=False)
class TreeDecomposition:
    """A tree with one bag of host vertices per node."""

    host: Graph
    nodes: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    bags: Mapping[int, VertexSet]

    @classmethod
    def build(cls, host: Graph, bags: Mapping[int, Iterable[int]], edges: Iterable[Tuple[int, int]]):
        bags = {node: frozenset(bag) for node, bag in bags.items()}
        return cls(host, tuple(sorted(bags)), tuple(sorted((min(e), max(e)) for e in edges)), bags)

    @property
    def bag_count(self) -> int:
        return len(self.nodes)

    def tree(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(self.nodes)
        tree.add_edges_from(self.edges)
        return tree

    def to_json(self) -> Dict[str, object]:
        return {
            "nodes": list(self.nodes),
            "edges": [list(e) for e in self.edges],
            "bags": {str(node): sorted(self.bags[node]) for node in self.nodes}
        }

    @classmethod
    def from_json(cls, host: Graph, data: Mapping[str, object]) -> "TreeDecomposition":
        try:
            bags = {int(node): bag for node, bag in data["bags"].items()}
            edges = [tuple(e) for e in data["edges"]]
        except (KeyError, TypeError, ValueError) as err:
            raise PreconditionError(cause="malformed tree decomposition JSON: %s" % err)
        return cls.build(host, bags, edges)

    def to_text(self) -> str:
        lines = ["tree decomposition: %s bags, %s tree edges" % (len(self.nodes), len(self.edges))]
        for node in self.nodes:
            lines.append("  bag %s: %s" % (node, " ".join(map(str, sorted(self.bags[node])))))
        for u, v in self.edges:
            lines.append("  edge %s-%s" % (u, v))
        return "\n".join(lines)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def validate(D: TreeDecomposition) -> Tuple[bool, Optional[str]]:
    """Check the decomposition axioms; returns (valid, first violated axiom)."""
    tree = D.tree()
    if not D.nodes or set(tree.nodes()) != set(D.nodes) or not nx.is_tree(tree):
        return False, AXIOM_TREE
    G = D.host
    holders = defaultdict(list)
    for node in D.nodes:
        for v in D.bags[node]:
            if not 0 <= v < G.n:
                return False, AXIOM_VERTICES
            holders[v].append(node)
    if any(not holders[v] for v in range(G.n)):
        return False, AXIOM_VERTICES
    for u, v in G.edges():
        if not set(holders[u]) & set(holders[v]):
            return False, AXIOM_EDGES
    for v in range(G.n):
        if not nx.is_connected(tree.subgraph(holders[v])):
            return False, AXIOM_SUBTREE
    return True, None


def _require_valid(D: TreeDecomposition):
    valid, axiom = validate(D)
    if not valid:
        raise PreconditionError(cause="invalid tree decomposition: %s axiom fails" % axiom)


def alpha_width(D: TreeDecomposition) -> int:
    """Largest independence number of a bag, measured in the host."""
    _require_valid(D)
    return max(independence_number(D.host, D.bags[node]) for node in D.nodes)


def width(D: TreeDecomposition) -> int:
    _require_valid(D)
    return max(len(D.bags[node]) for node in D.nodes) - 1


def single_bag(G: Graph) -> TreeDecomposition:
    return TreeDecomposition.build(G, {0: range(G.n)}, [])


def chain_forest(bags: Mapping[int, VertexSet], edges: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Join the trees of a forest into one tree by chaining their smallest nodes."""
    forest = nx.Graph()
    forest.add_nodes_from(bags)
    forest.add_edges_from(edges)
    roots = sorted(min(part) for part in nx.connected_components(forest))
    return list(edges) + list(zip(roots, roots[1:]))


def compress(D: TreeDecomposition) -> TreeDecomposition:
    """Contract every tree edge whose one bag contains the other; the result is still valid."""
    bags = dict(D.bags)
    tree = D.tree()
    merged = True
    while merged:
        merged = False
        for u, v in sorted(tree.edges()):
            small, big = (u, v) if len(bags[u]) <= len(bags[v]) else (v, u)
            if bags[small] <= bags[big]:
                for w in list(tree.neighbors(small)):
                    if w != big:
                        tree.add_edge(big, w)
                tree.remove_node(small)
                del bags[small]
                merged = True
                break
    return TreeDecomposition.build(D.host, bags, tree.edges())
