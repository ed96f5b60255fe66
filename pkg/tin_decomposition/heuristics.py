""" Heuristic tree decompositions and balanced bags """

import logging
from fractions import Fraction
from typing import List, Optional

from networkx.algorithms.approximation import treewidth_min_degree, treewidth_min_fill_in

from tin_common.graph import Graph, independence_number
from tin_common.weighting import Weighting, is_balanced_separator
from tin_decomposition.exact import DEFAULT_CAP, decomposition_from_ordering, optimal_elimination
from tin_decomposition.tree_decomposition import (TreeDecomposition, chain_forest, single_bag,
                                                  validate)

__all__ = ["heuristic_decompositions", "candidate_decompositions", "balanced_bag"]

logger = logging.getLogger(__name__)

HEURISTICS = {
    "min_degree": treewidth_min_degree,
    "min_fill_in": treewidth_min_fill_in
}


def _from_networkx(G: Graph, decomposition) -> TreeDecomposition:
    order = sorted(decomposition.nodes(), key=lambda bag: sorted(bag))
    index = {bag: i for i, bag in enumerate(order)}
    bags = {i: frozenset(bag) for bag, i in index.items()}
    edges = [(index[u], index[v]) for u, v in decomposition.edges()]
    return TreeDecomposition.build(G, bags, chain_forest(bags, edges))


def heuristic_decompositions(G: Graph) -> List[TreeDecomposition]:
    """Decompositions from the networkx min-degree and min-fill-in heuristics."""
    if G.n == 0:
        return [single_bag(G)]
    found = []
    for name, heuristic in HEURISTICS.items():
        _, decomposition = heuristic(G.nx_graph)
        D = _from_networkx(G, decomposition)
        valid, axiom = validate(D)
        if valid:
            found.append(D)
        else:
            logger.warning(f"{name} decomposition failed the {axiom} axiom, skipped")
    return found or [single_bag(G)]


def candidate_decompositions(G: Graph, exact_cap: int = DEFAULT_CAP) -> List[TreeDecomposition]:
    """Heuristic decompositions, plus an alpha-optimal one when G is small enough."""
    found = heuristic_decompositions(G)
    if 0 < G.n <= exact_cap:
        _, ordering = optimal_elimination(G, "alpha", exact_cap)
        found.append(decomposition_from_ordering(G, ordering))
    return found


def balanced_bag(G: Graph, decompositions: List[TreeDecomposition], w: Weighting,
                 c=Fraction(1, 2)) -> Optional[frozenset]:
    """The (w, c)-balanced bag of least alpha among the given decompositions.

    Every tree decomposition has a (w, 1/2)-balanced bag, so None only
    comes back for an empty list.
    """
    best = None
    best_alpha = None
    for D in decompositions:
        for node in D.nodes:
            bag = D.bags[node]
            if not is_balanced_separator(G, bag, w, c):
                continue
            alpha = independence_number(G, bag)
            if best is None or (alpha, sorted(bag)) < (best_alpha, sorted(best)):
                best, best_alpha = bag, alpha
    return best
