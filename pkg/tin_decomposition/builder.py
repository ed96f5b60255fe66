"""Tree decompositions from a balanced-separator oracle.

Each node works on a vertex set U with a boundary W, where N(U) is
contained in W. The oracle is asked for a balanced separator X of
G[U + W] under the weighting uniform on W (uniform on U at the roots);
the node's bag is W + X and every component D of G[U - X] becomes a
child with boundary N(D) & (W + X).
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Tuple, Union

from tin_common.errors import CapExceededError, CertificateError, PreconditionError
from tin_common.graph import Graph, VertexSet, components, independence_number
from tin_common.weighting import Weighting, check_ratio, is_balanced_separator
from tin_decomposition.tree_decomposition import (TreeDecomposition, alpha_width, chain_forest, compress,
                                                  single_bag, validate)
from tin_lemmas.bounds import DEFAULT_MAX_DEPTH, NEIGHBORHOOD_RATIO, BoundConfig
from tin_lemmas.certificates import SeparatorCertificate
from tin_lemmas.refutation import lifted
from tin_lemmas.separator_engine import lemma33_balanced_separator, neighborhood_balanced_separator

__all__ = ["build_from_balanced_separators", "trivial_oracle", "oracle_by_name", "width_guarantee",
           "ORACLES"]

logger = logging.getLogger(__name__)

SeparatorOracle = Callable[[Graph, Weighting], Union[SeparatorCertificate, Iterable[int]]]

ORACLES = ("trivial", "neighborhood", "lemma33")


def trivial_oracle(c=NEIGHBORHOOD_RATIO) -> SeparatorOracle:
    """The empty set when it is balanced, otherwise the heaviest vertex."""
    c = check_ratio(c)

    def oracle(G: Graph, w: Weighting) -> VertexSet:
        if is_balanced_separator(G, (), w, c):
            return frozenset()
        return frozenset([max(range(G.n), key=lambda v: (w[v], -v))])
    return oracle


def oracle_by_name(name: str, cfg: BoundConfig) -> Tuple[SeparatorOracle, Fraction]:
    """An oracle and the balance ratio it guarantees."""
    if name == "trivial":
        return trivial_oracle(cfg.c), cfg.c
    if name == "neighborhood":
        return (lambda G, w: neighborhood_balanced_separator(G, w, cfg)), NEIGHBORHOOD_RATIO
    if name == "lemma33":
        return (lambda G, w: lemma33_balanced_separator(G, w, cfg)), cfg.c
    raise PreconditionError(cause="unknown oracle %s, expected one of %s" % (name, ", ".join(ORACLES)))


def width_guarantee(c, d: int) -> Fraction:
    """((3-c)/(1-c)) d + d, the alpha-width a run with separators of alpha <= d stays under."""
    c = check_ratio(c)
    return (3 - c) / (1 - c) * d + d


def _separator_of(found) -> Iterable[int]:
    if isinstance(found, SeparatorCertificate):
        return found.separator
    return found


def build_from_balanced_separators(G: Graph, sep_oracle: SeparatorOracle, c=NEIGHBORHOOD_RATIO,
                                   max_depth: int = DEFAULT_MAX_DEPTH) -> TreeDecomposition:
    """Build a tree decomposition of G top-down from balanced separators.

    The result is valid whatever the oracle returns; only its alpha-width
    depends on the oracle keeping its balance promise. When the
    separator misses U, the smallest vertex of U is added to it.

    :raises CapExceededError: when the tree grows deeper than `max_depth`
    """
    c = check_ratio(c)
    if G.n == 0:
        return single_bag(G)
    bags: Dict[int, VertexSet] = {}
    edges: List[Tuple[int, int]] = []
    largest = 0
    stack = [(U, frozenset(), None, 0) for U in reversed(components(G))]
    while stack:
        U, W, parent, depth = stack.pop()
        if depth > max_depth:
            raise CapExceededError(what="builder recursion depth", cap=max_depth, n=depth)
        sub = G.induced_subgraph(U | W)
        w = Weighting.uniform(sub.n, sub.lower(W or U))
        with lifted(sub, "builder depth %s" % depth):
            X = sub.lift(_separator_of(sep_oracle(sub, w)))
        if not X & U:
            X = X | {min(U)}
        node = len(bags)
        bags[node] = W | X
        if parent is not None:
            edges.append((parent, node))
        largest = max(largest, independence_number(G, X))
        rest = U - X
        parts = components(G, G.vertices - rest) if rest else []
        for D in reversed(parts):
            stack.append((D, G.neighborhood(D) & (W | X), node, depth + 1))

    D = compress(TreeDecomposition.build(G, bags, chain_forest(bags, edges)))
    valid, axiom = validate(D)
    if not valid:
        raise CertificateError(cause="built decomposition violates the %s axiom" % axiom)
    measured = alpha_width(D)
    guarantee = width_guarantee(c, largest)
    logger.info(f"built {D.bag_count} bags from {len(bags)} oracle calls: alpha-width {measured}, "
                f"largest separator alpha {largest}")
    if measured > guarantee:
        logger.warning(f"alpha-width {measured} above {guarantee} for separators of alpha {largest}")
    return D
