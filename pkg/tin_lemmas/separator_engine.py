"""Separators of small independence number in {P6, K_{2,t}}-free graphs.

Three engines, each returning a :class:`SeparatorCertificate` that has
already been re-verified:

* :func:`small_alpha_ab_separator` separates two non-adjacent vertices
  with alpha at most 14(t-1)+3.
* :func:`neighborhood_balanced_separator` finds a (w, 7/8)-balanced
  separator N[z0] + Z with alpha(Z) bounded.
* :func:`lemma33_balanced_separator` combines an (a, b)-separator
  oracle and a neighbourhood oracle into a (w, c)-balanced separator.

The engines check every conclusion they rely on. With assert mode on a
failed conclusion raises :class:`LemmaViolation` carrying an induced P6
or K_{2,t} of the input; with it off the failure is logged and the
engine carries on where it can.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import networkx as nx

from tin_common.errors import CertificateError, PreconditionError, TinError
from tin_common.graph import (Graph, VertexSet, components, full_components, independence_number,
                              is_ab_separator, iter_minimal_separators, maximum_independent_set,
                              path_neighbors)
from tin_common.weighting import Weighting, heaviest_component, is_balanced_separator
from tin_decomposition.heuristics import balanced_bag, candidate_decompositions
from tin_lemmas.bounds import (HEAVY_NEIGHBORHOOD, NEIGHBORHOOD_RATIO, BoundConfig, ab_separator_bound,
                               combined_bound, proven_bound)
from tin_lemmas.certificates import (SeparatorCertificate, ab_certificate, balanced_certificate,
                                     verify_certificate)
from tin_lemmas.pyramid_lemmas import (apex_base_separator, pyramid_from_paths,
                                       pyramid_through_separator, simplicialize_pyramid)
from tin_lemmas.refutation import conclude, lifted, p6_violation
from tin_patterns.pyramids import PyramidPresentation, find_t_pyramid

__all__ = ["BoundConfig", "small_alpha_ab_separator", "neighborhood_balanced_separator",
           "lemma33_balanced_separator", "proven_bound", "ab_oracle", "neighborhood_oracle",
           "ABOracle", "BalancedOracle"]

logger = logging.getLogger(__name__)

ABOracle = Callable[[Graph, int, int], SeparatorCertificate]
BalancedOracle = Callable[[Graph, Weighting], SeparatorCertificate]


def _finish(G: Graph, cert: SeparatorCertificate, cfg: BoundConfig,
            w: Optional[Weighting] = None) -> SeparatorCertificate:
    """Verify `cert`; outside assert mode a failed check only downgrades it to unverified."""
    try:
        return verify_certificate(G, cert, w)
    except CertificateError as err:
        if cfg.assert_mode:
            raise
        logger.warning(f"certificate from lemma {cert.lemma} ({cert.route}) left unverified: {err}")
        return cert


def _induced_path(G: Graph, vs, source: int, target: int) -> List[int]:
    """A shortest, hence induced, path of G[vs]."""
    return nx.shortest_path(G.nx_graph.subgraph(vs), source, target)


# -- (a, b)-separators -----------------------------------------------------

def small_alpha_ab_separator(G: Graph, a: int, b: int, cfg: BoundConfig) -> SeparatorCertificate:
    """An (a, b)-separator S with alpha(S) <= 14(t-1)+3.

    X, the neighbours of `a` on induced (a, b)-paths, already separates.
    When alpha(X) is too large, 3(t-1)+1 independent vertices of X
    together with `a` and the component of G - X holding `b` contain a
    pyramid with apex `a` for which `b` is basic; the separator is then
    its apex/base separator plus the attachments Z that make it
    simplicial.

    :raises PreconditionError: when a == b or a and b are adjacent
    """
    G.check_vertices((a, b))
    if a == b:
        raise PreconditionError(cause="a and b must differ, both are %s" % a)
    if G.has_edge(a, b):
        raise PreconditionError(cause="a and b are adjacent")
    t = cfg.t
    bound = ab_separator_bound(t)
    X = path_neighbors(G, a, b)
    alpha_x = independence_number(G, X)
    if alpha_x <= bound:
        logger.debug(f"({a}, {b}): path neighbours separate with alpha {alpha_x}")
        cert = ab_certificate(G, X, a, b, lemma="3.1", route="neighbors", bound=bound)
        return _finish(G, cert, cfg)

    I = frozenset(maximum_independent_set(G, X)[:3 * (t - 1) + 1])
    far = next(D for D in components(G, X) if b in D)
    sub = G.induced_subgraph({a} | I | far)
    with lifted(sub, "lemma 3.1"):
        local = pyramid_from_paths(sub, sub.local(a), sub.local(b), t, cfg.assert_mode)
    if local is None:
        logger.warning(f"({a}, {b}): no pyramid at {a}, falling back to the path neighbours")
        return _finish(G, ab_certificate(G, X, a, b, lemma="3.1", route="neighbors", bound=bound), cfg)
    pyramid = local.relabelled(sub.labels)
    ctx = simplicialize_pyramid(G, pyramid, t, cfg.assert_mode)
    if b not in ctx.B:
        conclude(False, G, t, cfg.assert_mode, "3.1", "%s is not basic for the pyramid at %s" % (b, a),
                 pyramid.vertices | {b})
        logger.warning(f"({a}, {b}): falling back to the path neighbours")
        return _finish(G, ab_certificate(G, X, a, b, lemma="3.1", route="neighbors", bound=bound), cfg)
    inner = apex_base_separator(G, ctx, b, t, cfg.assert_mode)
    S = inner.separator | ctx.Z
    conclude(is_ab_separator(G, S, a, b), G, t, cfg.assert_mode, "3.1",
             "%s does not separate %s from %s" % (sorted(S), a, b), S)
    cert = ab_certificate(G, S, a, b, lemma="3.1", route="pyramid", bound=bound)
    if cert.alpha > bound:
        conclude(False, G, t, cfg.assert_mode, "3.1", "alpha(S) = %s exceeds %s" % (cert.alpha, bound), S)
    logger.debug(f"({a}, {b}): pyramid route, |Z|={len(ctx.Z)}, alpha(S)={cert.alpha}")
    return _finish(G, cert, cfg)


# -- neighbourhood separators ----------------------------------------------

def _neighborhood_certificate(G: Graph, w: Weighting, z0: int, Z, route: str,
                              cfg: BoundConfig) -> SeparatorCertificate:
    S = G.closed_adj(z0) | frozenset(Z)
    cert = balanced_certificate(G, S, w, NEIGHBORHOOD_RATIO, lemma="3.2", route=route,
                                bound=cfg.g_impl, z0=z0, Z=Z)
    logger.debug(f"neighbourhood separator via {route}: z0={z0}, alpha(Z)={cert.alpha_Z}")
    return _finish(G, cert, cfg, w)


def _high_alpha_separator(G: Graph, q: int) -> Optional[VertexSet]:
    """A minimal separator with alpha >= q, or None when there is none."""
    if independence_number(G) < q:
        return None
    return next((S for S in iter_minimal_separators(G) if independence_number(G, S) >= q), None)


def _bag_route(G: Graph, w: Weighting, cfg: BoundConfig, route: str) -> SeparatorCertificate:
    """Take a (w, 1/2)-balanced bag Z of a tree decomposition and z0 = 0."""
    decompositions = candidate_decompositions(G, cfg.exact_cap)
    Z = balanced_bag(G, decompositions, w, Fraction(1, 2))
    if Z is None:
        raise CertificateError(cause="no (w, 1/2)-balanced bag in %s decompositions" % len(decompositions))
    if route == "bounded-separators" and G.n <= cfg.exact_cap:
        alpha_z = independence_number(G, Z)
        limit = 2 * cfg.q - 2
        conclude(alpha_z <= limit, G, cfg.pyramid_t, cfg.assert_mode, "3.2",
                 "balanced bag has alpha %s > %s although every minimal separator has alpha < %s"
                 % (alpha_z, limit, cfg.q), Z)
    return _neighborhood_certificate(G, w, 0, Z, route, cfg)


def _apex_alpha(G: Graph, v: int) -> int:
    return independence_number(G, G.adj(v))


def _best_pyramid(G: Graph, cfg: BoundConfig,
                  current: Optional[PyramidPresentation]) -> Optional[PyramidPresentation]:
    """The pyramid whose apex has the neighbourhood of largest alpha, scanning apexes downwards."""
    floor = _apex_alpha(G, current.apex) if current is not None else -1
    ranked = sorted(range(G.n), key=lambda v: (-_apex_alpha(G, v), v))
    for v in ranked:
        if _apex_alpha(G, v) <= floor:
            break
        found = find_t_pyramid(G, 3, apexes=[v], budget=cfg.budget)
        if found is not None:
            return found
    return current


def _pyramid_route(G: Graph, w: Weighting, cfg: BoundConfig,
                   separator: VertexSet) -> Optional[SeparatorCertificate]:
    t = cfg.pyramid_t
    am = cfg.assert_mode
    sides = full_components(G, separator)
    first = pyramid_through_separator(G, separator, sides[0], sides[1], t, cfg.budget, am)
    pyramid = _best_pyramid(G, cfg, None if first is None else first.restricted(3))
    if pyramid is None:
        logger.warning("no pyramid found next to a minimal separator of large alpha")
        return None

    for _ in range(G.n):
        ctx = simplicialize_pyramid(G, pyramid, t, am)
        Z = ctx.Z
        if is_balanced_separator(G, Z, w, NEIGHBORHOOD_RATIO):
            return _neighborhood_certificate(G, w, pyramid.apex, Z, "pyramid", cfg)
        C = heaviest_component(G, Z, w)
        if not conclude(C != ctx.component, G, t, am, "3.2",
                        "the heavy component of G - Z holds the pyramid", C):
            return None
        z0 = min(Z & G.neighborhood(C))
        S = G.closed_adj(z0) | Z
        if is_balanced_separator(G, S, w, NEIGHBORHOOD_RATIO):
            return _neighborhood_certificate(G, w, z0, Z, "pyramid", cfg)

        C2 = heaviest_component(G, S, w)
        Z1 = G.adj(z0) & C & G.neighborhood(C2)
        z1 = min(Z1)
        outside = sorted(ctx.component - G.adj(z0))
        if outside:
            v = outside[0]
            w_far = min(C2 - G.closed_adj(z1))
            path = (_induced_path(G, ctx.component | {z0}, v, z0)
                    + _induced_path(G, C2 | {z1}, z1, w_far))
            conclude(False, G, t, am, "3.2", "the pyramid's component is not inside N(%s)" % z0, path,
                     witness=p6_violation(G, "3.2", path, "the pyramid's component is not inside N(%s)" % z0))
            return None

        alpha_z, alpha_z1 = independence_number(G, Z), independence_number(G, Z1)
        if alpha_z1 <= alpha_z:
            Z_next = Z | Z1
            S_next = G.closed_adj(z1) | Z_next
            if is_balanced_separator(G, S_next, w, NEIGHBORHOOD_RATIO):
                return _neighborhood_certificate(G, w, z1, Z_next, "pyramid-step", cfg)
            detail = "N[%s] + Z + Z1 is not balanced" % z1
            C3 = heaviest_component(G, S_next, w)
            Z2 = G.adj(z1) & C2 & G.neighborhood(C3)
            witness = None
            if Z2:
                z2 = min(Z2)
                w_far = min(C3 - G.closed_adj(z2))
                path = [pyramid.apex, z0, z1] + _induced_path(G, C3 | {z2}, z2, w_far)
                witness = p6_violation(G, "3.2", path, detail)
            conclude(False, G, t, am, "3.2", detail, S_next, witness=witness)
            return None

        sub = G.induced_subgraph({z0} | Z1 | C2)
        with lifted(sub, "lemma 3.2"):
            local = pyramid_through_separator(sub, sub.lower(Z1), sub.lower([z0]), sub.lower(C2), t,
                                              cfg.budget, am)
        if local is not None:
            following = local.relabelled(sub.labels).restricted(3)
        else:
            following = find_t_pyramid(G, 3, apexes=[z0], budget=cfg.budget)
        if following is None:
            logger.warning(f"no pyramid with apex {z0}")
            return None
        conclude(_apex_alpha(G, following.apex) > _apex_alpha(G, pyramid.apex), G, t, am, "3.2",
                 "alpha(N(%s)) does not exceed alpha(N(%s))" % (following.apex, pyramid.apex),
                 following.vertices | pyramid.vertices)
        logger.debug(f"moving the pyramid apex from {pyramid.apex} to {following.apex}")
        pyramid = following
    return None


def neighborhood_balanced_separator(G: Graph, w: Weighting, cfg: BoundConfig) -> SeparatorCertificate:
    """A (w, 7/8)-balanced separator N[z0] + Z with alpha(Z) <= g_impl.

    Routes, tried in order: a vertex whose closed neighbourhood weighs
    more than 1/8; a balanced bag when no minimal separator has alpha
    >= q; the pyramid argument; a balanced bag as the last resort.

    :raises PreconditionError: when G is disconnected or w is not normal
    """
    w.check_host(G)
    if G.n == 0:
        raise PreconditionError(cause="the graph is empty")
    if len(components(G)) != 1:
        raise PreconditionError(cause="the graph is not connected")
    if not w.is_normal():
        raise PreconditionError(cause="the weighting is not normal, total %s" % w.total())

    heavy = max(range(G.n), key=lambda v: (w.weight(G.closed_adj(v)), -v))
    if w.weight(G.closed_adj(heavy)) > HEAVY_NEIGHBORHOOD:
        return _neighborhood_certificate(G, w, heavy, frozenset(), "heavy-neighborhood", cfg)

    separator = _high_alpha_separator(G, cfg.q)
    if separator is None:
        return _bag_route(G, w, cfg, "bounded-separators")
    cert = _pyramid_route(G, w, cfg, separator)
    if cert is None:
        logger.warning("pyramid route gave no separator, using a balanced bag")
        return _bag_route(G, w, cfg, "fallback")
    return cert


# -- combining the two oracles ---------------------------------------------

def ab_oracle(cfg: BoundConfig) -> ABOracle:
    def oracle(G: Graph, a: int, b: int) -> SeparatorCertificate:
        return small_alpha_ab_separator(G, a, b, cfg)
    return oracle


def neighborhood_oracle(cfg: BoundConfig) -> BalancedOracle:
    def oracle(G: Graph, w: Weighting) -> SeparatorCertificate:
        return neighborhood_balanced_separator(G, w, cfg)
    return oracle


def _call(oracle, where: str, *args) -> SeparatorCertificate:
    try:
        return oracle(*args)
    except TinError as err:
        raise err.add_provenance(where)


def lemma33_balanced_separator(G: Graph, w: Weighting, cfg: BoundConfig,
                               oracle_a: Optional[ABOracle] = None,
                               oracle_b: Optional[BalancedOracle] = None) -> SeparatorCertificate:
    """A (w, c)-balanced separator with alpha <= a + 2b + 4.

    Grows a clique T. Each round either returns T, returns the oracle_a
    separator of a non-adjacent pair of T padded with their recorded
    sets, or asks oracle_b for N[v'] + B' inside the heavy component of
    G - T and adds v' to T with B_{v'} = B' + T.

    :raises PreconditionError: when w is not normal
    :raises CertificateError: when an oracle breaks its contract
    """
    w.check_host(G)
    if not w.is_normal():
        raise PreconditionError(cause="the weighting is not normal, total %s" % w.total())
    c = cfg.c
    t = cfg.t
    oracle_a = oracle_a or ab_oracle(cfg)
    oracle_b = oracle_b or neighborhood_oracle(cfg)
    a_bound, b_bound = cfg.a_bound, cfg.g_impl
    bound = combined_bound(a_bound, b_bound)
    T: List[int] = []
    padding: Dict[int, VertexSet] = {}

    for _ in range(G.n + 1):
        pair = next(((u, v) for i, u in enumerate(T) for v in T[i + 1:] if not G.has_edge(u, v)), None)
        if pair is not None:
            v1, v2 = pair
            a_cert = _call(oracle_a, "lemma 3.3 oracle_a", G, v1, v2)
            A = a_cert.separator
            if v1 in A or v2 in A or not is_ab_separator(G, A, v1, v2):
                raise CertificateError(cause="oracle_a returned %s, not a (%s, %s)-separator"
                                       % (sorted(A), v1, v2))
            S = A | {v1, v2} | padding[v1] | padding[v2]
            cert = balanced_certificate(G, S, w, c, lemma="3.3", route="non-adjacent-pair", bound=bound)
            conclude(is_balanced_separator(G, S, w, c), G, t, cfg.assert_mode, "3.3",
                     "%s is not (w, %s)-balanced" % (sorted(S), c), S)
            conclude(cert.alpha <= bound, G, t, cfg.assert_mode, "3.3",
                     "alpha(S) = %s exceeds %s" % (cert.alpha, bound), S)
            logger.debug(f"two-oracle separator from the pair ({v1}, {v2}), alpha {cert.alpha}")
            return _finish(G, cert, cfg, w)

        if is_balanced_separator(G, T, w, c):
            cert = balanced_certificate(G, T, w, c, lemma="3.3", route="clique", bound=bound)
            logger.debug(f"two-oracle separator is the clique {T}")
            return _finish(G, cert, cfg, w)

        heavy = heaviest_component(G, T, w)
        sub = G.induced_subgraph(heavy)
        w_heavy = w.renormalized(heavy)
        conclude(all(w[x] <= w_heavy[x] for x in heavy), G, t, cfg.assert_mode, "3.3",
                 "renormalizing lowered a weight", heavy)
        b_cert = _call(oracle_b, "lemma 3.3 oracle_b", sub, w_heavy.induced(sub.labels))
        if b_cert.z0 is None or b_cert.Z is None:
            raise CertificateError(cause="oracle_b did not return a separator of the form N[v] + B")
        if b_cert.c is None or b_cert.c > c:
            raise CertificateError(cause="oracle_b balances to %s, coarser than %s" % (b_cert.c, c))
        if b_cert.alpha_Z is not None and b_cert.alpha_Z > b_bound:
            logger.warning(f"oracle_b returned alpha(B) = {b_cert.alpha_Z} above {b_bound}")
        v = sub.labels[b_cert.z0]
        B = sub.lift(b_cert.Z) | frozenset(T)
        conclude(is_balanced_separator(G, G.closed_adj(v) | B, w, c), G, t, cfg.assert_mode, "3.3",
                 "N[%s] + B is not (w, %s)-balanced in G" % (v, c), B | {v})
        T.append(v)
        padding[v] = B
        logger.debug(f"clique grows to {T}")
    raise CertificateError(cause="the clique T outgrew the graph")
