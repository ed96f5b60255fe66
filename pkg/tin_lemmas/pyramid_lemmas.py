"""Constructions around pyramids.

* :func:`simplicialize_pyramid` removes the attachments of a pyramid
  that see a non-clique of it, leaving a component in which the
  pyramid is simplicial.
* :func:`apex_base_separator` separates the apex of a simplicial
  pyramid from a basic vertex.
* :func:`pyramid_from_paths` finds a pyramid with a given apex and a
  given basic vertex when the apex has many independent neighbours on
  induced paths to it.
* :func:`pyramid_through_separator` finds a pyramid whose legs lie in a
  minimal separator and whose apex and base lie in two full components.

Every function checks the conclusions it promises. In assert mode a
failed conclusion raises :class:`LemmaViolation` with an induced P6 or
K_{2,t} of the input, built from the failing configuration where that
is possible and found by exact search otherwise.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from tin_common.errors import BudgetExhaustedError, CertificateError, PreconditionError
from tin_common.graph import (Graph, VertexSet, components, independence_number,
                              induced_paths, is_ab_separator, is_clique, is_independent,
                              maximum_independent_set, path_neighbors)
from tin_lemmas.bounds import apex_base_bound, pyramid_z_bound, pyramid_t
from tin_lemmas.certificates import SeparatorCertificate, ab_certificate
from tin_lemmas.refutation import conclude, k2t_violation, p6_violation
from tin_patterns.pyramids import (DEFAULT_BUDGET, PyramidPresentation, basic_vertices,
                                   check_presentation, find_t_pyramid, is_pyramid_presentation)
from tin_patterns.structures import (CombinationOutcome, combine_structures,
                                     find_attached_structure)

__all__ = ["SimplicialContext", "simplicialize_pyramid", "apex_base_separator",
           "pyramid_from_paths", "structured_pyramid_search", "pyramid_through_separator"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplicialContext:
    """A pyramid together with the sets that make it simplicial.

    :param Z: attachments whose neighbourhood in the pyramid is not a clique
    :param component: the component of G - Z containing the pyramid
    :param A: apex neighbours of the component outside the pyramid
    :param B: basic vertices of the component
    """

    Z: VertexSet
    component: VertexSet
    A: VertexSet
    B: VertexSet
    pyramid: PyramidPresentation

    def to_dict(self):
        return {"Z": sorted(self.Z), "component": sorted(self.component), "A": sorted(self.A),
                "B": sorted(self.B), "pyramid": self.pyramid.to_dict()}


def _attachment_witness(G: Graph, p: PyramidPresentation, Z: VertexSet, t: int):
    """A K_{2,t} on a non-edge of the pyramid and t independent common neighbours from Z."""
    for u, v in combinations(sorted(p.vertices), 2):
        if G.has_edge(u, v):
            continue
        common = [z for z in Z if G.has_edge(z, u) and G.has_edge(z, v)]
        independent = maximum_independent_set(G, common)
        if len(independent) >= t:
            return k2t_violation(G, "4.1", (u, v), independent, t,
                                 "alpha(Z) exceeds %s" % pyramid_z_bound(t))
    return None


def _partition_witness(G: Graph, p: PyramidPresentation, A: VertexSet, B: VertexSet,
                       rest: VertexSet):
    """An induced P6 through a vertex of the component that is neither in A nor B."""
    a, xs, ys = p.apex, p.legs, p.base
    detail = "the component is not partitioned by the pyramid, A and B"
    inside = p.vertices
    for v in sorted(rest):
        for i in range(3):
            j, k = [m for m in range(3) if m != i]
            if G.has_edge(v, xs[i]):
                found = p6_violation(G, "4.1", (v, xs[i], a, xs[j], ys[j], ys[k]), detail)
                if found:
                    return found
            if G.has_edge(v, ys[i]):
                for m in (j, k):
                    if not G.has_edge(v, ys[m]):
                        other = k if m == j else j
                        found = p6_violation(G, "4.1", (v, ys[i], ys[m], xs[m], a, xs[other]), detail)
                        if found:
                            return found
        if G.adj(v) & inside:
            continue
        for w in sorted(G.adj(v) & A):
            for i in range(3):
                j = (i + 1) % 3
                found = p6_violation(G, "4.1", (v, w, a, xs[i], ys[i], ys[j]), detail)
                if found:
                    return found
        for w in sorted(G.adj(v) & B):
            found = p6_violation(G, "4.1", (v, w, ys[0], xs[0], a, xs[1]), detail)
            if found:
                return found
    return None


def simplicialize_pyramid(G: Graph, pyramid: PyramidPresentation, t: int,
                          assert_mode: bool = True) -> SimplicialContext:
    """Make a pyramid simplicial by removing its non-clique attachments.

    Z holds the neighbours of the pyramid whose neighbourhood in it is
    not a clique; the pyramid is simplicial in its component of G - Z,
    which is partitioned by the pyramid, the apex neighbours A and the
    basic vertices B. alpha(Z) is at most 12(t-1).

    :raises PreconditionError: when `pyramid` is not a 3-pyramid of G
    :raises LemmaViolation: in assert mode, when a conclusion fails
    """
    check_presentation(G, pyramid)
    if pyramid.t != 3:
        raise PreconditionError(cause="expected a 3-pyramid, got %s legs" % pyramid.t)
    inside = pyramid.vertices
    Z = frozenset(z for z in G.neighborhood(inside) if not is_clique(G, G.adj(z) & inside))
    component = next(D for D in components(G, Z) if pyramid.apex in D)
    A = frozenset(v for v in G.adj(pyramid.apex) & component if v not in inside)
    B = basic_vertices(G, pyramid, among=component)
    rest = component - inside - A - B
    if rest:
        conclude(False, G, t, assert_mode, "4.1",
                 "vertices %s of the pyramid's component are neither apex neighbours nor basic"
                 % sorted(rest), rest, witness=_partition_witness(G, pyramid, A, B, rest))
    outside = component - inside
    non_simplicial = [v for v in outside if not (G.adj(v) & inside) or not is_clique(G, G.adj(v) & inside)]
    conclude(not non_simplicial, G, t, assert_mode, "4.1",
             "pyramid is not simplicial in its component at %s" % non_simplicial, non_simplicial)
    alpha_z = independence_number(G, Z)
    bound = pyramid_z_bound(t)
    if alpha_z > bound:
        conclude(False, G, t, assert_mode, "4.1", "alpha(Z) = %s exceeds %s" % (alpha_z, bound), Z,
                 witness=_attachment_witness(G, pyramid, Z, t))
    logger.debug(f"simplicialized pyramid at apex {pyramid.apex}: |Z|={len(Z)}, alpha(Z)={alpha_z}, "
                 f"|A|={len(A)}, |B|={len(B)}")
    return SimplicialContext(Z, component, A, B, pyramid)


def apex_base_separator(G: Graph, ctx: SimplicialContext, b: int, t: int,
                        assert_mode: bool = True) -> SeparatorCertificate:
    """Separate the apex from the basic vertex `b` inside the pyramid's component.

    S = (pyramid - apex) + (N(b) & A) + (N(b) & B & N(A - N(b))).
    The certificate is scoped to the component; its alpha is asserted
    against 2(max(t,3)-1)+3.
    """
    if b not in ctx.B:
        raise PreconditionError(cause="%s is not a basic vertex of the pyramid's component" % b)
    p = ctx.pyramid
    a = p.apex
    near = G.adj(b)
    far_apex_side = ctx.A - near
    S = ((p.vertices - {a}) | (near & ctx.A)
         | frozenset(u for u in near & ctx.B if G.adj(u) & far_apex_side))
    H = G.induced_subgraph(ctx.component)
    separated = is_ab_separator(H, H.lower(S), H.local(a), H.local(b))
    conclude(separated, G, t, assert_mode, "4.2", "%s does not separate the apex %s from %s"
             % (sorted(S), a, b), S)
    bound = apex_base_bound(pyramid_t(t))
    cert = ab_certificate(G, S, a, b, lemma="4.2", route="apex-base", bound=bound, scope=ctx.component)
    if cert.alpha > bound:
        witness = k2t_violation(G, "4.2", (a, b), maximum_independent_set(G, near & ctx.A), pyramid_t(t),
                                "alpha(S) = %s exceeds %s" % (cert.alpha, bound))
        conclude(False, G, pyramid_t(t), assert_mode, "4.2", "alpha(S) = %s exceeds %s" % (cert.alpha, bound),
                 S, witness=witness)
    return cert


def _long_path_witness(G: Graph, a: int, path, t: int):
    """A P6 or K_{2,t} explaining an induced (a, b)-path with more than three edges."""
    detail = "induced (a, b)-path %s is longer than three edges" % list(path)
    if len(path) >= 6:
        return p6_violation(G, "4.3", path[:6], detail)
    u, rest = path[1], path[2:]
    for x in sorted(G.adj(a) - {u}):
        if not any(G.has_edge(x, r) for r in rest):
            found = p6_violation(G, "4.3", [x] + list(path), detail)
            if found:
                return found
    for r in rest:
        common = G.adj(r) & G.adj(a)
        if len(common) >= t:
            return k2t_violation(G, "4.3", (a, r), common, t, detail)
    return None


def pyramid_from_paths(G: Graph, a: int, b: int, t: int,
                       assert_mode: bool = True) -> Optional[PyramidPresentation]:
    """A pyramid with apex `a` for which `b` is basic.

    Requires a and b non-adjacent, N(a) independent with at least
    3(t-1)+1 vertices, each on some induced (a, b)-path. Among the
    induced (a, b)-paths, X collects the apex neighbours on paths with
    three edges and Y their successors; Y' is an inclusion-minimal part
    of Y dominating X, found by deleting in ascending order. The first
    three vertices of Y' form the base. Without assert mode a failed
    conclusion is logged and None returned.

    :raises PreconditionError: naming the failed hypothesis
    :raises LemmaViolation: in assert mode, when a conclusion fails
    """
    G.check_vertices((a, b))
    if a == b:
        raise PreconditionError(cause="a and b must differ, both are %s" % a)
    if G.has_edge(a, b):
        raise PreconditionError(cause="a and b are adjacent")
    if t < 2:
        raise PreconditionError(cause="t must be at least 2, got %s" % t)
    apex_nbrs = G.adj(a)
    if not is_independent(G, apex_nbrs):
        raise PreconditionError(cause="N(a) not independent")
    if len(apex_nbrs) < 3 * (t - 1) + 1:
        raise PreconditionError(cause="degree too small: |N(a)| = %s < %s" % (len(apex_nbrs), 3 * (t - 1) + 1))
    stranded = sorted(apex_nbrs - path_neighbors(G, a, b))
    if stranded:
        raise PreconditionError(cause="vertices %s of N(a) lie on no induced (a, b)-path" % stranded)

    paths = []
    for path in induced_paths(G, a, b, max_vertices=6):
        if len(path) > 4:
            conclude(False, G, t, assert_mode, "4.3", "induced (a, b)-path %s is longer than three edges"
                     % path, path, witness=_long_path_witness(G, a, path, t))
            return None
        paths.append(path)
    X = frozenset(p[1] for p in paths if len(p) == 4)
    Y = frozenset(p[2] for p in paths if len(p) >= 4 and p[1] in X)

    minimal = set(Y)
    for y in sorted(Y):
        if all(G.adj(x) & (minimal - {y}) for x in X):
            minimal.discard(y)
    minimal = sorted(minimal)
    if len(minimal) < 3:
        witness = None
        for y in minimal:
            if len(G.adj(y) & X) >= t:
                witness = k2t_violation(G, "4.3", (a, y), G.adj(y) & X, t, "fewer than three base candidates")
                break
        if witness is None and len(apex_nbrs & G.adj(b)) >= t:
            witness = k2t_violation(G, "4.3", (a, b), apex_nbrs & G.adj(b), t, "fewer than three base candidates")
        conclude(False, G, t, assert_mode, "4.3", "only %s base candidates %s" % (len(minimal), minimal),
                 minimal, witness=witness)
        return None

    base = minimal[:3]
    legs = []
    for y in base:
        others = frozenset(minimal) - {y}
        private = [x for x in X & G.adj(y) if not G.adj(x) & others]
        if not conclude(bool(private), G, t, assert_mode, "4.3", "base vertex %s has no private leg" % y,
                        {a, y} | X):
            return None
        legs.append(min(private))
    for i, j in combinations(range(3), 2):
        if not G.has_edge(base[i], base[j]):
            k = 3 - i - j
            conclude(False, G, t, assert_mode, "4.3", "base %s is not a clique" % base, base,
                     witness=p6_violation(G, "4.3", (base[i], b, base[j], legs[j], a, legs[k]),
                                          "base %s is not a clique" % base))
            return None
    pyramid = PyramidPresentation(a, tuple(legs), tuple(base))
    ok = is_pyramid_presentation(G, pyramid) and b in basic_vertices(G, pyramid)
    if not conclude(ok, G, t, assert_mode, "4.3", "%s is not a pyramid with basic vertex %s"
                    % (pyramid.to_dict(), b), pyramid.vertices | {b}):
        return None
    logger.debug(f"pyramid from paths: {pyramid.to_dict()} with basic vertex {b}")
    return pyramid


def _check_full_components(G: Graph, S: VertexSet, C1: VertexSet, C2: VertexSet):
    parts = components(G, S)
    if C1 == C2 or C1 not in parts or C2 not in parts:
        raise PreconditionError(cause="C1 and C2 must be two distinct components of G - S")
    if G.neighborhood(C1) != S or G.neighborhood(C2) != S:
        raise PreconditionError(cause="S is not a minimal separator with full components C1 and C2")


def structured_pyramid_search(G: Graph, S: Iterable[int], C1: Iterable[int], C2: Iterable[int], t: int,
                              budget: int = DEFAULT_BUDGET) -> Optional[CombinationOutcome]:
    """Attach a maximum independent set of S to both sides and combine the two structures.

    The leaf set is shrunk alternately on each side, recomputing the
    structure from scratch, until both structures share their leaves.
    Returns None when a side has no structure with t leaves.
    """
    S, C1, C2 = frozenset(S), frozenset(C1), frozenset(C2)
    Y = maximum_independent_set(G, S)
    if len(Y) < t:
        return None
    first = find_attached_structure(G, C1, Y, t, budget)
    if first is None:
        return None
    second = find_attached_structure(G, C2, first.leaves, t, budget)
    while second is not None and second.leaves != first.leaves:
        first = find_attached_structure(G, C1, second.leaves, t, budget)
        if first is None:
            return None
        if first.leaves == second.leaves:
            break
        second = find_attached_structure(G, C2, first.leaves, t, budget)
    if second is None:
        return None
    logger.debug(f"combining {first.tag.value} and {second.tag.value} on {len(second.leaves)} leaves")
    return combine_structures(first, second)


def pyramid_through_separator(G: Graph, S: Iterable[int], C1: Iterable[int], C2: Iterable[int], t: int,
                              budget: int = DEFAULT_BUDGET,
                              assert_mode: bool = True) -> Optional[PyramidPresentation]:
    """A t-pyramid with legs in S, apex in one full component and base in the other.

    The structured search runs when alpha(S) >= t; a constrained pyramid
    search in both orientations is the fallback. None means neither
    found one, which is a legitimate outcome.

    :raises PreconditionError: when C1, C2 are not two full components of G - S
    :raises LemmaViolation: in assert mode, when the two structures
        combine into an induced K_{2,t} or a long induced path
    :raises BudgetExhaustedError: when the fallback search runs out of budget
    """
    S, C1, C2 = frozenset(S), frozenset(C1), frozenset(C2)
    if t < 3:
        raise PreconditionError(cause="pyramids through a separator need t >= 3, got %s" % t)
    _check_full_components(G, S, C1, C2)
    if independence_number(G, S) >= t:
        try:
            outcome = structured_pyramid_search(G, S, C1, C2, t, budget)
        except BudgetExhaustedError as err:
            logger.warning(f"structured pyramid search gave up: {err}")
            outcome = None
        if outcome is not None:
            if not outcome.verify(G):
                raise CertificateError(cause="combination %s is not induced" % (outcome.to_dict(),))
            if outcome.kind == "pyramid":
                return outcome.pyramid.restricted(t)
            detail = "structures across the separator combine into %s" % outcome.kind
            if outcome.kind == "K2t":
                witness = k2t_violation(G, "4.4", outcome.vertices[:2], outcome.vertices[2:], t, detail)
            else:
                witness = p6_violation(G, "4.4", outcome.vertices, detail)
            conclude(False, G, t, assert_mode, "4.4", detail, outcome.vertices, witness=witness)
    for apex_side, base_side in ((C1, C2), (C2, C1)):
        found = find_t_pyramid(G, t, apexes=apex_side, legs=S, bases=base_side, budget=budget)
        if found is not None:
            return found
    return None

