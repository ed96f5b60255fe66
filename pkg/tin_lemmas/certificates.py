"""Separator certificates and their independent re-verification.

A certificate names a vertex set and the claim it witnesses: either it
separates two vertices (kind ``AB``) or it is a (w, c)-balanced
separator (kind ``Balanced``). Claims made inside an induced subgraph
record that subgraph's vertex set as `scope`.
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Dict, Optional

from tin_common.digest import get_digest
from tin_common.errors import CertificateError
from tin_common.graph import Graph, VertexSet, independence_number, is_ab_separator
from tin_common.weighting import Weighting, is_balanced_separator

__all__ = ["SeparatorCertificate", "ab_certificate", "balanced_certificate",
           "verify_certificate", "weighting_id"]

logger = logging.getLogger(__name__)


def weighting_id(w: Weighting) -> str:
    return get_digest(*w.to_json())[:12]


@dataclass(frozen=True)
class SeparatorCertificate:
    separator: VertexSet
    kind: str
    alpha: int
    lemma: str = ""
    route: str = ""
    a: Optional[int] = None
    b: Optional[int] = None
    c: Optional[Fraction] = None
    weighting: Optional[str] = None
    bound: Optional[int] = None
    scope: Optional[VertexSet] = None
    z0: Optional[int] = None
    Z: Optional[VertexSet] = None
    alpha_Z: Optional[int] = None
    verified: bool = False

    @property
    def within_bound(self) -> bool:
        if self.bound is None:
            return True
        measured = self.alpha_Z if self.Z is not None else self.alpha
        return measured <= self.bound

    def to_dict(self) -> Dict[str, Any]:
        item = {
            "kind": self.kind,
            "separator": sorted(self.separator),
            "alpha": self.alpha,
            "lemma": self.lemma,
            "route": self.route,
            "bound": self.bound,
            "verified": self.verified
        }
        if self.kind == "AB":
            item.update(a=self.a, b=self.b)
        else:
            item.update(c=str(self.c), weighting=self.weighting)
        if self.scope is not None:
            item["scope"] = sorted(self.scope)
        if self.Z is not None:
            item.update(z0=self.z0, Z=sorted(self.Z), alpha_Z=self.alpha_Z)
        return item


def ab_certificate(G: Graph, S, a: int, b: int, lemma: str = "", route: str = "",
                   bound: Optional[int] = None, scope=None) -> SeparatorCertificate:
    S = frozenset(S)
    return SeparatorCertificate(S, "AB", independence_number(G, S), lemma=lemma, route=route,
                                a=a, b=b, bound=bound,
                                scope=None if scope is None else frozenset(scope))


def balanced_certificate(G: Graph, S, w: Weighting, c, lemma: str = "", route: str = "",
                         bound: Optional[int] = None, z0: Optional[int] = None,
                         Z=None) -> SeparatorCertificate:
    S = frozenset(S)
    Z = None if Z is None else frozenset(Z)
    return SeparatorCertificate(S, "Balanced", independence_number(G, S), lemma=lemma, route=route,
                                c=Fraction(c), weighting=weighting_id(w), bound=bound, z0=z0, Z=Z,
                                alpha_Z=None if Z is None else independence_number(G, Z))


def verify_certificate(G: Graph, cert: SeparatorCertificate,
                       w: Optional[Weighting] = None) -> SeparatorCertificate:
    """Re-check a certificate from scratch and return it marked verified.

    Separation is re-checked by reachability, balance by weighing the
    components, and alpha by the exact solver.

    :raises CertificateError: when any part of the claim fails
    """
    if cert.scope is None:
        host = G
        local = frozenset(v for v in cert.separator if 0 <= v < G.n)
        ends = [frozenset([v]) if v is not None and 0 <= v < G.n else frozenset() for v in (cert.a, cert.b)]
    else:
        host = G.induced_subgraph(cert.scope)
        local = host.lower(cert.separator)
        ends = [host.lower([] if v is None else [v]) for v in (cert.a, cert.b)]
    if len(local) != len(cert.separator):
        raise CertificateError(cause="separator leaves the scope of the claim")
    if independence_number(G, cert.separator) != cert.alpha:
        raise CertificateError(cause="alpha of %s is not %s" % (sorted(cert.separator), cert.alpha))
    if cert.kind == "AB":
        a, b = ends
        if not a or not b:
            raise CertificateError(cause="endpoints outside the scope of the claim")
        if cert.a in cert.separator or cert.b in cert.separator:
            raise CertificateError(cause="separator contains an endpoint")
        if not is_ab_separator(host, local, min(a), min(b)):
            raise CertificateError(cause="%s does not separate %s from %s" % (sorted(cert.separator),
                                                                          cert.a, cert.b))
    elif cert.kind == "Balanced":
        if w is None:
            raise CertificateError(cause="a weighting is needed to verify balance")
        if weighting_id(w) != cert.weighting:
            raise CertificateError(cause="certificate was issued for another weighting")
        if not is_balanced_separator(G, cert.separator, w, cert.c):
            raise CertificateError(cause="%s is not (w, %s)-balanced" % (sorted(cert.separator), cert.c))
        if cert.Z is not None:
            if cert.z0 is not None and G.closed_adj(cert.z0) | cert.Z != cert.separator:
                raise CertificateError(cause="separator is not N[z0] + Z")
            if independence_number(G, cert.Z) != cert.alpha_Z:
                raise CertificateError(cause="alpha of Z is not %s" % cert.alpha_Z)
    else:
        raise CertificateError(cause="unknown certificate kind %s" % cert.kind)
    if not cert.within_bound:
        raise CertificateError(cause="alpha exceeds the bound %s" % cert.bound)
    return replace(cert, verified=True)
