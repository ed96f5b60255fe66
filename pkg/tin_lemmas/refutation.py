"""Turning failed lemma conclusions into witnesses.

The lemmas only hold for graphs without an induced P6 and without an
induced K_{2,t}. Rather than testing freeness up front, the engines
check each conclusion as they reach it; a failed conclusion means the
input had a forbidden induced subgraph, and :func:`refute` finds one.
"""

import logging
from contextlib import contextmanager
from typing import Iterable, Optional

from tin_common.errors import LemmaViolation, TinError, violation
from tin_common.graph import Graph
from tin_patterns.paths import find_induced_path, find_k2t, is_induced_k2t, is_induced_path

__all__ = ["refute", "conclude", "lifted", "p6_violation", "k2t_violation"]

logger = logging.getLogger(__name__)


def p6_violation(G: Graph, lemma: str, path, detail: str) -> Optional[LemmaViolation]:
    """A P6 violation for `path` if it really is an induced P6 of G."""
    path = list(path)[:6]
    if len(path) == 6 and is_induced_path(G, path):
        return violation(lemma, detail, path, kind="P6")
    return None


def k2t_violation(G: Graph, lemma: str, pair, independent, t: int, detail: str) -> Optional[LemmaViolation]:
    independent = sorted(independent)[:t]
    if is_induced_k2t(G, pair, independent, t):
        return violation(lemma, detail, list(pair) + independent, kind="K2t")
    return None


def refute(G: Graph, t: int, lemma: str, detail: str, vertices: Iterable[int] = ()) -> LemmaViolation:
    """Search G exactly for an induced P6, then an induced K_{2,t}.

    Returns the violation to raise; its kind is ``assertion`` when G
    has neither, which means the failed conclusion is an engine defect
    rather than evidence against the input.
    """
    path = find_induced_path(G, 6)
    if path is not None:
        return violation(lemma, detail, path, kind="P6")
    found = find_k2t(G, t)
    if found is not None:
        pair, independent = found
        return violation(lemma, detail, pair + independent, kind="K2t")
    logger.error(f"lemma {lemma}: {detail}, and the graph has no induced P6 or K2,{t}")
    return violation(lemma, detail, sorted(vertices))


def conclude(ok: bool, G: Graph, t: int, assert_mode: bool, lemma: str, detail: str,
             vertices: Iterable[int] = (), witness: Optional[LemmaViolation] = None) -> bool:
    """Check one lemma conclusion.

    In assert mode a failed conclusion raises the given witness, or the
    result of :func:`refute`. Otherwise the failure is logged and False
    returned.
    """
    if ok:
        return True
    if not assert_mode:
        logger.warning(f"lemma {lemma} conclusion failed: {detail}")
        return False
    raise witness if witness is not None else refute(G, t, lemma, detail, vertices)


@contextmanager
def lifted(sub: Graph, where: str):
    """Run engine code on an induced subgraph, reporting failures in the parent's ids."""
    try:
        yield
    except LemmaViolation as err:
        raise err.relabelled(sub.labels).add_provenance(where) from err
    except TinError as err:
        raise err.add_provenance(where)
