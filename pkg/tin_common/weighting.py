"""Vertex weightings and the balanced-separator predicate.

Weights are stored as exact fractions. Floats are converted with a
denominator limit of 10**6 so that comparisons against thresholds such
as 7/8 never depend on rounding.
"""

import logging
from fractions import Fraction
from numbers import Rational, Real
from typing import Iterable, List, Optional, Sequence, Union

from tin_common.errors import PreconditionError
from tin_common.graph import Graph, VertexSet, components

__all__ = ["Weighting", "to_fraction", "check_ratio", "is_balanced_separator",
           "heaviest_component", "NORMAL_TOLERANCE"]

logger = logging.getLogger(__name__)

NORMAL_TOLERANCE = Fraction(1, 10 ** 9)
FLOAT_DENOMINATOR_LIMIT = 10 ** 6

WeightLike = Union[int, float, str, Fraction]


def to_fraction(value: WeightLike) -> Fraction:
    """Convert ``"p/q"`` strings, decimal strings, ints and floats to a Fraction.

    :raises PreconditionError: when the value cannot be read as a number
    """
    if isinstance(value, bool):
        raise PreconditionError(cause="%r is not a weight" % value)
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, Real):
        return Fraction(float(value)).limit_denominator(FLOAT_DENOMINATOR_LIMIT)
    if isinstance(value, str):
        try:
            text = value.strip()
            if any(ch in text for ch in "eE") and "/" not in text:
                return Fraction(float(text)).limit_denominator(FLOAT_DENOMINATOR_LIMIT)
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as err:
            raise PreconditionError(cause="%r is not a rational number: %s" % (value, err))
    raise PreconditionError(cause="%r is not a rational number" % (value,))


def check_ratio(c: WeightLike) -> Fraction:
    """Read a balance ratio and check 1/2 <= c < 1."""
    c = to_fraction(c)
    if not Fraction(1, 2) <= c < 1:
        raise PreconditionError(cause="balance ratio c must satisfy 1/2 <= c < 1, got %s" % c)
    return c


class Weighting:
    """Non-negative vertex weights of a graph on ``len(weights)`` vertices."""

    def __init__(self, weights: Iterable[WeightLike]):
        values = tuple(to_fraction(w) for w in weights)
        negative = [v for v, w in enumerate(values) if w < 0]
        if negative:
            raise PreconditionError(cause="negative weight on vertices %s" % negative)
        self.weights = values

    @classmethod
    def uniform(cls, n: int, support: Optional[Iterable[int]] = None) -> "Weighting":
        """Weight 1/|support| on `support` (every vertex by default), zero elsewhere."""
        support = frozenset(range(n)) if support is None else frozenset(support)
        if not support:
            return cls([0] * n)
        share = Fraction(1, len(support))
        return cls(share if v in support else 0 for v in range(n))

    @property
    def n(self) -> int:
        return len(self.weights)

    def __getitem__(self, v: int) -> Fraction:
        return self.weights[v]

    def __len__(self):
        return len(self.weights)

    def __eq__(self, other):
        return isinstance(other, Weighting) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return "Weighting(%s)" % [str(w) for w in self.weights]

    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def weight(self, vs: Iterable[int]) -> Fraction:
        """w(X)"""
        return sum((self.weights[v] for v in vs), Fraction(0))

    def is_normal(self) -> bool:
        return abs(self.total() - 1) <= NORMAL_TOLERANCE

    def is_trivial(self) -> bool:
        return self.total() == 0

    def normalized(self) -> "Weighting":
        """w' = w / w(G); requires a nontrivial weighting."""
        total = self.total()
        if total == 0:
            raise PreconditionError(cause="cannot normalize the all-zero weighting")
        return Weighting(w / total for w in self.weights)

    def renormalized(self, vs: Iterable[int]) -> "Weighting":
        """w'(x) = w(x) / w(vs) on `vs`, zero elsewhere."""
        vs = frozenset(vs)
        total = self.weight(vs)
        if total == 0:
            raise PreconditionError(cause="set %s carries no weight" % sorted(vs))
        return Weighting((self.weights[v] / total) if v in vs else 0 for v in range(self.n))

    def induced(self, labels: Sequence[int]) -> "Weighting":
        """The weighting of an induced subgraph whose vertex i is `labels[i]` here."""
        return Weighting(self.weights[v] for v in labels)

    def to_json(self) -> List[str]:
        return [str(w) for w in self.weights]

    def check_host(self, G: Graph):
        if self.n != G.n:
            raise PreconditionError(cause="weighting has %s entries but the graph has %s vertices"
                                    % (self.n, G.n))


def is_balanced_separator(G: Graph, S: Iterable[int], w: Weighting, c: WeightLike) -> bool:
    """True iff every component D of G - S has w(D) <= c * w(G)."""
    c = check_ratio(c)
    w.check_host(G)
    bound = c * w.total()
    return all(w.weight(D) <= bound for D in components(G, S))


def heaviest_component(G: Graph, S: Iterable[int], w: Weighting) -> Optional[VertexSet]:
    """The component of G - S of largest weight; ties go to the smallest minimum vertex."""
    best = None
    best_weight = None
    for D in components(G, S):
        weight = w.weight(D)
        if best is None or weight > best_weight:
            best, best_weight = D, weight
    return best
