""" Bound formulas and the engine configuration """

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from tin_common.errors import PreconditionError
from tin_common.weighting import check_ratio, to_fraction
from tin_patterns.pyramids import DEFAULT_BUDGET

__all__ = ["BoundConfig", "ab_separator_bound", "pyramid_z_bound", "apex_base_bound",
           "default_q", "combined_bound", "proven_bound", "pyramid_t", "NEIGHBORHOOD_RATIO",
           "HEAVY_NEIGHBORHOOD"]

logger = logging.getLogger(__name__)

NEIGHBORHOOD_RATIO = Fraction(7, 8)
HEAVY_NEIGHBORHOOD = Fraction(1, 8)
DEFAULT_EXACT_CAP = 12
DEFAULT_MAX_DEPTH = 10000


def pyramid_t(t: int) -> int:
    """K_{2,2}-free graphs are K_{2,3}-free, so pyramid arguments run with t >= 3."""
    return max(t, 3)


def ab_separator_bound(t: int) -> int:
    """alpha bound of the small (a, b)-separator: 14(t-1)+3"""
    return 14 * (t - 1) + 3


def pyramid_z_bound(t: int) -> int:
    """alpha bound of the non-clique attachments of a pyramid: 12(t-1)"""
    return 12 * (t - 1)


def apex_base_bound(t: int) -> int:
    """alpha bound of the apex/base separator: 2(t-1)+3"""
    return 2 * (t - 1) + 3


def default_q(t: int) -> int:
    return 12 * (pyramid_t(t) - 1) + 1


def combined_bound(a: int, b: int) -> int:
    """alpha bound of the two-oracle balanced separator: a + 2b + 4"""
    return a + 2 * b + 4


def proven_bound(t: int, g_impl: int) -> int:
    """Tree-independence bound 238(t-1) + 34 g + 119."""
    if t < 2:
        raise PreconditionError(cause="t must be at least 2, got %s" % t)
    return 238 * (t - 1) + 34 * g_impl + 119


@dataclass(frozen=True)
class BoundConfig:
    """Parameters shared by the separator engines.

    :param t: the forbidden K_{2,t}
    :param g_impl: stand-in for the bound on alpha(Z) of the
        neighbourhood separator; defaults to 2q
    :param c: balance ratio of the combined separator and the builder
    :param q: minimal-separator alpha threshold of the neighbourhood
        separator; defaults to 12(max(t,3)-1)+1
    :param budget: node cap of every bounded search
    :param assert_mode: check lemma conclusions and refute failures
    """

    t: int = 2
    g_impl: Optional[int] = None
    c: Fraction = NEIGHBORHOOD_RATIO
    q: Optional[int] = None
    budget: int = DEFAULT_BUDGET
    assert_mode: bool = True
    exact_cap: int = DEFAULT_EXACT_CAP
    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self):
        if self.t < 2:
            raise PreconditionError(cause="t must be at least 2, got %s" % self.t)
        object.__setattr__(self, "c", check_ratio(self.c))
        if self.q is None:
            object.__setattr__(self, "q", default_q(self.t))
        if self.q < 1:
            raise PreconditionError(cause="q must be positive, got %s" % self.q)
        if self.g_impl is None:
            object.__setattr__(self, "g_impl", 2 * self.q)
        if self.g_impl < 1:
            raise PreconditionError(cause="g_impl must be at least 1, got %s" % self.g_impl)
        if self.budget < 1:
            raise PreconditionError(cause="budget must be positive, got %s" % self.budget)

    @property
    def pyramid_t(self) -> int:
        return pyramid_t(self.t)

    @property
    def a_bound(self) -> int:
        return ab_separator_bound(self.t)

    @property
    def s_bound(self) -> int:
        return combined_bound(self.a_bound, self.g_impl)

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "BoundConfig":
        """Build from a merged configuration dictionary (see tin_common.config)."""
        assert_mode = config.get("assert_mode", "on")
        if isinstance(assert_mode, str):
            if assert_mode not in ("on", "off"):
                raise PreconditionError(cause="assert_mode must be on or off, got %s" % assert_mode)
            assert_mode = assert_mode == "on"
        q = config.get("q")
        g_impl = config.get("g_impl")
        return cls(t=int(config.get("t", 2)),
                   g_impl=None if g_impl is None else int(g_impl),
                   c=to_fraction(config.get("c", "7/8")),
                   q=None if q is None else int(q),
                   budget=int(config.get("budget", DEFAULT_BUDGET)),
                   assert_mode=bool(assert_mode),
                   exact_cap=int(config.get("exact_cap", DEFAULT_EXACT_CAP)),
                   max_depth=int(config.get("max_depth", DEFAULT_MAX_DEPTH)))
