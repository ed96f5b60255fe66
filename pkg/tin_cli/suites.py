"""Verification suites: every lemma guarantee checked over seeded corpora.

Each suite adds one row per checked conclusion to a RunReport. Engine
errors are caught per instance and recorded as failed rows, so one bad
instance does not hide the rest of the corpus.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Tuple

import networkx as nx
import numpy as np

from tin_common.config import get_builder_baseline
from tin_common.errors import PreconditionError, TinError, exit_code_of
from tin_common.formats import to_graph6
from tin_common.graph import (Graph, full_components, independence_number, is_ab_separator,
                              minimal_separators)
from tin_common.weighting import Weighting
from tin_decomposition.builder import build_from_balanced_separators, oracle_by_name
from tin_decomposition.exact import exact_tree_independence
from tin_decomposition.tree_decomposition import alpha_width, validate
from tin_generators.enumeration import enumerate_levels, free_predicate
from tin_generators.planted import COMBINATION_CASES, lemma44_witness, planted_pyramid, planted_structures
from tin_generators.sampler import largest_component, random_gnp, sample_free
from tin_lemmas.bounds import BoundConfig, pyramid_z_bound
from tin_lemmas.certificates import verify_certificate
from tin_lemmas.pyramid_lemmas import apex_base_separator, pyramid_through_separator, simplicialize_pyramid
from tin_lemmas.separator_engine import (lemma33_balanced_separator, neighborhood_balanced_separator,
                                         small_alpha_ab_separator)
from tin_patterns.pyramids import find_t_pyramid
from tin_patterns.structures import combine_structures, find_attached_structure
from tin_cli.report import RunReport

__all__ = ["SUITES", "run_suite", "free_corpus", "random_weightings", "SuiteParams"]

logger = logging.getLogger(__name__)

BUILDER_ORACLES = ("neighborhood", "lemma33")

# largest n of the subset-filter and subset-enumeration cross-checks
SEPARATOR_CHECK_N = 8
ALPHA_CHECK_N = 16


class SuiteParams:
    def __init__(self, cfg: BoundConfig, count: int = 20, n_max: int = 16, seed: int = 0,
                 pairs: int = 3, weightings: int = 5, enumerate_n: int = 6):
        """ Sizes of one suite run.
        :param cfg: engine configuration
        :param count: number of sampled graphs
        :param n_max: largest sampled vertex count
        :param seed: seed of every random choice in the suite
        :param pairs: vertex pairs checked per graph by the (a, b)-separator suite
        :param weightings: random weightings per graph by the balanced separator suites
        :param enumerate_n: largest vertex count of the enumerated builder corpus
        """
        self.cfg = cfg
        self.count = count
        self.n_max = n_max
        self.seed = seed
        self.pairs = pairs
        self.weightings = weightings
        self.enumerate_n = enumerate_n

    def to_dict(self):
        return {"count": self.count, "n_max": self.n_max, "seed": self.seed, "pairs": self.pairs,
                "weightings": self.weightings, "enumerate_n": self.enumerate_n, "t": self.cfg.t}


def free_corpus(count: int, n_max: int, t: int, seed: int = 0,
                connected: bool = False) -> Iterator[Tuple[int, Graph]]:
    """`count` seeded sample_free graphs on at most `n_max` vertices."""
    rng = np.random.default_rng(seed)
    low = max(1, n_max // 2)
    for index in range(count):
        n = int(rng.integers(low, n_max + 1))
        p = float(rng.uniform(0.1, 0.4))
        G = sample_free(n, t, p, seed=int(rng.integers(2 ** 31)))
        if connected:
            G = largest_component(G)
        yield index, G


def random_weightings(G: Graph, count: int, rng) -> List[Weighting]:
    """The uniform weighting followed by `count - 1` random normal ones."""
    found = [Weighting.uniform(G.n)]
    while len(found) < count:
        weights = [int(x) for x in rng.integers(0, 10, size=G.n)]
        if sum(weights) == 0:
            continue
        found.append(Weighting(weights).normalized())
    return found[:count]


def _failed(report: RunReport, row: Dict, err: TinError):
    report.add({**row, "error": str(err)}, passed=False, exit_code=exit_code_of(err))
    logger.warning(f"{row.get('suite')} instance {row.get('instance')}: {err}")


def _non_adjacent_pairs(G: Graph, count: int, rng) -> List[Tuple[int, int]]:
    pairs = [(a, b) for a, b in combinations(range(G.n), 2) if not G.has_edge(a, b)]
    if len(pairs) <= count:
        return pairs
    chosen = rng.choice(len(pairs), size=count, replace=False)
    return [pairs[int(i)] for i in sorted(chosen)]


def suite_lemma31(params: SuiteParams, report: RunReport):
    cfg = params.cfg
    rng = np.random.default_rng(params.seed)
    for index, G in free_corpus(params.count, params.n_max, cfg.t, params.seed):
        graph6 = to_graph6(G)
        for a, b in _non_adjacent_pairs(G, params.pairs, rng):
            row = {"suite": "lemma31", "instance": index, "graph6": graph6, "a": a, "b": b}
            try:
                cert = verify_certificate(G, small_alpha_ab_separator(G, a, b, cfg))
            except TinError as err:
                _failed(report, row, err)
                continue
            report.add({**row, "route": cert.route, "alpha": cert.alpha, "bound": cert.bound},
                       passed=cert.verified, alpha=cert.alpha)


def _pyramid_corpus(params: SuiteParams) -> Iterator[Tuple[object, Graph]]:
    G, _ = planted_pyramid(basic=1, apex_side=1)
    yield "planted", G
    yield from free_corpus(params.count, params.n_max, params.cfg.t, params.seed)


def _simplicial_contexts(params: SuiteParams, report: RunReport, suite: str):
    cfg = params.cfg
    for index, G in _pyramid_corpus(params):
        row = {"suite": suite, "instance": index, "graph6": to_graph6(G)}
        try:
            pyramid = find_t_pyramid(G, 3, budget=cfg.budget)
            if pyramid is None:
                continue
            ctx = simplicialize_pyramid(G, pyramid, cfg.t, cfg.assert_mode)
        except TinError as err:
            _failed(report, row, err)
            continue
        yield index, G, row, ctx


def suite_lemma41(params: SuiteParams, report: RunReport):
    bound = pyramid_z_bound(params.cfg.t)
    for _, G, row, ctx in _simplicial_contexts(params, report, "lemma41"):
        inside = ctx.pyramid.vertices
        partition = (ctx.component == inside | ctx.A | ctx.B) and not (ctx.A & ctx.B)
        alpha_z = independence_number(G, ctx.Z)
        report.add({**row, "apex": ctx.pyramid.apex, "alpha_Z": alpha_z, "bound": bound,
                    "partition": partition}, passed=partition and alpha_z <= bound, alpha=alpha_z)


def suite_lemma42(params: SuiteParams, report: RunReport):
    cfg = params.cfg
    for _, G, row, ctx in _simplicial_contexts(params, report, "lemma42"):
        for b in sorted(ctx.B):
            item = {**row, "apex": ctx.pyramid.apex, "b": b}
            try:
                cert = verify_certificate(G, apex_base_separator(G, ctx, b, cfg.t, cfg.assert_mode))
            except TinError as err:
                _failed(report, item, err)
                continue
            report.add({**item, "alpha": cert.alpha, "bound": cert.bound}, passed=cert.verified,
                       alpha=cert.alpha)


def _balanced_suite(params: SuiteParams, report: RunReport, suite: str, engine: Callable):
    cfg = params.cfg
    rng = np.random.default_rng(params.seed)
    for index, G in free_corpus(params.count, params.n_max, cfg.t, params.seed, connected=True):
        graph6 = to_graph6(G)
        for k, w in enumerate(random_weightings(G, params.weightings, rng)):
            row = {"suite": suite, "instance": index, "graph6": graph6, "weighting": k}
            try:
                cert = verify_certificate(G, engine(G, w, cfg), w)
            except TinError as err:
                _failed(report, row, err)
                continue
            report.add({**row, "route": cert.route, "alpha": cert.alpha, "alpha_Z": cert.alpha_Z,
                        "z0": cert.z0, "bound": cert.bound}, passed=cert.verified, alpha=cert.alpha)


def suite_lemma32(params: SuiteParams, report: RunReport):
    _balanced_suite(params, report, "lemma32", neighborhood_balanced_separator)


def suite_lemma33(params: SuiteParams, report: RunReport):
    _balanced_suite(params, report, "lemma33", lemma33_balanced_separator)


def suite_figures(params: SuiteParams, report: RunReport):
    """The six structure combinations, and a pyramid through the planted separator."""
    for first, second, expected in COMBINATION_CASES:
        planted = planted_structures(first, second, 3)
        G = planted.graph
        row = {"suite": "figures", "instance": "%s+%s" % (first.value, second.value), "expected": expected}
        try:
            one = find_attached_structure(G, planted.first, planted.separator, 3, params.cfg.budget)
            two = find_attached_structure(G, planted.second, planted.separator, 3, params.cfg.budget)
            outcome = combine_structures(one, two)
        except TinError as err:
            _failed(report, row, err)
            continue
        report.add({**row, "kind": outcome.kind, "vertices": list(outcome.vertices)},
                   passed=outcome.kind == expected and outcome.verify(G))
    witness = lemma44_witness(3)
    row = {"suite": "figures", "instance": "separator", "expected": "pyramid"}
    try:
        pyramid = pyramid_through_separator(witness.graph, witness.separator, witness.first, witness.second, 3,
                                            params.cfg.budget, params.cfg.assert_mode)
    except TinError as err:
        _failed(report, row, err)
        return
    report.add({**row, "kind": "pyramid" if pyramid else None,
                "pyramid": pyramid.to_dict() if pyramid else None}, passed=pyramid is not None)


def _brute_minimal_separators(G: Graph):
    found = set()
    for mask in range(1 << G.n):
        S = frozenset(v for v in range(G.n) if mask >> v & 1)
        if len(full_components(G, S)) >= 2:
            found.add(S)
    return found


def _brute_alpha(G: Graph) -> int:
    masks = G.masks
    best = 0
    for subset in range(1 << G.n):
        members = [v for v in range(G.n) if subset >> v & 1]
        if len(members) > best and all(not masks[v] & subset for v in members):
            best = len(members)
    return best


def suite_oracles(params: SuiteParams, report: RunReport):
    """Fast engines against flood fill, subset filtering and chordality."""
    rng = np.random.default_rng(params.seed)
    tallies = {name: [0, 0] for name in ("ab_separator", "minimal_separators", "independence", "chordal")}

    def tally(name, agree):
        tallies[name][0] += 1
        tallies[name][1] += int(agree)

    for index in range(params.count):
        n = int(rng.integers(1, min(params.n_max, SEPARATOR_CHECK_N) + 1))
        G = random_gnp(n, float(rng.uniform(0.1, 0.7)), int(rng.integers(2 ** 31)))
        S = frozenset(int(v) for v in np.flatnonzero(rng.random(n) < 0.3))
        rest = sorted(set(range(n)) - S)
        if len(rest) >= 2:
            a, b = (int(v) for v in rng.choice(rest, size=2, replace=False))
            flood = not nx.has_path(G.nx_graph.subgraph(rest), a, b)
            tally("ab_separator", is_ab_separator(G, S, a, b) == flood)
        tally("minimal_separators", set(minimal_separators(G)) == _brute_minimal_separators(G))
        if n <= min(7, params.cfg.exact_cap):
            tally("chordal", (exact_tree_independence(G, params.cfg.exact_cap) <= 1) == nx.is_chordal(G.nx_graph))
        m = int(rng.integers(1, min(params.n_max, ALPHA_CHECK_N) + 1))
        H = random_gnp(m, float(rng.uniform(0.1, 0.7)), int(rng.integers(2 ** 31)))
        tally("independence", independence_number(H) == _brute_alpha(H))
    for name, (trials, agreements) in tallies.items():
        report.add({"suite": "oracles", "instance": name, "trials": trials, "agreements": agreements},
                   passed=trials == agreements)


def suite_builder(params: SuiteParams, report: RunReport):
    """Both lemma oracles through the builder on every free class up to `enumerate_n` vertices.

    A level fails when a decomposition is invalid or its alpha-width / tin
    ratio goes above the committed baseline for that vertex count.
    """
    cfg = params.cfg
    baseline = get_builder_baseline()
    levels = list(enumerate(enumerate_levels(params.enumerate_n, free_predicate(cfg.t)), start=1))
    for name in BUILDER_ORACLES:
        oracle, ratio = oracle_by_name(name, cfg)
        for n, level in levels:
            valid_count, widest, worst_ratio = 0, 0, Fraction(0)
            row = {"suite": "builder", "oracle": name, "instance": n, "count": len(level),
                   "baseline": None if n not in baseline else float(baseline[n])}
            try:
                for G in level:
                    D = build_from_balanced_separators(G, oracle, ratio, cfg.max_depth)
                    valid, _ = validate(D)
                    valid_count += int(valid)
                    measured = alpha_width(D)
                    widest = max(widest, measured)
                    if G.n <= cfg.exact_cap:
                        tin = max(1, exact_tree_independence(G, cfg.exact_cap))
                        worst_ratio = max(worst_ratio, Fraction(measured, tin))
            except TinError as err:
                _failed(report, row, err)
                continue
            within = n not in baseline or worst_ratio <= baseline[n]
            if not within:
                logger.warning(f"builder with {name} on n={n}: ratio {worst_ratio} above baseline {baseline[n]}")
            report.add({**row, "valid": valid_count, "max_alpha_width": widest,
                        "max_ratio": round(float(worst_ratio), 6)},
                       passed=valid_count == len(level) and within, alpha=widest)


SUITES = {
    "lemma31": suite_lemma31,
    "lemma41": suite_lemma41,
    "lemma42": suite_lemma42,
    "lemma32": suite_lemma32,
    "lemma33": suite_lemma33,
    "figures": suite_figures,
    "oracles": suite_oracles,
    "builder": suite_builder
}


def run_suite(name: str, params: SuiteParams, report: RunReport) -> RunReport:
    """Run the suite `name`, or every suite for ``all``."""
    suites_switch = {key: (lambda run=run: run(params, report)) for key, run in SUITES.items()}
    names = list(SUITES) if name == "all" else [name]
    for item in names:
        if item not in suites_switch:
            raise PreconditionError(cause="unknown suite %s, expected one of %s"
                                    % (item, ", ".join(["all"] + list(SUITES))))
        logger.info(f"suite {item}: {params.to_dict()}")
        suites_switch[item]()
    return report
