"""The commands behind the tin-pyramids CLI and run.py.

A command turns a list of graphs into a RunReport. Graph commands run
one instance at a time, optionally spread over a process pool; results
come back in input order so the report does not depend on `jobs`.
"""

import logging
import sys
from functools import partial
from multiprocessing import Pool
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from tin_common.errors import EXIT_OK, PreconditionError, TinError, exit_code_of
from tin_common.formats import parse_weights, read_graphs, to_graph6
from tin_common.graph import Graph
from tin_common.weighting import Weighting
from tin_decomposition.builder import build_from_balanced_separators, oracle_by_name
from tin_decomposition.exact import exact_tree_independence, exact_treewidth
from tin_decomposition.tree_decomposition import alpha_width, validate, width
from tin_generators.enumeration import enumerate_levels, free_predicate
from tin_generators.sampler import GeneratorSpec
from tin_lemmas.bounds import BoundConfig
from tin_lemmas.certificates import verify_certificate
from tin_lemmas.separator_engine import (lemma33_balanced_separator, neighborhood_balanced_separator,
                                         small_alpha_ab_separator)
from tin_patterns.paths import find_induced_path, find_k2t
from tin_cli.report import RunReport
from tin_cli.suites import SuiteParams, run_suite

__all__ = ["BaseCommand", "CheckCommand", "SeparateCommand", "BalanceCommand", "DecomposeCommand",
           "ExactCommand", "SurveyCommand", "SuiteCommand", "COMMANDS", "GRAPH_COMMANDS", "build_command",
           "load_graphs", "BALANCE_ENGINES"]

logger = logging.getLogger(__name__)

# (row, passed, alpha, exit code)
Outcome = Tuple[Dict[str, Any], Optional[bool], Optional[int], int]

BALANCE_ENGINES = ("neighborhood", "lemma33")

REPORTED_KEYS = ("t", "c", "seed", "budget", "assert_mode", "exact_cap", "q", "g_impl", "r", "max_depth")


def load_graphs(paths: Sequence[str], fmt: str = "graph6", generate: Optional[str] = None,
                stdin=None) -> Tuple[List[Graph], List[str]]:
    """Graphs from files ('-' is stdin) or from a JSON generator spec, with the texts they came from."""
    if generate:
        return GeneratorSpec.from_json(generate).generate(), [generate]
    graphs, texts = [], []
    for path in paths or ["-"]:
        if path == "-":
            text = (stdin or sys.stdin).read()
        else:
            try:
                with open(path, encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as err:
                raise PreconditionError(cause="cannot read %s: %s" % (path, err.strerror))
        try:
            graphs.extend(read_graphs(text, fmt))
        except TinError as err:
            raise err.add_provenance(path)
        texts.append(text)
    logger.info(f"read {len(graphs)} graphs from {len(texts)} inputs")
    return graphs, texts


class BaseCommand:
    name = None
    default_out = "json"

    def __init__(self, config: Dict[str, Any], options: Optional[Dict[str, Any]] = None):
        """ A command of the CLI.
        :param config: merged configuration dictionary, see tin_common.config
        :param options: command-specific options
        """
        self.config = config
        self.options = dict(options or {})
        self.cfg = BoundConfig.from_config(config)

    def params(self) -> Dict[str, Any]:
        """Everything the report depends on besides the inputs."""
        params = {key: self.config.get(key) for key in REPORTED_KEYS}
        params.update({key: value for key, value in self.options.items() if not isinstance(value, Weighting)})
        return params

    def handle(self, G: Graph) -> Tuple[Dict[str, Any], Optional[bool], Optional[int]]:
        raise NotImplementedError

    def run_instance(self, index: int, G: Graph) -> Outcome:
        row = {"instance": index, "n": G.n, "m": G.edge_count, "graph6": to_graph6(G)}
        try:
            result, passed, alpha = self.handle(G)
        except TinError as err:
            logger.warning(f"{self.name} instance {index}: {err}")
            return {**row, "error": str(err), "provenance": list(err.provenance),
                    **self._report_of(err)}, False, None, exit_code_of(err)
        return {**row, **result}, passed, alpha, EXIT_OK

    @staticmethod
    def _report_of(err: TinError) -> Dict[str, Any]:
        report = getattr(err, "report", None)
        return {} if report is None else {"counterexample": report.to_dict()}

    def run(self, graphs: Sequence[Graph], inputs: Sequence[str]) -> RunReport:
        report = RunReport(self.name, inputs, self.params())
        jobs = int(self.config.get("jobs") or 1)
        if jobs > 1 and len(graphs) > 1:
            with Pool(jobs) as pool:
                outcomes = pool.starmap(partial(_run_instance, self.name, self.config, self.options),
                                        list(enumerate(graphs)))
        else:
            outcomes = [self.run_instance(index, G) for index, G in enumerate(graphs)]
        for row, passed, alpha, code in outcomes:
            report.add(row, passed=passed, alpha=alpha, exit_code=code)
        return report.finish()


class CheckCommand(BaseCommand):
    name = "check"

    def handle(self, G):
        r = int(self.config.get("r") or 6)
        path = find_induced_path(G, r)
        k2t = find_k2t(G, self.cfg.t)
        return {
            "r": r,
            "path_free": path is None,
            "path_witness": path,
            "k2t_free": k2t is None,
            "k2t_witness": None if k2t is None else list(k2t[0]) + list(k2t[1])
        }, None, None


class SeparateCommand(BaseCommand):
    name = "separate"

    def handle(self, G):
        a, b = self.options.get("a"), self.options.get("b")
        if a is None or b is None:
            raise PreconditionError(cause="separate needs the endpoints a and b")
        G.check_vertices([a, b], "endpoints")
        cert = verify_certificate(G, small_alpha_ab_separator(G, a, b, self.cfg))
        return {"certificate": cert.to_dict()}, cert.verified, cert.alpha


class BalanceCommand(BaseCommand):
    name = "balance"

    def weighting(self, G: Graph) -> Weighting:
        weights = self.options.get("weights")
        if weights is None:
            return Weighting.uniform(G.n)
        if isinstance(weights, str):
            try:
                with open(weights, encoding="utf-8") as handle:
                    weights = parse_weights(handle.read())
            except OSError as err:
                raise PreconditionError(cause="cannot read %s: %s" % (weights, err.strerror))
            self.options["weights"] = weights
        weights.check_host(G)
        return weights

    def handle(self, G):
        engine = self.options.get("oracle") or "neighborhood"
        engines_switch = {
            "neighborhood": lambda w: neighborhood_balanced_separator(G, w, self.cfg),
            "lemma33": lambda w: lemma33_balanced_separator(G, w, self.cfg)
        }
        if engine not in engines_switch:
            raise PreconditionError(cause="unknown balanced separator engine %s, expected one of %s"
                                    % (engine, ", ".join(BALANCE_ENGINES)))
        w = self.weighting(G)
        cert = verify_certificate(G, engines_switch[engine](w), w)
        return {"certificate": cert.to_dict()}, cert.verified, cert.alpha


class DecomposeCommand(BaseCommand):
    name = "decompose"

    def handle(self, G):
        oracle, ratio = oracle_by_name(self.options.get("oracle") or "neighborhood", self.cfg)
        D = build_from_balanced_separators(G, oracle, ratio, self.cfg.max_depth)
        valid, axiom = validate(D)
        measured = alpha_width(D)
        return {
            "bags": D.bag_count,
            "alpha_width": measured,
            "width": width(D),
            "valid": valid,
            "violated_axiom": axiom,
            "decomposition": D.to_json()
        }, valid, measured


class ExactCommand(BaseCommand):
    name = "exact"

    def handle(self, G):
        tin = exact_tree_independence(G, self.cfg.exact_cap)
        return {
            "tin": tin,
            "treewidth": exact_treewidth(G, self.cfg.exact_cap),
            "chordal": nx.is_chordal(G.nx_graph)
        }, None, tin


class SurveyCommand(BaseCommand):
    """Free isomorphism classes per vertex count and their largest tree-independence number."""

    name = "survey"
    default_out = "csv"

    def run(self, graphs=(), inputs=()) -> RunReport:
        n_max = int(self.options.get("n_max") or 6)
        r = int(self.config.get("r") or 6)
        cap = int(self.config.get("enumerate_cap") or 9)
        report = RunReport(self.name, [str(n_max)], self.params())
        tin = partial(exact_tree_independence, cap=self.cfg.exact_cap)
        jobs = int(self.config.get("jobs") or 1)
        upto = None
        pool = Pool(jobs) if jobs > 1 else None
        try:
            for n, level in enumerate(enumerate_levels(n_max, free_predicate(self.cfg.t, r), cap), start=1):
                values = pool.map(tin, level) if pool else [tin(G) for G in level]
                best = max(values) if values else None
                extremal = None if best is None else to_graph6(level[values.index(best)])
                if best is not None:
                    upto = best if upto is None else max(upto, best)
                logger.info(f"survey n={n}: {len(level)} classes, max tin {best}")
                report.add({"n": n, "count": len(level), "max_tin": best, "extremal_graph6": extremal,
                            "max_tin_upto": upto}, alpha=best)
        finally:
            if pool:
                pool.close()
                pool.join()
        return report.finish()


class SuiteCommand(BaseCommand):
    name = "suite"

    def run(self, graphs=(), inputs=()) -> RunReport:
        params = SuiteParams(self.cfg,
                             count=int(self.options.get("count") or 20),
                             n_max=int(self.options.get("n_max") or 16),
                             seed=int(self.config.get("seed") or 0),
                             pairs=int(self.options.get("pairs") or 3),
                             weightings=int(self.options.get("weightings") or 5),
                             enumerate_n=int(self.options.get("enumerate_n") or 6))
        name = self.options.get("suite") or "all"
        report = RunReport(self.name, [name], {**self.params(), **params.to_dict()})
        return run_suite(name, params, report).finish()


COMMANDS = {command.name: command for command in (CheckCommand, SeparateCommand, BalanceCommand,
                                                  DecomposeCommand, ExactCommand, SurveyCommand,
                                                  SuiteCommand)}

GRAPH_COMMANDS = ("check", "separate", "balance", "decompose", "exact")


def build_command(name: str, config: Dict[str, Any], options: Optional[Dict[str, Any]] = None) -> BaseCommand:
    if name not in COMMANDS:
        raise PreconditionError(cause="unknown command %s, expected one of %s" % (name, ", ".join(COMMANDS)))
    return COMMANDS[name](config, options)


def _run_instance(name: str, config: Dict[str, Any], options: Dict[str, Any], index: int, G: Graph) -> Outcome:
    return build_command(name, config, options).run_instance(index, G)
