"""tin-pyramids: freeness checks, separators, decompositions, exact oracles, suites and the survey.

Exit codes: 0 success, 1 a certificate or lemma conclusion failed,
2 bad input or a precondition failed, 3 a search ran out of budget.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from tin_common.config import load_config
from tin_common.errors import EXIT_PRECONDITION, TinError, exit_code_of
from tin_common.formats import GRAPH_FORMATS
from tin_decomposition.builder import ORACLES
from tin_cli.commands import BALANCE_ENGINES, GRAPH_COMMANDS, build_command, load_graphs
from tin_cli.report import REPORT_FORMATS
from tin_cli.suites import SUITES

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)

# flag destination -> configuration key
CONFIG_FLAGS = {
    "t": "t",
    "c": "c",
    "seed": "seed",
    "budget": "budget",
    "assert_mode": "assert_mode",
    "format": "format",
    "out": "out",
    "jobs": "jobs",
    "r": "r",
    "exact_cap": "exact_cap",
    "q": "q",
    "g_impl": "g_impl",
    "log_level": "log_level"
}


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="YAML configuration file")
    common.add_argument("--t", type=int, default=None, help="the forbidden K_{2,t}")
    common.add_argument("--c", default=None, help="balance ratio, e.g. 7/8")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--budget", type=int, default=None, help="node cap of every bounded search")
    common.add_argument("--assert-mode", dest="assert_mode", choices=["on", "off"], default=None)
    common.add_argument("--format", choices=GRAPH_FORMATS, default=None, help="input graph format")
    common.add_argument("--out", choices=REPORT_FORMATS, default=None, help="report format")
    common.add_argument("--out-file", dest="out_file", default=None, help="write the report here instead of stdout")
    common.add_argument("--jobs", type=int, default=None, help="worker processes")
    common.add_argument("--r", type=int, default=None, help="forbidden induced path length")
    common.add_argument("--exact-cap", dest="exact_cap", type=int, default=None)
    common.add_argument("--q", type=int, default=None, help="minimal-separator alpha threshold")
    common.add_argument("--g-impl", dest="g_impl", type=int, default=None, help="bound on alpha(Z)")
    common.add_argument("--log-level", dest="log_level", default=None)
    return common


def _add_inputs(parser: argparse.ArgumentParser):
    parser.add_argument("inputs", nargs="*", help="graph files, '-' for stdin (the default)")
    parser.add_argument("--generate", default=None, help="JSON generator spec used instead of input files")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="tin-pyramids", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[common], help="induced P_r and K_{2,t} detection")
    _add_inputs(check)

    separate = sub.add_parser("separate", parents=[common], help="small-alpha (a, b)-separator")
    _add_inputs(separate)
    separate.add_argument("--a", type=int, required=True)
    separate.add_argument("--b", type=int, required=True)

    balance = sub.add_parser("balance", parents=[common], help="balanced separator of bounded alpha")
    _add_inputs(balance)
    balance.add_argument("--weights", default=None, help="JSON array of vertex weights; uniform by default")
    balance.add_argument("--oracle", choices=BALANCE_ENGINES, default="neighborhood")

    decompose = sub.add_parser("decompose", parents=[common], help="tree decomposition from separators")
    _add_inputs(decompose)
    decompose.add_argument("--oracle", choices=ORACLES, default="neighborhood")

    exact = sub.add_parser("exact", parents=[common], help="exact tree-independence number and treewidth")
    _add_inputs(exact)

    survey = sub.add_parser("survey", parents=[common], help="largest tin among small free graphs")
    survey.add_argument("--n-max", dest="n_max", type=int, default=6)

    suite = sub.add_parser("suite", parents=[common], help="lemma verification suites")
    suite.add_argument("suite", nargs="?", default="all", choices=["all"] + list(SUITES))
    suite.add_argument("--count", type=int, default=20, help="sampled graphs")
    suite.add_argument("--n-max", dest="n_max", type=int, default=16, help="largest sampled graph")
    suite.add_argument("--pairs", type=int, default=3, help="vertex pairs per graph")
    suite.add_argument("--weightings", type=int, default=5, help="weightings per graph")
    suite.add_argument("--enumerate-n", dest="enumerate_n", type=int, default=6,
                       help="largest enumerated graph of the builder suite")
    return parser


def _options(args: argparse.Namespace) -> Dict[str, Any]:
    keys = ("a", "b", "weights", "oracle", "n_max", "suite", "count", "pairs", "weightings", "enumerate_n")
    return {key: getattr(args, key) for key in keys if getattr(args, key, None) is not None}


def main(argv: Optional[List[str]] = None, stdin=None, stdout=None) -> int:
    args = build_parser().parse_args(argv)
    overrides = {key: getattr(args, dest) for dest, key in CONFIG_FLAGS.items()}
    stdout = stdout or sys.stdout
    try:
        config = load_config(args.config, overrides)
    except (TinError, OSError) as err:
        sys.stderr.write("tin-pyramids: %s\n" % err)
        return EXIT_PRECONDITION
    logging.basicConfig(format="[%(levelname)s] %(name)s: %(message)s",
                        level=str(config.get("log_level") or "INFO").upper())
    try:
        command = build_command(args.command, config, _options(args))
        if args.command in GRAPH_COMMANDS:
            graphs, inputs = load_graphs(args.inputs, config["format"], args.generate, stdin)
            report = command.run(graphs, inputs)
        else:
            report = command.run()
        out = args.out or (command.default_out if args.command == "survey" else config["out"])
        report.write(out, args.out_file, stdout)
    except TinError as err:
        logger.error(str(err))
        sys.stderr.write("tin-pyramids: %s\n" % err)
        return exit_code_of(err)
    except OSError as err:
        sys.stderr.write("tin-pyramids: %s\n" % err)
        return EXIT_PRECONDITION
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
