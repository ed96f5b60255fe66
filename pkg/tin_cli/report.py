"""Run reports: what a command did, per instance, and the aggregate.

The report body is a function of the inputs, the parameters and the
package version only; timing lives in its own section and is left out
when comparing runs.
"""

import json
import logging
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd
import pendulum

from tin_common import __version__
from tin_common.digest import get_digest
from tin_common.errors import EXIT_OK

__all__ = ["RunReport", "REPORT_FORMATS"]

logger = logging.getLogger(__name__)

REPORT_FORMATS = ("json", "csv")


def _cell(value):
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, sort_keys=True)
    return value


class RunReport:
    def __init__(self, command: str, inputs: Iterable[str], params: Dict[str, Any]):
        """ Collects the per-instance results of one command run.
        :param command: the command name
        :param inputs: the input texts (graph6 lines, edge lists, generator specs)
        :param params: the parameters the run depends on
        """
        self.command = command
        self.params = {key: params[key] for key in sorted(params)}
        self.inputs_digest = get_digest(command, *[str(i) for i in inputs],
                                        json.dumps(self.params, sort_keys=True, default=str))
        self.results: List[Dict[str, Any]] = []
        self.conclusions = 0
        self.failures = 0
        self.max_alpha: Optional[int] = None
        self.exit_code = EXIT_OK
        self.started = pendulum.now("UTC")
        self.finished = None

    def add(self, row: Dict[str, Any], passed: Optional[bool] = None, alpha: Optional[int] = None,
            exit_code: int = EXIT_OK):
        """Append one result row.

        `passed` is given for rows that record a checked conclusion;
        `exit_code` is non-zero for rows of failed instances.
        """
        item = {"uuid": get_digest(self.inputs_digest, str(len(self.results)))[:16], **row}
        if passed is not None:
            item["passed"] = passed
            self.conclusions += 1
            if not passed:
                self.failures += 1
        if exit_code != EXIT_OK:
            if passed is None:
                self.failures += 1
            if self.exit_code == EXIT_OK:
                self.exit_code = exit_code
        if alpha is not None:
            self.max_alpha = alpha if self.max_alpha is None else max(self.max_alpha, alpha)
        self.results.append(item)
        return item

    def finish(self) -> "RunReport":
        self.finished = pendulum.now("UTC")
        logger.info(f"{self.command}: {len(self.results)} rows, {self.failures} failures, "
                    f"{self.wall_time:.3f}s")
        return self

    @property
    def wall_time(self) -> float:
        end = self.finished or pendulum.now("UTC")
        return (end - self.started).total_seconds()

    @property
    def stats(self) -> Dict[str, Any]:
        return {
            "rows": len(self.results),
            "conclusions": self.conclusions,
            "failures": self.failures,
            "max_alpha": self.max_alpha
        }

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        item = {
            "command": self.command,
            "version": __version__,
            "inputs_digest": self.inputs_digest,
            "params": self.params,
            "stats": self.stats,
            "results": self.results
        }
        if timing:
            item["timing"] = {
                "started": self.started.isoformat(),
                "finished": None if self.finished is None else self.finished.isoformat(),
                "wall_time": round(self.wall_time, 6)
            }
        return item

    def to_frame(self) -> pd.DataFrame:
        """The result rows as a table; nested values are JSON-encoded."""
        rows = [{key: _cell(value) for key, value in row.items()} for row in self.results]
        return pd.DataFrame(rows)

    def render(self, fmt: str = "json", timing: bool = True) -> str:
        if fmt == "csv":
            return self.to_frame().to_csv(index=False)
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2, default=str) + "\n"

    def write(self, fmt: str = "json", out_file: Optional[str] = None, stream=None):
        text = self.render(fmt)
        if out_file:
            with open(out_file, "w", encoding="utf-8") as handle:
                handle.write(text)
            logger.info(f"report written to {out_file}")
        else:
            stream.write(text)
