"""Exceptions raised by the tin-pyramids engines.

Every exception carries a message template filled from keyword
arguments and a provenance trail. Engines that call other engines
append their own name to the trail when an error travels through
them, so a failure deep inside the pyramid machinery reads as
``lemma 3.2 <- lemma 4.4 <- find_attached_structure``.

A failed lemma conclusion is raised as :class:`LemmaViolation`
holding a :class:`CounterexampleReport`. When the conclusion was
refuted by an induced path or an induced complete bipartite graph,
the report holds that witness and the input graph was not in the
class the lemma talks about.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

__all__ = [
    "TinError", "PreconditionError", "GraphFormatError", "CapExceededError",
    "BudgetExhaustedError", "CertificateError", "LemmaViolation",
    "CounterexampleReport", "EXIT_OK", "EXIT_CERTIFICATE", "EXIT_PRECONDITION",
    "EXIT_BUDGET"
]

EXIT_OK = 0
EXIT_CERTIFICATE = 1
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3

REPORT_KINDS = ("P6", "K2t", "assertion")


class TinError(Exception):
    """Base class of every error raised by this package"""

    message = "%(cause)s"
    exit_code = EXIT_PRECONDITION

    def __init__(self, **kwargs):
        super().__init__()
        self.kwargs = kwargs
        self.msg = self.message % kwargs
        self.provenance: List[str] = []

    def add_provenance(self, where):
        """Record that the error travelled through `where`; returns self."""
        self.provenance.append(where)
        return self

    def __str__(self):
        if not self.provenance:
            return self.msg
        return "%s [via %s]" % (self.msg, " <- ".join(reversed(self.provenance)))


class PreconditionError(TinError):
    """Raised when the input of an operation violates its hypotheses"""

    message = "%(cause)s"


class GraphFormatError(TinError):
    """Raised when a graph or weighting cannot be parsed"""

    message = "line %(line)s: %(cause)s"

    @property
    def line(self):
        return self.kwargs.get("line")


class CapExceededError(TinError):
    """Raised when an exact oracle is asked beyond its size cap"""

    message = "%(what)s supports at most %(cap)s vertices, got %(n)s"


class BudgetExhaustedError(TinError):
    """Raised when a bounded search runs out of nodes"""

    message = "%(search)s exhausted its budget of %(budget)s search nodes"
    exit_code = EXIT_BUDGET


class CertificateError(TinError):
    """Raised when a certificate fails independent re-verification"""

    message = "certificate rejected: %(cause)s"
    exit_code = EXIT_CERTIFICATE


@dataclass(frozen=True)
class CounterexampleReport:
    """Evidence that a lemma conclusion failed on some input.

    :param kind: ``P6`` or ``K2t`` when an induced witness was found,
        ``assertion`` when only the failed conclusion is known
    :param vertices: the witness in path order (P6), or the pair
        followed by the independent set (K2t), or the vertices the
        failed conclusion is about
    :param lemma: the identifier of the lemma whose conclusion failed
    :param detail: free text describing the failed conclusion
    """

    kind: str
    vertices: Tuple[int, ...]
    lemma: str
    detail: str = ""
    extra: Dict[str, object] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind not in REPORT_KINDS:
            raise ValueError("unknown counterexample kind %s" % self.kind)

    def relabelled(self, labels: Sequence[int]) -> "CounterexampleReport":
        """Return the same report with every vertex `v` replaced by `labels[v]`."""
        return CounterexampleReport(self.kind, tuple(labels[v] for v in self.vertices),
                                    self.lemma, self.detail, dict(self.extra))

    def to_dict(self):
        item = {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "lemma": self.lemma,
            "detail": self.detail
        }
        item.update(self.extra)
        return item


class LemmaViolation(TinError):
    """Raised when a lemma conclusion checked in assert mode fails"""

    message = "lemma %(lemma)s conclusion failed: %(detail)s"
    exit_code = EXIT_CERTIFICATE

    def __init__(self, report: CounterexampleReport):
        super().__init__(lemma=report.lemma, detail=self._describe(report))
        self.report = report

    @staticmethod
    def _describe(report):
        if report.kind == "P6":
            return "induced P6 %s" % list(report.vertices)
        if report.kind == "K2t":
            return "induced K2,t with pair %s and independent set %s" % (
                list(report.vertices[:2]), list(report.vertices[2:]))
        return report.detail

    def relabelled(self, labels: Sequence[int]) -> "LemmaViolation":
        lifted = LemmaViolation(self.report.relabelled(labels))
        lifted.provenance = list(self.provenance)
        return lifted


def violation(lemma: str, detail: str, vertices: Iterable[int] = (), kind: str = "assertion",
              **extra) -> LemmaViolation:
    """Build a LemmaViolation in one call."""
    return LemmaViolation(CounterexampleReport(kind, tuple(vertices), lemma, detail, extra))


def exit_code_of(error: Optional[BaseException]) -> int:
    if error is None:
        return EXIT_OK
    return getattr(error, "exit_code", EXIT_PRECONDITION)
