"""Versioned result documents written by the command-line tool."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from ..backend.complex import ReductionReport
from ..backend.diagonal import DiagonalityVerdict
from ..backend.homology import HomologyTable, two_line_check
from ..backend.tangle import CrossingSigns, TangleDiagram

REPORT_VERSION = 1
KH_REPORT_FORMAT = "khovanizer.kh_report"
DIAGONALITY_FORMAT = "khovanizer.diagonality"
SELFTEST_FORMAT = "khovanizer.selftest"


def diagram_summary(diagram: TangleDiagram, signs: CrossingSigns, alternating: bool) -> Dict[str, Any]:
    return {
        "name": diagram.name,
        "crossings": diagram.crossing_count,
        "open_edges": list(diagram.open_edges),
        "loops": diagram.loops,
        "positive": signs.positive,
        "negative": signs.negative,
        "alternating": alternating,
    }


def create_kh_report(
    diagram: Dict[str, Any],
    table: HomologyTable,
    jones: Optional[str],
    reduction: ReductionReport,
    oracle_status: str = "off",
    oracle_table: Optional[HomologyTable] = None,
) -> Dict[str, Any]:
    """``oracle_status`` is one of ``off``, ``skipped``, ``agrees`` or ``mismatch``."""
    return {
        "format": KH_REPORT_FORMAT,
        "version": REPORT_VERSION,
        "diagram": diagram,
        "homology": table.to_document(),
        "two_line": two_line_check(table),
        "jones": jones,
        "reduction": {
            "deloops": reduction.deloop_count,
            "eliminations": reduction.elimination_count,
        },
        "oracle": {
            "status": oracle_status,
            "homology": None if oracle_table is None else oracle_table.to_document(),
        },
    }


def create_diagonality_report(
    source: str, verdict: DiagonalityVerdict, coherent: bool
) -> Dict[str, Any]:
    return {
        "format": DIAGONALITY_FORMAT,
        "version": REPORT_VERSION,
        "input": source,
        "coherent_check": coherent,
        "verdict": verdict.to_document(),
    }


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    skipped: int = 0
    mismatch: bool = False
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)


def create_selftest_report(results: Sequence[SuiteResult], seed: int, profile: str) -> Dict[str, Any]:
    return {
        "format": SELFTEST_FORMAT,
        "version": REPORT_VERSION,
        "seed": seed,
        "profile": profile,
        "passed": all(result.passed for result in results),
        "suites": [
            {
                "name": result.name,
                "passed": result.passed,
                "cases": result.cases,
                "skipped": result.skipped,
                "failures": list(result.failures),
            }
            for result in results
        ],
    }
