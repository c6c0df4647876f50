"""
Conjectures Module
==================

Checks of the conjectured class statistics against computed StatsRecords.

Each checker implements the `ConjectureChecker` interface and is responsible for
a single conjecture item. A checker only judges the (width, height) grids its
item talks about; every other record is reported as out of range.

Checkers implemented:
- SurjectivityChecker: every orbit count 1..M is realized.
- WidthTwoChecker: w=2, M = h+1 and the largest class is {1}.
- WidthThreeChecker: w=3, M = h+1, and the largest class is {2} once h >= 3.
- WidthFourChecker: w=4, h >= 1, M = 2h.
- WidthFiveChecker: w=5, h >= 2, M = 2h and the largest class is {h-1}.
- WidthSixChecker: w=6, h >= 2, M = 3h-1.
- WidthSevenChecker: w=7, h >= 2, M = 3h-1 and the largest class is {h}.
"""

import logging
from typing import Dict, List, Optional, Sequence

from .enumstats import published
from .models import ConjectureFinding, ConjectureReport, StatsRecord, Verdict
from .report import ReportGenerator

logger = logging.getLogger(__name__)


class ConjectureChecker:
    item: int = 0
    statement: str = ""

    def check(self, record: StatsRecord) -> ConjectureFinding:
        raise NotImplementedError

    def _finding(self, record: StatsRecord, verdict: Verdict, description: str, **kwargs) -> ConjectureFinding:
        return ConjectureFinding(
            item=self.item,
            width=record.width,
            height=record.height,
            verdict=verdict,
            description=description,
            published=published(record.width, record.height),
            **kwargs,
        )


class SurjectivityChecker(ConjectureChecker):
    item = 1
    statement = "Every orbit count j in 1..M is realized, M being the maximum for the grid."

    def check(self, record: StatsRecord) -> ConjectureFinding:
        missing = [j for j in range(1, record.max_orbits + 1) if j not in record.histogram]
        observed = {"max_orbits": record.max_orbits, "missing": missing}
        if missing:
            return self._finding(
                record, Verdict.FAILS, f"Orbit counts {missing} below M={record.max_orbits} never occur.",
                observed=observed,
            )
        return self._finding(record, Verdict.HOLDS, f"All orbit counts 1..{record.max_orbits} occur.", observed=observed)


class WidthChecker(ConjectureChecker):
    """Maximum (and optionally the largest class) as formulas in h, from ``min_height`` on."""

    width: int = 0
    min_height: int = 0
    # first height at which the largest class is predicted
    largest_from: Optional[int] = None

    def max_orbits(self, h: int) -> int:
        raise NotImplementedError

    def largest(self, h: int) -> List[int]:
        raise NotImplementedError

    def check(self, record: StatsRecord) -> ConjectureFinding:
        if record.width != self.width or record.height < self.min_height:
            return self._finding(record, Verdict.OUT_OF_RANGE, f"Item {self.item} does not cover this grid.")
        h = record.height
        observed = {"max_orbits": record.max_orbits, "largest_classes": record.largest_classes}
        predicted = {"max_orbits": self.max_orbits(h)}
        problems = []
        if record.max_orbits != predicted["max_orbits"]:
            problems.append(f"M={record.max_orbits}, predicted {predicted['max_orbits']}")
        if self.largest_from is not None and h >= self.largest_from:
            predicted["largest_classes"] = self.largest(h)
            if record.largest_classes != predicted["largest_classes"]:
                problems.append(f"largest classes {record.largest_classes}, predicted {predicted['largest_classes']}")
        if problems:
            return self._finding(
                record, Verdict.FAILS, "; ".join(problems) + ".", observed=observed, predicted=predicted
            )
        return self._finding(
            record, Verdict.HOLDS, "Matches the predicted statistics.", observed=observed, predicted=predicted
        )


class WidthTwoChecker(WidthChecker):
    item = 2
    statement = "For w=2 and h>=0 the maximum number of cycles is h+1 and the largest class is the 1-orbit class."
    width = 2
    min_height = 0
    largest_from = 0

    def max_orbits(self, h: int) -> int:
        return h + 1

    def largest(self, h: int) -> List[int]:
        return [1]


class WidthThreeChecker(WidthChecker):
    item = 3
    statement = "For w=3 and h>=0 the maximum number of cycles is h+1; for h>=3 the largest class has 2 cycles."
    width = 3
    min_height = 0
    largest_from = 3

    def max_orbits(self, h: int) -> int:
        return h + 1

    def largest(self, h: int) -> List[int]:
        return [2]


class WidthFourChecker(WidthChecker):
    item = 4
    statement = "For w=4 and h>=1 the maximum number of cycles is 2h."
    width = 4
    min_height = 1

    def max_orbits(self, h: int) -> int:
        return 2 * h


class WidthFiveChecker(WidthChecker):
    item = 5
    statement = "For w=5 and h>=2 the maximum number of cycles is 2h and the largest class has h-1 cycles."
    width = 5
    min_height = 2
    largest_from = 2

    def max_orbits(self, h: int) -> int:
        return 2 * h

    def largest(self, h: int) -> List[int]:
        return [h - 1]


class WidthSixChecker(WidthChecker):
    item = 6
    statement = "For w=6 and h>=2 the maximum number of cycles is 3h-1."
    width = 6
    min_height = 2

    def max_orbits(self, h: int) -> int:
        return 3 * h - 1


class WidthSevenChecker(WidthChecker):
    item = 7
    statement = "For w=7 and h>=2 the maximum number of cycles is 3h-1 and the largest class has h cycles."
    width = 7
    min_height = 2
    largest_from = 2

    def max_orbits(self, h: int) -> int:
        return 3 * h - 1

    def largest(self, h: int) -> List[int]:
        return [h]


def default_checkers() -> List[ConjectureChecker]:
    return [
        SurjectivityChecker(),
        WidthTwoChecker(),
        WidthThreeChecker(),
        WidthFourChecker(),
        WidthFiveChecker(),
        WidthSixChecker(),
        WidthSevenChecker(),
    ]


def run_checkers(
    records: Sequence[StatsRecord], checkers: Optional[Sequence[ConjectureChecker]] = None
) -> Dict[int, List[ConjectureFinding]]:
    """Findings per conjecture item, in record order; cumulative records are skipped."""
    checkers = list(checkers) if checkers is not None else default_checkers()
    findings = {checker.item: [] for checker in checkers}
    for record in records:
        if record.is_cumulative:
            logger.debug("Skipping cumulative record in conjecture checks")
            continue
        for checker in checkers:
            finding = checker.check(record)
            if finding.verdict is Verdict.FAILS:
                logger.info("Item %d fails on w=%d h=%d: %s", checker.item, record.width, record.height, finding.description)
            findings[checker.item].append(finding)
    return findings


def check_conjectures(
    records: Sequence[StatsRecord], checkers: Optional[Sequence[ConjectureChecker]] = None
) -> ConjectureReport:
    checkers = list(checkers) if checkers is not None else default_checkers()
    findings = run_checkers(records, checkers)
    reporter = ReportGenerator()
    items = [reporter.consolidate_item(c.item, c.statement, findings[c.item]) for c in checkers]
    return reporter.generate(items, records)
