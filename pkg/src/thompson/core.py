"""
Runner Core Module
==================

This module defines the Runner class which orchestrates one command-line run.
It is responsible for:
1. Dispatching a validated RunConfig to its subcommand.
2. Driving the permutation, diagram and enumeration modules.
3. Rendering the results (text, CSV, JSON, SVG, PD, Gauss) and writing them out.

Subcommands return the text destined for stdout; files are written here.
"""

import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from .conjectures import check_conjectures
from .diagram import build_diagram, export_code, trace_components
from .enumstats import aggregate_heights, cumulative, enumerate_elements, random_elements
from .errors import OracleMismatchError
from .models import (
    ConjectureReport,
    OutputFormat,
    PermutationResult,
    RunConfig,
    SampledElement,
    StatsRecord,
    VerifyResult,
)
from .perm import orbit_count, permutation_of_element
from .report import ReportGenerator
from .trees import PositiveWord, positive_pair

logger = logging.getLogger(__name__)


class Runner:
    def __init__(self, progress: Optional[bool] = None):
        self.reporter = ReportGenerator()
        self.progress = sys.stderr.isatty() if progress is None else progress

    def run(self, config: RunConfig) -> str:
        handler = getattr(self, f"cmd_{config.command}")
        return handler(config)

    # Subcommands

    def cmd_perm(self, config: RunConfig) -> str:
        word = PositiveWord(tuple(config.word))
        permutation = permutation_of_element(word)
        result = PermutationResult(
            word=list(word.exponents),
            cycles=[list(cycle) for cycle in permutation.cycles],
            orbits=permutation.orbit_count,
            leaves=permutation.size - 1,
        )
        if config.format is OutputFormat.JSON:
            text = result.model_dump_json(indent=2) + "\n"
        else:
            text = self.reporter.permutation_text(result)
        return self._emit(text, config.out)

    def cmd_stats(self, config: RunConfig) -> str:
        records = aggregate_heights(config.width, config.heights, jobs=config.jobs, progress=self.progress)
        if config.out:
            self.write_stats(records, config.format, Path(config.out))
            return ""
        if config.format is OutputFormat.JSON:
            return self.reporter.stats_json(records)
        if config.format is OutputFormat.SVG:
            return self.reporter.distribution_svg(records[0])
        return self.reporter.summary_csv(records)

    def write_stats(self, records: List[StatsRecord], fmt: OutputFormat, directory: Path):
        directory.mkdir(parents=True, exist_ok=True)
        if fmt is OutputFormat.JSON:
            self._write(directory / "stats.json", self.reporter.stats_json(records))
        elif fmt is OutputFormat.SVG:
            for record in records:
                name = f"distribution_w{record.width}_h{record.height}.svg"
                self._write(directory / name, self.reporter.distribution_svg(record))
            if len(records) > 1:
                self._write(directory / "distribution_all.svg", self.reporter.distribution_svg(cumulative(records)))
        else:
            self._write(directory / "histogram.csv", self.reporter.histogram_csv(records))
            self._write(directory / "summary.csv", self.reporter.summary_csv(records))

    def cmd_verify(self, config: RunConfig) -> str:
        results = [self.verify_grid(config.width, height) for height in config.heights]
        if config.format is OutputFormat.JSON:
            text = self.reporter.to_json(results)
        else:
            text = self.reporter.verify_text(results)
        text = self._emit(text, config.out)
        for result in results:
            if not result.ok:
                word = result.mismatches[0]
                element = PositiveWord(tuple(word))
                orbits = orbit_count(element)
                components = trace_components(build_diagram(positive_pair(element)))
                raise OracleMismatchError(
                    f"Orbit count and traced components disagree for word {','.join(map(str, word))}: "
                    f"{orbits} orbits, {components} components.",
                    word=word,
                    orbits=orbits,
                    components=components,
                )
        return text

    def verify_grid(self, width: int, height: int) -> VerifyResult:
        checked = agreed = 0
        mismatches = []
        for word in enumerate_elements(width, height):
            checked += 1
            orbits = orbit_count(word)
            components = trace_components(build_diagram(positive_pair(word)))
            if orbits == components:
                agreed += 1
            else:
                logger.error("Word %s: %d orbits but %d components", word, orbits, components)
                mismatches.append(list(word.exponents))
        logger.info("Verified width=%d height=%d: %d/%d agree", width, height, agreed, checked)
        return VerifyResult(width=width, height=height, checked=checked, agreed=agreed, mismatches=mismatches)

    def cmd_export(self, config: RunConfig) -> str:
        pair = positive_pair(PositiveWord(tuple(config.word)))
        diagram = build_diagram(pair, convention=config.convention)
        return self._emit(export_code(diagram, config.format.value), config.out)

    def cmd_random(self, config: RunConfig) -> str:
        height = config.heights[0]
        words = random_elements(config.width, height, config.count, config.seed)
        samples = [SampledElement(word=list(word.exponents), orbits=orbit_count(word)) for word in words]
        if config.format is OutputFormat.JSON:
            text = self.reporter.to_json(samples)
        else:
            text = self.reporter.samples_csv(samples)
        return self._emit(text, config.out)

    def cmd_conjectures(self, config: RunConfig) -> str:
        records = aggregate_heights(config.width, config.heights, jobs=config.jobs, progress=self.progress)
        report: ConjectureReport = check_conjectures(records)
        logger.info("Conjecture status: %s", report.status.value)
        return self._emit(report.model_dump_json(indent=2) + "\n", config.out)

    # Output

    def _emit(self, text: str, out: Optional[str]) -> str:
        if not out:
            return text
        self._write(Path(out), text)
        return ""

    def _write(self, path: Path, text: str):
        if path.parent and not path.parent.exists():
            os.makedirs(path.parent, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info("Wrote %s", path)
