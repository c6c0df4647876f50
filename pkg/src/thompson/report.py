import csv
import io
import json
from typing import Dict, List, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .models import (  # noqa: E402
    ConjectureFinding,
    ConjectureItemReport,
    ConjectureReport,
    PermutationResult,
    SampledElement,
    StatsRecord,
    Verdict,
    VerifyResult,
)

# fixed ids and no timestamp, so identical records give identical SVG bytes
plt.rcParams["svg.hashsalt"] = "thompson-closure"
plt.rcParams["svg.fonttype"] = "none"

VERDICT_RANK = {Verdict.OUT_OF_RANGE: 0, Verdict.HOLDS: 1, Verdict.FAILS: 2}


def _label(record: StatsRecord) -> str:
    if record.is_cumulative:
        return "all grids"
    return f"w={record.width} h={record.height}"


class ReportGenerator:
    def histogram_csv(self, records: Sequence[StatsRecord]) -> str:
        output = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(["width", "height", "orbits", "count"])
        for record in records:
            for orbits, count in record.histogram.items():
                writer.writerow([_blank(record.width), _blank(record.height), orbits, count])
        return output.getvalue()

    def summary_csv(self, records: Sequence[StatsRecord]) -> str:
        output = io.StringIO()
        csv.writer(output, lineterminator="\n").writerow(
            ["width", "height", "total", "max_orbits", "largest_classes"]
        )
        writer = csv.writer(output, lineterminator="\n", quoting=csv.QUOTE_NONNUMERIC)
        for record in records:
            writer.writerow(
                [
                    _blank(record.width),
                    _blank(record.height),
                    record.total,
                    record.max_orbits,
                    ",".join(str(orbits) for orbits in record.largest_classes),
                ]
            )
        return output.getvalue().replace('""', "")

    def stats_json(self, records: Sequence[StatsRecord]) -> str:
        return json.dumps([record.model_dump(mode="json") for record in records], indent=2) + "\n"

    def distribution_svg(self, record: StatsRecord) -> str:
        """Bar chart of class sizes by orbit count, as standalone SVG text."""
        fig, ax = plt.subplots(figsize=(6, 4))
        orbits = list(record.histogram)
        ax.bar(orbits, [record.histogram[o] for o in orbits], color="#4c72b0")
        ax.set_xlabel("number of orbits")
        ax.set_ylabel("number of elements")
        ax.set_title(f"{_label(record)} ({record.total} elements)")
        if orbits:
            ax.set_xticks(orbits)
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
        plt.close(fig)
        return buffer.getvalue()

    def permutation_text(self, result: PermutationResult) -> str:
        cycles = "".join("(" + ",".join(str(p) for p in cycle) + ")" for cycle in result.cycles)
        return f"{cycles}  orbits={result.orbits}  leaves={result.leaves}\n"

    def samples_csv(self, samples: Sequence[SampledElement]) -> str:
        output = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(["word", "orbits"])
        for sample in samples:
            writer.writerow([",".join(str(a) for a in sample.word), sample.orbits])
        return output.getvalue()

    def verify_text(self, results: Sequence[VerifyResult]) -> str:
        lines = []
        for result in results:
            lines.append(f"w={result.width} h={result.height}: {result.agreed}/{result.checked} agree")
            for word in result.mismatches:
                lines.append("  mismatch: " + ",".join(str(a) for a in word))
        return "\n".join(lines) + "\n"

    def to_json(self, models: Sequence) -> str:
        return json.dumps([model.model_dump(mode="json") for model in models], indent=2) + "\n"

    def consolidate_item(
        self, item: int, statement: str, findings: List[ConjectureFinding]
    ) -> ConjectureItemReport:
        status = Verdict.OUT_OF_RANGE
        for finding in findings:
            if VERDICT_RANK[finding.verdict] > VERDICT_RANK[status]:
                status = finding.verdict
        # height span covered per width, for findings that were judged
        heights: Dict[int, List[int]] = {}
        for finding in findings:
            if finding.verdict is not Verdict.OUT_OF_RANGE:
                heights.setdefault(finding.width, []).append(finding.height)
        return ConjectureItemReport(
            item=item,
            statement=statement,
            status=status,
            heights={width: (min(hs), max(hs)) for width, hs in heights.items()},
            findings=[finding for finding in findings if finding.verdict is not Verdict.OUT_OF_RANGE],
        )

    def generate(self, items: List[ConjectureItemReport], records: Sequence[StatsRecord]) -> ConjectureReport:
        status = Verdict.OUT_OF_RANGE
        for item in items:
            if VERDICT_RANK[item.status] > VERDICT_RANK[status]:
                status = item.status

        failing = [item.item for item in items if item.status is Verdict.FAILS]
        holding = [item.item for item in items if item.status is Verdict.HOLDS]
        summary = f"Conjecture check over {len(records)} grids\n"
        summary += f"Status: {status.value}\n"
        summary += f"Items holding: {holding}\n"
        summary += f"Items failing: {failing}\n"

        return ConjectureReport(
            items=items,
            status=status,
            summary=summary,
            grid=[(record.width, record.height) for record in records if not record.is_cumulative],
        )


def _blank(value):
    return "" if value is None else value
