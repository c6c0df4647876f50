from pydantic import BaseModel, Field, computed_field, field_validator, model_validator
from typing import Any, List, Optional, Dict, Tuple
from enum import Enum


class Verdict(str, Enum):
    FAILS = "fails"
    HOLDS = "holds"
    OUT_OF_RANGE = "out_of_range"


class OutputFormat(str, Enum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"
    SVG = "svg"
    PD = "pd"
    GAUSS = "gauss"


class StatsRecord(BaseModel):
    """Orbit-count histogram ("classes") of every positive element of one width/height grid.

    width and height are unset for a cumulative record over several grids.
    """

    width: Optional[int] = None
    height: Optional[int] = None
    histogram: Dict[int, int] = Field(default_factory=dict)

    @field_validator("histogram")
    @classmethod
    def _check_histogram(cls, histogram: Dict[int, int]) -> Dict[int, int]:
        for orbits, count in histogram.items():
            if orbits < 1:
                raise ValueError(f"Orbit counts start at 1, got {orbits}.")
            if count < 0:
                raise ValueError(f"Class sizes are non-negative, got {count} for {orbits} orbits.")
        return {orbits: histogram[orbits] for orbits in sorted(histogram) if histogram[orbits]}

    @computed_field
    @property
    def total(self) -> int:
        return sum(self.histogram.values())

    @computed_field
    @property
    def max_orbits(self) -> int:
        return max(self.histogram, default=0)

    @computed_field
    @property
    def largest_classes(self) -> List[int]:
        if not self.histogram:
            return []
        largest = max(self.histogram.values())
        return [orbits for orbits, count in self.histogram.items() if count == largest]

    @property
    def is_cumulative(self) -> bool:
        return self.width is None


class PublishedValue(BaseModel):
    width: int
    height: int
    max_orbits: int
    largest_classes: List[int]
    total: int
    consistent: bool = True


class ConjectureFinding(BaseModel):
    item: int
    width: int
    height: int
    verdict: Verdict
    description: str
    observed: Dict[str, Any] = Field(default_factory=dict)
    predicted: Dict[str, Any] = Field(default_factory=dict)
    published: Optional[PublishedValue] = None


class ConjectureItemReport(BaseModel):
    item: int
    statement: str
    status: Verdict
    heights: Dict[int, Tuple[int, int]] = Field(default_factory=dict)
    findings: List[ConjectureFinding] = Field(default_factory=list)


class ConjectureReport(BaseModel):
    items: List[ConjectureItemReport]
    status: Verdict
    summary: str
    grid: List[Tuple[int, int]] = Field(default_factory=list)


class PermutationResult(BaseModel):
    word: List[int]
    cycles: List[List[int]]
    orbits: int
    leaves: int


class SampledElement(BaseModel):
    word: List[int]
    orbits: int


class VerifyResult(BaseModel):
    width: int
    height: int
    checked: int
    agreed: int
    mismatches: List[List[int]] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked == self.agreed


class RunConfig(BaseModel):
    """Validated arguments of one CLI invocation."""

    command: str
    width: Optional[int] = None
    heights: List[int] = Field(default_factory=list)
    word: Optional[List[int]] = None
    count: int = 0
    seed: int = 0
    jobs: int = 1
    out: Optional[str] = None
    format: Optional[OutputFormat] = None
    convention: str = "lr-over"
    allow_unreduced: bool = False

    @field_validator("width")
    @classmethod
    def _check_width(cls, width: Optional[int]) -> Optional[int]:
        if width is not None and width < 1:
            raise ValueError(f"width must be at least 1, got {width}")
        return width

    @field_validator("heights")
    @classmethod
    def _check_heights(cls, heights: List[int]) -> List[int]:
        if any(h < 0 for h in heights):
            raise ValueError(f"heights must be non-negative, got {heights}")
        return heights

    @field_validator("count", "seed")
    @classmethod
    def _check_non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"must be non-negative, got {value}")
        return value

    @field_validator("jobs")
    @classmethod
    def _check_jobs(cls, jobs: int) -> int:
        if jobs < 1:
            raise ValueError(f"at least one worker is needed, got {jobs}")
        return jobs

    @field_validator("convention")
    @classmethod
    def _check_convention(cls, convention: str) -> str:
        if convention not in ("lr-over", "mp-over"):
            raise ValueError(f"crossing convention must be lr-over or mp-over, got {convention!r}")
        return convention

    @model_validator(mode="after")
    def _check_command(self) -> "RunConfig":
        allowed = FORMATS_BY_COMMAND.get(self.command)
        if allowed is None:
            raise ValueError(f"unknown subcommand {self.command!r}")
        if self.format is None:
            self.format = allowed[0]
        elif self.format not in allowed:
            choices = ", ".join(f.value for f in allowed)
            raise ValueError(f"{self.command} writes {choices}, not {self.format.value}")
        if self.command in ("stats", "verify", "random", "conjectures"):
            if self.width is None or not self.heights:
                raise ValueError(f"{self.command} needs --width and --height")
        if self.command == "random" and len(self.heights) != 1:
            raise ValueError(f"random samples one height, got the range {self.heights[0]}..{self.heights[-1]}")
        if self.command == "stats" and self.format is OutputFormat.SVG and not self.out and len(self.heights) > 1:
            raise ValueError("stats writes one SVG per height; pass --out DIR for a height range")
        if self.command in ("perm", "export") and self.word is None:
            self.word = []
        return self


FORMATS_BY_COMMAND = {
    "perm": (OutputFormat.TEXT, OutputFormat.JSON),
    "stats": (OutputFormat.CSV, OutputFormat.JSON, OutputFormat.SVG),
    "verify": (OutputFormat.TEXT, OutputFormat.JSON),
    "export": (OutputFormat.PD, OutputFormat.GAUSS),
    "random": (OutputFormat.CSV, OutputFormat.JSON),
    "conjectures": (OutputFormat.JSON,),
}
