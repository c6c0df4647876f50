"""
Enumeration Statistics Module
=============================

Exhaustive and random generation of positive elements x_0^a_0 ... x_{w-1}^a_{w-1}
of F3 by width and height, and the orbit-count histograms ("classes") built
from them.

Exhaustive runs are split into shards by exponent prefix. Each shard is
counted on its own (in a worker process when more than one job is requested)
and the shard histograms are merged; merging is the only point where shards
meet, so results do not depend on the number of workers.
"""

import itertools
import logging
import time
from collections import Counter
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Set, Tuple

import numpy as np
from tqdm import tqdm

from .errors import IncompatibleRecordsError, NegativeIndexError
from .models import PublishedValue, StatsRecord
from .perm import orbit_count
from .trees import PositiveWord

logger = logging.getLogger(__name__)

# exponent prefix length used to split exhaustive runs
SHARD_PREFIX = 2


def _check_grid(width: int, height: int):
    if width < 1:
        raise NegativeIndexError(f"Width must be at least 1, got {width}.")
    if height < 0:
        raise NegativeIndexError(f"Height must be non-negative, got {height}.")


def enumerate_elements(width: int, height: int) -> Iterator[PositiveWord]:
    """Every exponent tuple in {0..height}^width, in lexicographic order."""
    _check_grid(width, height)
    for exponents in itertools.product(range(height + 1), repeat=width):
        yield PositiveWord(exponents)


def random_elements(width: int, height: int, count: int, seed: int) -> List[PositiveWord]:
    """``count`` tuples drawn uniformly from {0..height}^width with a seeded PCG64 generator."""
    _check_grid(width, height)
    if count < 0:
        raise NegativeIndexError(f"Sample count must be non-negative, got {count}.")
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.integers(0, height + 1, size=(count, width), dtype=np.int64)
    return [PositiveWord(tuple(int(a) for a in row)) for row in draws]


def merge(a: StatsRecord, b: StatsRecord, cumulative: bool = False) -> StatsRecord:
    """Pointwise sum of two histograms.

    Records of different grids only merge in cumulative mode, whose result has
    no width or height. An empty record merges with anything.
    """
    histogram = Counter(a.histogram)
    histogram.update(b.histogram)
    if cumulative:
        return StatsRecord(histogram=dict(histogram))
    if not a.histogram:
        width, height = b.width, b.height
    elif not b.histogram:
        width, height = a.width, a.height
    elif (a.width, a.height) != (b.width, b.height):
        raise IncompatibleRecordsError(
            f"Cannot merge the ({a.width},{a.height}) and ({b.width},{b.height}) grids outside cumulative mode."
        )
    else:
        width, height = a.width, a.height
    return StatsRecord(width=width, height=height, histogram=dict(histogram))


def _shards(width: int, height: int) -> List[Tuple[int, int, Tuple[int, ...]]]:
    prefix = min(width, SHARD_PREFIX)
    return [(width, height, head) for head in itertools.product(range(height + 1), repeat=prefix)]


def _count_shard(shard: Tuple[int, int, Tuple[int, ...]]) -> Dict[int, int]:
    width, height, head = shard
    histogram = Counter()
    for tail in itertools.product(range(height + 1), repeat=width - len(head)):
        histogram[orbit_count(PositiveWord(head + tail))] += 1
    return dict(histogram)


def aggregate(width: int, height: int, jobs: int = 1, progress: bool = False) -> StatsRecord:
    """Histogram of orbit counts over the whole (width, height) grid."""
    _check_grid(width, height)
    shards = _shards(width, height)
    logger.info("Enumerating width=%d height=%d (%d elements, %d jobs)", width, height, (height + 1) ** width, jobs)
    started = time.perf_counter()
    record = StatsRecord(width=width, height=height)
    bar = tqdm(total=len(shards), desc=f"w={width} h={height}", disable=not progress)
    if jobs > 1:
        with Pool(processes=jobs) as pool:
            for histogram in pool.imap_unordered(_count_shard, shards):
                record = merge(record, StatsRecord(width=width, height=height, histogram=histogram))
                bar.update(1)
    else:
        for shard in shards:
            record = merge(record, StatsRecord(width=width, height=height, histogram=_count_shard(shard)))
            logger.debug("Shard %s done", shard[2])
            bar.update(1)
    bar.close()
    logger.info(
        "Finished width=%d height=%d in %.2fs: M=%d, largest classes %s",
        width,
        height,
        time.perf_counter() - started,
        record.max_orbits,
        record.largest_classes,
    )
    return record


def aggregate_heights(
    width: int, heights: Iterable[int], jobs: int = 1, progress: bool = False
) -> List[StatsRecord]:
    return [aggregate(width, height, jobs=jobs, progress=progress) for height in heights]


def cumulative(records: Iterable[StatsRecord]) -> StatsRecord:
    """All-grids distribution, as plotted next to the per-width charts."""
    total = StatsRecord()
    for record in records:
        total = merge(total, record, cumulative=True)
    return total


# Published table

@dataclass(frozen=True)
class PublishedRow:
    """One row of the published class table; ranges give formulas in h."""

    width: int
    low: int
    high: int
    max_orbits: Callable[[int], int]
    largest_classes: Callable[[int], Tuple[int, ...]]
    total: int

    @property
    def consistent(self) -> bool:
        # range rows report the size of their largest grid
        return self.total == (self.high + 1) ** self.width


def _row(width: int, heights: Tuple[int, int], max_orbits, largest, total: int) -> PublishedRow:
    m = max_orbits if callable(max_orbits) else (lambda h, value=max_orbits: value)
    c = largest if callable(largest) else (lambda h, value=tuple(largest): value)
    return PublishedRow(width, heights[0], heights[1], m, c, total)


PUBLISHED_TABLE: Tuple[PublishedRow, ...] = (
    _row(2, (0, 0), 1, (1,), 1),
    _row(2, (1, 1), 1, (1,), 4),
    _row(2, (2, 100), lambda h: h + 1, (1,), 10201),
    _row(3, (0, 0), 1, (1,), 1),
    _row(3, (1, 1), 2, (1,), 8),
    _row(3, (2, 2), 3, (1,), 27),
    _row(3, (3, 35), lambda h: h + 1, (2,), 42875),
    _row(4, (0, 0), 1, (1,), 1),
    _row(4, (1, 1), 2, (1, 2), 16),
    _row(4, (2, 2), 4, (2,), 81),
    _row(4, (3, 3), 6, (2,), 256),
    _row(4, (4, 4), 8, (3,), 625),
    _row(4, (5, 5), 10, (5,), 1296),
    _row(4, (6, 6), 12, (6,), 2401),
    _row(4, (7, 7), 14, (6,), 4096),
    _row(4, (8, 8), 16, (8,), 6561),
    _row(4, (9, 9), 18, (9,), 10000),
    _row(4, (10, 10), 20, (10,), 14641),
    _row(4, (11, 11), 22, (11,), 20736),
    _row(4, (12, 12), 24, (12,), 28561),
    _row(5, (0, 0), 1, (1,), 1),
    _row(5, (1, 1), 3, (1,), 32),
    _row(5, (2, 11), lambda h: 2 * h, lambda h: (h - 1,), 248832),
    _row(6, (0, 0), 1, (1,), 1),
    _row(6, (1, 1), 3, (1,), 64),
    _row(6, (2, 2), 5, (2,), 729),
    _row(6, (3, 3), 8, (3,), 4096),
    _row(6, (4, 4), 11, (4,), 15625),
    _row(6, (5, 5), 14, (5,), 46656),
    _row(6, (6, 6), 17, (6,), 117649),
    _row(6, (7, 7), 20, (7,), 262144),
    _row(6, (8, 8), 23, (9,), 531441),
    _row(7, (0, 0), 1, (1,), 1),
    _row(7, (1, 1), 4, (2,), 128),
    _row(7, (2, 6), lambda h: 3 * h - 1, lambda h: (h,), 823543),
)


# (width, low) of inconsistent rows already warned about
_warned_rows: Set[Tuple[int, int]] = set()


def published(width: int, height: int) -> Optional[PublishedValue]:
    """The published row covering (width, height), evaluated at ``height``."""
    for row in PUBLISHED_TABLE:
        if row.width == width and row.low <= height <= row.high:
            if not row.consistent and (row.width, row.low) not in _warned_rows:
                _warned_rows.add((row.width, row.low))
                logger.warning(
                    "Published row w=%d h=%d..%d lists %d elements, not (h+1)^w = %d",
                    row.width,
                    row.low,
                    row.high,
                    row.total,
                    (row.high + 1) ** row.width,
                )
            return PublishedValue(
                width=width,
                height=height,
                max_orbits=row.max_orbits(height),
                largest_classes=list(row.largest_classes(height)),
                total=(height + 1) ** width if row.consistent else row.total,
                consistent=row.consistent,
            )
    return None
