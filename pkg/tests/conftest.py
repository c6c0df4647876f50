import itertools
import random
from typing import List

import pytest

from src.thompson.trees import LEAF, Arity, PlanarTree, PositiveWord, generator


def ternary_trees(carets: int) -> List[PlanarTree]:
    """Every ternary tree with exactly ``carets`` carets."""
    if carets == 0:
        return [LEAF]
    trees = []
    for left in range(carets):
        for middle in range(carets - left):
            right = carets - 1 - left - middle
            for children in itertools.product(ternary_trees(left), ternary_trees(middle), ternary_trees(right)):
                trees.append(PlanarTree(children))
    return trees


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in (
        "THOMPSON_JOBS",
        "THOMPSON_SEED",
        "THOMPSON_CROSSING_CONVENTION",
        "THOMPSON_LOG_LEVEL",
        "THOMPSON_LOG_FILE",
    ):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def x0():
    return generator(0, Arity.TERNARY)


@pytest.fixture
def x2():
    return generator(2, Arity.TERNARY)


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def random_words(rng):
    words = []
    for _ in range(100):
        width = rng.randint(1, 5)
        words.append(PositiveWord(tuple(rng.randint(0, 3) for _ in range(width))))
    return words


@pytest.fixture(scope="session")
def small_ternary_trees():
    # up to 9 leaves
    return [tree for carets in range(5) for tree in ternary_trees(carets)]
