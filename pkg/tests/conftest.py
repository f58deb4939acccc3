"""Shared fixtures: the named example presentations and a seeded random corpus."""

import random
from pathlib import Path

import pytest

from ck_invariants.epseq import EpSeq
from ck_invariants.presentation import EpPresentation, FiniteMatrix

REPO_ROOT = Path(__file__).resolve().parent.parent
PRESENTATIONS = REPO_ROOT / "presentations"
GOLDEN = Path(__file__).resolve().parent / "golden"

CORPUS_SEED = 271828
CORPUS_SIZE = 100


def random_zero_one_seq(rng, max_prefix=4, max_period=6):
    prefix = [rng.randrange(2) for _ in range(rng.randrange(max_prefix + 1))]
    period = [rng.randrange(2) for _ in range(rng.randrange(1, max_period + 1))]
    return EpSeq(prefix, period)


def random_presentation(rng, max_classes=3):
    """One valid reduced presentation with small prefix/period data."""
    while True:
        m = rng.randrange(1, max_classes + 1)
        patterns = []
        attempts = 0
        while len(patterns) < m and attempts < 64:
            attempts += 1
            s = random_zero_one_seq(rng)
            if not s.is_zero() and s not in patterns:
                patterns.append(s)
        if len(patterns) < m:
            continue
        classmap = EpSeq(
            [rng.randrange(m) for _ in range(rng.randrange(5))],
            [rng.randrange(m) for _ in range(rng.randrange(1, 7))],
        )
        if set(classmap.prefix) | set(classmap.period) != set(range(m)):
            continue
        return EpPresentation(tuple(patterns), classmap)


@pytest.fixture(scope="session")
def corpus():
    rng = random.Random(CORPUS_SEED)
    return [random_presentation(rng) for _ in range(CORPUS_SIZE)]


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """First quarter of the corpus, for per-module property tests."""
    return corpus[:25]


@pytest.fixture
def all_ones():
    return EpPresentation((EpSeq([], [1]),), EpSeq([], [0]))


@pytest.fixture
def checkerboard():
    return EpPresentation(
        (EpSeq([], [0, 1]), EpSeq([], [1, 0])),
        EpSeq([], [0, 1]),
    )


@pytest.fixture
def checkerboard_complement():
    return EpPresentation(
        (EpSeq([], [1, 0]), EpSeq([], [0, 1])),
        EpSeq([], [0, 1]),
    )


@pytest.fixture
def row_finite():
    """Every row is (1, 1, 0, 0, ...)."""
    return EpPresentation((EpSeq([1, 1], [0]),), EpSeq([], [0]))


@pytest.fixture
def delta_rows():
    """Every row is the delta at 0; the kernel is one-dimensional."""
    return EpPresentation((EpSeq([1], [0]),), EpSeq([], [0]))


@pytest.fixture
def named_presentations(all_ones, checkerboard, checkerboard_complement, row_finite, delta_rows):
    return [all_ones, checkerboard, checkerboard_complement, row_finite, delta_rows]


def finite_all_ones(n):
    return FiniteMatrix(tuple(tuple(1 for _ in range(n)) for _ in range(n)))
