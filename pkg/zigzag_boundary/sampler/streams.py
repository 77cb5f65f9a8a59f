"""
Reproducible uniform streams.

Every stream is a PCG64 generator seeded through a ``numpy.random.SeedSequence``;
independent trials and batches get their own spawn key so that results do not
depend on how the work is scheduled.
"""

import logging
from typing import Iterable, Optional

import numpy

logger = logging.getLogger(__name__)

BATCH_SIZE = 100_000
MAX_REDRAWS = 64


def _check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, numpy.integer)) or seed < 0:
        raise ValueError(f"Seeds are nonnegative integers, got {seed!r}")
    return int(seed)


def trial_rng(seed: int, trial: int = 0) -> numpy.random.Generator:
    """Generator of one independent trial (or batch) of a run seeded with ``seed``."""
    sequence = numpy.random.SeedSequence(_check_seed(seed), spawn_key=(trial,))
    return numpy.random.Generator(numpy.random.PCG64(sequence))


def batch_sizes(trials: int, batch_size: int = BATCH_SIZE) -> Iterable[int]:
    full, rest = divmod(trials, batch_size)
    yield from [batch_size] * full
    if rest:
        yield rest


class SampleStream:
    """
    The sequence ``xi_1, xi_2, ...`` of 53-bit uniforms on ``[0, 1[``.

    Draws equal to a ``forbidden`` value or to an earlier draw are replaced by
    fresh ones, so the values are pairwise distinct and avoid the boundary
    points of the paintbox being sampled.
    """

    def __init__(self, seed: int, forbidden: Iterable[float] = (), trial: int = 0):
        self.seed = _check_seed(seed)
        self.trial = trial
        self.forbidden = frozenset(float(x) for x in forbidden)
        self._rng = trial_rng(self.seed, trial)
        self._seen = set()

    def _acceptable(self, value: float) -> bool:
        return value not in self.forbidden and value not in self._seen

    def next(self) -> float:
        value = float(self._rng.random())
        while not self._acceptable(value):
            logger.debug("redrawing tied uniform %r", value)
            value = float(self._rng.random())
        self._seen.add(value)
        return value

    def draw(self, n: int) -> numpy.ndarray:
        return numpy.fromiter((self.next() for _ in range(n)), dtype=float, count=n)


def uniform_rows(
    rng: numpy.random.Generator, rows: int, n: int, forbidden: Optional[numpy.ndarray] = None
) -> numpy.ndarray:
    """
    A ``rows x n`` array of uniforms with distinct entries per row.

    Rows holding a tie or a forbidden value are redrawn as a whole.
    """
    values = rng.random((rows, n))
    for _ in range(MAX_REDRAWS):
        ordered = numpy.sort(values, axis=1)
        bad = (numpy.diff(ordered, axis=1) == 0).any(axis=1)
        if forbidden is not None and len(forbidden):
            bad |= numpy.isin(values, forbidden).any(axis=1)
        count = int(bad.sum())
        if not count:
            return values
        logger.debug("redrawing %d rows with tied uniforms", count)
        values[bad] = rng.random((count, n))
    raise RuntimeError("Could not draw distinct uniforms")
