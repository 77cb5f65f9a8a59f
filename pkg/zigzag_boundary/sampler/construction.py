"""
The oriented paintbox construction of random arrangements.

Points ``xi_j`` are thrown uniformly on ``[0, 1]``. Two points in the same
up-interval are ordered by their index, two points in the same down-interval
by reversed index, and otherwise points are ordered by location, an interval
counting as located at its left endpoint.
"""

import bisect
import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

import numpy
import sympy

from zigzag_boundary.characters.paintbox import Orientation, OrientedPaintbox
from zigzag_boundary.exceptions import CharacterError, PermutationError
from zigzag_boundary.sampler.arrangement import ArrangementPrefix
from zigzag_boundary.sampler.streams import SampleStream, batch_sizes, trial_rng, uniform_rows
from zigzag_boundary.zigzag.compositions import Composition
from zigzag_boundary.zigzag.permutations import Permutation

logger = logging.getLogger(__name__)

SortKey = Tuple[float, int]


class PaintboxLookup:
    """Float view of a paintbox for locating sample points by binary search."""

    def __init__(self, paintbox: OrientedPaintbox):
        self.paintbox = paintbox
        self.lefts = numpy.array([float(i.left) for i in paintbox.intervals], dtype=float)
        self.rights = numpy.array([float(i.right) for i in paintbox.intervals], dtype=float)
        self.signs = numpy.array(
            [1 if i.orientation is Orientation.UP else -1 for i in paintbox.intervals], dtype=int
        )
        self.initial_points = numpy.where(self.signs > 0, self.lefts, self.rights)
        self.endpoints = numpy.unique(numpy.concatenate([self.lefts, self.rights]))

    def locate(self, xi: numpy.ndarray) -> numpy.ndarray:
        """Interval index of every point, ``-1`` for points in the complement."""
        index = numpy.searchsorted(self.rights, xi, side="right")
        inside = index < len(self.rights)
        clipped = numpy.minimum(index, max(len(self.rights) - 1, 0))
        if len(self.rights):
            inside &= self.lefts[clipped] < xi
        return numpy.where(inside, index, -1)

    def sort_keys(self, xi: numpy.ndarray) -> Tuple[numpy.ndarray, numpy.ndarray]:
        """
        Primary and secondary keys whose lexicographic order is the arrangement.

        The last axis of ``xi`` indexes the points ``1..n``.
        """
        hit = self.locate(xi)
        inside = hit >= 0
        safe = numpy.where(inside, hit, 0)
        labels = numpy.arange(1, xi.shape[-1] + 1)
        if len(self.lefts):
            primary = numpy.where(inside, self.lefts[safe], xi)
            secondary = numpy.where(inside, self.signs[safe] * labels, 0)
        else:
            primary = xi.copy()
            secondary = numpy.zeros_like(hit)
        return primary, secondary


def draw_points(paintbox: OrientedPaintbox, n: int, seed: int) -> numpy.ndarray:
    """The stream ``xi_1..xi_n`` used by the single-arrangement samplers."""
    if n < 1:
        raise PermutationError(f"Need n >= 1, got {n}")
    return SampleStream(seed, forbidden=PaintboxLookup(paintbox).endpoints).draw(n)


def arrangement_from_points(paintbox: OrientedPaintbox, xi: Sequence[float]) -> ArrangementPrefix:
    """Initial ranks of the arrangement built from the points ``xi``."""
    primary, secondary = PaintboxLookup(paintbox).sort_keys(numpy.asarray(xi, dtype=float))
    seen: List[SortKey] = []
    ranks = []
    for key in zip(primary.tolist(), secondary.tolist()):
        ranks.append(bisect.bisect_left(seen, key) + 1)
        bisect.insort(seen, key)
    return ArrangementPrefix(tuple(ranks))


def sample_arrangement(paintbox: OrientedPaintbox, n: int, seed: int) -> ArrangementPrefix:
    """
    Sample ``Pi_1, ..., Pi_n`` from the paintbox construction.

    Parameters
    ----------
    paintbox : OrientedPaintbox
        The boundary parameter.
    n : int
        Length of the prefix.
    seed : int
        Seed of the uniform stream.

    Returns
    -------
    ArrangementPrefix
    """
    arrangement = arrangement_from_points(paintbox, draw_points(paintbox, n, seed))
    logger.debug("sampled arrangement of length %d from %s", n, paintbox)
    return arrangement


def sample_permutations(
    paintbox: OrientedPaintbox, n: int, trials: int, seed: int
) -> numpy.ndarray:
    """
    ``trials`` independent copies of ``Pi_n`` as rows of a ``trials x n`` array.

    Batch ``b`` draws from its own stream, so the rows only depend on ``seed``.
    """
    if n < 1 or trials < 1:
        raise PermutationError(f"Need n >= 1 and trials >= 1, got n={n}, trials={trials}")
    lookup = PaintboxLookup(paintbox)
    blocks = []
    for batch, size in enumerate(batch_sizes(trials)):
        xi = uniform_rows(trial_rng(seed, batch), size, n, lookup.endpoints)
        primary, secondary = lookup.sort_keys(xi)
        blocks.append(numpy.lexsort((secondary, primary), axis=-1) + 1)
        logger.debug("batch %d: %d permutations of size %d", batch, size, n)
    return numpy.concatenate(blocks)


def shape_codes(permutations: numpy.ndarray) -> numpy.ndarray:
    """Descent sets of the rows, as bit masks with bit ``j - 1`` set for a descent at ``j``."""
    descents = permutations[:, :-1] > permutations[:, 1:]
    weights = 1 << numpy.arange(descents.shape[1], dtype=numpy.int64)
    return descents.astype(numpy.int64) @ weights


def shape_from_code(code: int, n: int) -> Composition:
    return Composition.from_descents([j + 1 for j in range(n - 1) if code >> j & 1], n)


def count_shapes(permutations: numpy.ndarray) -> Dict[Composition, int]:
    n = permutations.shape[1]
    codes, counts = numpy.unique(shape_codes(permutations), return_counts=True)
    return {shape_from_code(int(c), n): int(k) for c, k in zip(codes, counts)}


def count_permutations(permutations: numpy.ndarray) -> Dict[Permutation, int]:
    rows, counts = numpy.unique(permutations, axis=0, return_counts=True)
    return {tuple(int(v) for v in row): int(k) for row, k in zip(rows, counts)}


def empirical_pmf(
    paintbox: OrientedPaintbox, n: int, trials: int, seed: int
) -> Dict[Composition, float]:
    """Frequencies of ``zs(Pi_n)`` over ``trials`` independent samples."""
    counts = count_shapes(sample_permutations(paintbox, n, trials, seed))
    return {shape: count / trials for shape, count in sorted(counts.items())}


def permutation_counts(
    paintbox: OrientedPaintbox, n: int, trials: int, seed: int
) -> Dict[Permutation, int]:
    return count_permutations(sample_permutations(paintbox, n, trials, seed))


def restrict_rows(permutations: numpy.ndarray, j: int) -> numpy.ndarray:
    """Apply ``tau_j`` to every row: drop the value ``j`` and rank the rest."""
    rows, n = permutations.shape
    kept = permutations[permutations != j].reshape(rows, n - 1)
    return kept - (kept > j)


def restriction_counts(
    paintbox: OrientedPaintbox, n: int, trials: int, seed: int
) -> Dict[int, Dict[Permutation, int]]:
    """Empirical law of ``tau_j(Pi_n)`` for every ``j = 1..n``, from the same samples."""
    if n < 2:
        raise PermutationError(f"Restriction needs n >= 2, got {n}")
    sample = sample_permutations(paintbox, n, trials, seed)
    return {j: count_permutations(restrict_rows(sample, j)) for j in range(1, n + 1)}


def sample_mixture(
    paintboxes: Sequence[OrientedPaintbox],
    weights: Sequence[Union[float, Fraction]],
    n: int,
    trials: int,
    seed: int,
) -> numpy.ndarray:
    """
    Copies of ``Pi_n`` when the paintbox itself is drawn from a finite prior.

    Each trial first picks paintbox ``i`` with probability ``weights[i]``.
    """
    probabilities = numpy.array([float(w) for w in weights], dtype=float)
    if len(paintboxes) != len(probabilities) or (probabilities < 0).any():
        raise CharacterError("Prior weights must be nonnegative, one per paintbox")
    if not numpy.isclose(probabilities.sum(), 1.0):
        raise CharacterError(f"Prior weights sum to {probabilities.sum()}, not 1")
    child_seeds = numpy.random.SeedSequence(seed).generate_state(len(paintboxes) + 1, dtype=numpy.uint64)
    choices = numpy.random.default_rng(int(child_seeds[0])).choice(
        len(paintboxes), size=trials, p=probabilities
    )
    result = numpy.empty((trials, n), dtype=numpy.int64)
    for i, paintbox in enumerate(paintboxes):
        chosen = numpy.flatnonzero(choices == i)
        if len(chosen):
            result[chosen] = sample_permutations(paintbox, n, len(chosen), int(child_seeds[i + 1]))
    return result


def polya_bi_interval(
    theta1: Union[float, Fraction], theta2: Union[float, Fraction], n: int, seed: int
) -> ArrangementPrefix:
    """
    Initial ranks of the random bi-interval paintbox driven by a Polya urn.

    ``r_1 = 1``; for ``m >= 2``, ``r_m`` is ``1`` with probability
    ``(k + theta1) / (k + l + theta1 + theta2)`` and ``m`` otherwise, where
    ``k`` and ``l`` count the earlier ranks ``r_2..r_{m-1}`` equal to 1 and
    to their maximum.
    """
    if theta1 <= 0 or theta2 <= 0:
        raise CharacterError(f"Urn parameters must be positive, got {theta1}, {theta2}")
    if n < 1:
        raise PermutationError(f"Need n >= 1, got {n}")
    rng = trial_rng(seed)
    theta1, theta2 = float(theta1), float(theta2)
    ranks, bottom, top = [1], 0, 0
    for m in range(2, n + 1):
        if rng.random() < (bottom + theta1) / (bottom + top + theta1 + theta2):
            ranks.append(1)
            bottom += 1
        else:
            ranks.append(m)
            top += 1
    return ArrangementPrefix(tuple(ranks))


def polya_hook_counts(
    theta1: Union[float, Fraction], theta2: Union[float, Fraction], n: int, trials: int, seed: int
) -> Dict[Composition, int]:
    """
    Shapes of ``Pi_n`` over ``trials`` urn runs, vectorized over each batch.

    A rank ``r_m = 1`` adds a row of one box on top of the hook, so
    ``zs(Pi_n) = (1^l, k + 1)`` with ``l`` the number of ranks equal to 1.
    """
    if theta1 <= 0 or theta2 <= 0:
        raise CharacterError(f"Urn parameters must be positive, got {theta1}, {theta2}")
    theta1, theta2 = float(theta1), float(theta2)
    totals: Counter = Counter()
    for batch, size in enumerate(batch_sizes(trials)):
        rng = trial_rng(seed, batch)
        bottom = numpy.zeros(size, dtype=numpy.int64)
        for m in range(2, n + 1):
            drawn = m - 2
            threshold = (bottom + theta1) / (drawn + theta1 + theta2)
            bottom += rng.random(size) < threshold
        legs, counts = numpy.unique(bottom, return_counts=True)
        for l, count in zip(legs.tolist(), counts.tolist()):
            totals[Composition((1,) * l + (n - l,))] += count
    return dict(sorted(totals.items()))


def _rising(x: Fraction, k: int) -> sympy.Rational:
    return sympy.rf(sympy.Rational(x.numerator, x.denominator), k)


def polya_hook_probability(
    theta1: Union[int, str, Fraction], theta2: Union[int, str, Fraction], legs: int, arm: int
) -> Fraction:
    """
    ``P(Pi_n = pi)`` for each ``pi`` of hook shape ``(1^legs, arm + 1)``.

    Equals ``B(theta1 + legs, theta2 + arm) / B(theta1, theta2)``, written with
    rising factorials.
    """
    theta1, theta2 = Fraction(theta1), Fraction(theta2)
    if theta1 <= 0 or theta2 <= 0:
        raise CharacterError(f"Urn parameters must be positive, got {theta1}, {theta2}")
    ratio = _rising(theta1, legs) * _rising(theta2, arm) / _rising(theta1 + theta2, legs + arm)
    return Fraction(int(ratio.p), int(ratio.q))
