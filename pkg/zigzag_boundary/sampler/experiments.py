"""Convergence experiments along a single sampled arrangement."""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy

from zigzag_boundary.characters.evaluators import evaluate
from zigzag_boundary.characters.paintbox import OrientedPaintbox, paintbox_distance
from zigzag_boundary.exceptions import BoundExceededError, CompositionError
from zigzag_boundary.sampler.arrangement import restrict_to
from zigzag_boundary.sampler.construction import sample_arrangement
from zigzag_boundary.zigzag.compositions import Composition
from zigzag_boundary.zigzag.embedding import iota
from zigzag_boundary.zigzag.graph import martin_kernel
from zigzag_boundary.zigzag.permutations import zigzag_shape

logger = logging.getLogger(__name__)

MAX_KERNEL_SIZE = 14


def _checked(checkpoints: Sequence[int], smallest: int) -> List[int]:
    points = sorted(set(int(n) for n in checkpoints))
    if not points:
        raise CompositionError("At least one checkpoint is needed")
    if points[0] < smallest:
        raise CompositionError(f"Checkpoints must be at least {smallest}, got {points[0]}")
    return points


def shapes_along(paintbox: OrientedPaintbox, checkpoints: Sequence[int], seed: int) -> List[Tuple[int, Composition]]:
    """``zs(Pi_n)`` at every checkpoint of one arrangement."""
    points = _checked(checkpoints, 1)
    full = numpy.asarray(sample_arrangement(paintbox, points[-1], seed).permutation())
    return [(n, zigzag_shape(restrict_to(full, n).tolist())) for n in points]


def lln_trajectory(
    paintbox: OrientedPaintbox, checkpoints: Sequence[int], seed: int
) -> List[Tuple[int, Fraction]]:
    """
    Distance from ``iota(zs(Pi_n))`` to the paintbox at every checkpoint.

    All checkpoints read the same arrangement, so the rows form one trajectory.
    """
    _checked(checkpoints, 2)
    rows = []
    for n, shape in shapes_along(paintbox, checkpoints, seed):
        distance = paintbox_distance(iota(shape), paintbox)
        logger.debug("n=%d: %d clusters, distance %s", n, len(shape.clusters()), distance)
        rows.append((n, distance))
    return rows


def kernel_trajectory(
    paintbox: OrientedPaintbox, mu: Composition, checkpoints: Sequence[int], seed: int
) -> List[Tuple[int, Composition, Fraction, Fraction]]:
    """
    ``K(mu, lambda_n)`` along a sampled path next to ``p(mu)``.

    Returns rows ``(n, lambda_n, K(mu, lambda_n), p(mu))``; no limit is asserted.
    """
    points = _checked(checkpoints, max(mu.size, 1))
    if points[-1] > MAX_KERNEL_SIZE:
        raise BoundExceededError(
            f"Kernel tables are limited to |lambda| <= {MAX_KERNEL_SIZE}, got {points[-1]}"
        )
    target = evaluate(paintbox, mu)
    return [
        (n, shape, martin_kernel(mu, shape), target)
        for n, shape in shapes_along(paintbox, points, seed)
    ]
