"""
Heights of an arrangement and the quasi-uniform measure.

The height of ``j`` is the limiting fraction of integers placed before ``j``.
For a paintbox arrangement it equals the initial point of the interval hit by
``xi_j`` (its left end for up-intervals, its right end for down-intervals),
or ``xi_j`` itself when the point falls in the complement.
"""

import bisect
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import numpy

from zigzag_boundary.characters.paintbox import Orientation, OrientedPaintbox
from zigzag_boundary.exceptions import PaintboxError
from zigzag_boundary.sampler.arrangement import ArrangementPrefix
from zigzag_boundary.sampler.construction import (
    PaintboxLookup,
    arrangement_from_points,
    draw_points,
)

logger = logging.getLogger(__name__)


def empirical_heights(arrangement: ArrangementPrefix) -> numpy.ndarray:
    """``#{i <= n : i before j} / n`` for ``j = 1..n``."""
    permutation = numpy.asarray(arrangement.permutation())
    n = len(permutation)
    positions = numpy.empty(n, dtype=float)
    positions[permutation - 1] = numpy.arange(n)
    return positions / n


def heights(paintbox: OrientedPaintbox, n: int, seed: int) -> numpy.ndarray:
    return empirical_heights(arrangement_from_points(paintbox, draw_points(paintbox, n, seed)))


def limiting_heights(paintbox: OrientedPaintbox, xi: numpy.ndarray) -> numpy.ndarray:
    """Initial point of the interval hit by each ``xi_j``, or ``xi_j`` in the complement."""
    lookup = PaintboxLookup(paintbox)
    hit = lookup.locate(xi)
    if not len(lookup.initial_points):
        return numpy.asarray(xi, dtype=float).copy()
    return numpy.where(hit >= 0, lookup.initial_points[numpy.maximum(hit, 0)], xi)


def quasi_uniform_atoms(paintbox: OrientedPaintbox) -> List[Tuple[Fraction, Fraction]]:
    """Atoms ``(point, mass)`` of the quasi-uniform measure, sorted by point."""
    atoms: Dict[Fraction, Fraction] = defaultdict(Fraction)
    for interval in paintbox.intervals:
        atoms[interval.initial_point] += interval.length
    return sorted(atoms.items())


def quasi_uniform_cdf(
    paintbox: OrientedPaintbox, x: Union[int, str, Fraction], closed: bool = True
) -> Fraction:
    """
    ``nu[0, x]`` (or ``nu[0, x[`` when ``closed`` is false).

    ``nu`` sweeps the mass of every interval to its initial point and keeps
    Lebesgue measure on the complement.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise PaintboxError(f"quasi_uniform_cdf needs 0 <= x <= 1, got {x}")
    diffuse = sum(
        (max(Fraction(0), min(right, x) - left) for left, right in paintbox.gaps()),
        Fraction(0),
    )
    atomic = sum(
        (mass for point, mass in quasi_uniform_atoms(paintbox) if point < x or (closed and point == x)),
        Fraction(0),
    )
    return diffuse + atomic


@dataclass(frozen=True)
class HeightEncoding:
    """
    The pairs ``(phi_j, s_j)`` and the arrangement they encode.

    ``s_j`` is the orientation of the interval hit by ``xi_j``, ``None`` for the
    complement.
    """

    phi: Tuple[float, ...]
    signs: Tuple[Optional[Orientation], ...]
    arrangement: ArrangementPrefix


def decode_heights(
    phi: Tuple[float, ...], signs: Tuple[Optional[Orientation], ...]
) -> ArrangementPrefix:
    """
    Rebuild the arrangement from heights and signs.

    For ``i < j``, ``i`` comes before ``j`` iff ``phi_i < phi_j``, or
    ``phi_i == phi_j`` and ``s_j`` is up. Hence ``j`` enters above all earlier
    ties when ``s_j`` is up and below them otherwise.
    """
    seen: List[float] = []
    ranks = []
    for value, sign in zip(phi, signs):
        if sign is Orientation.UP:
            ranks.append(bisect.bisect_right(seen, value) + 1)
        else:
            ranks.append(bisect.bisect_left(seen, value) + 1)
        bisect.insort(seen, value)
    return ArrangementPrefix(tuple(ranks))


def encode_heights(paintbox: OrientedPaintbox, n: int, seed: int) -> HeightEncoding:
    """Heights and signs of the first ``n`` points of the stream seeded by ``seed``."""
    xi = draw_points(paintbox, n, seed)
    lookup = PaintboxLookup(paintbox)
    hit = lookup.locate(xi)
    phi = limiting_heights(paintbox, xi)
    signs = tuple(
        paintbox.intervals[h].orientation if h >= 0 else None for h in hit.tolist()
    )
    encoding = HeightEncoding(
        tuple(float(v) for v in phi), signs, decode_heights(tuple(phi.tolist()), signs)
    )
    logger.debug("encoded %d heights with %d distinct values", n, len(set(encoding.phi)))
    return encoding
