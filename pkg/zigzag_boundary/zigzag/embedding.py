"""Embedding of a level of the zigzag graph into the space of paintboxes."""

from fractions import Fraction

from zigzag_boundary.characters.paintbox import Interval, Orientation, OrientedPaintbox
from zigzag_boundary.exceptions import CompositionError
from zigzag_boundary.zigzag.compositions import PLUS, Composition


def iota(lam: Composition) -> OrientedPaintbox:
    """
    Paintbox mimicking the zigzag ``lambda``.

    Each plus-cluster of ``w(lambda)`` becomes an up-interval and each
    minus-cluster a down-interval, with lengths proportional to the cluster
    lengths on the ``1/(|lambda| - 1)`` scale, in the same order.
    """
    if lam.size < 2:
        raise CompositionError(f"iota needs at least two boxes, got {lam}")
    scale = lam.size - 1
    intervals = []
    cursor = 0
    for letter, length in lam.clusters():
        orientation = Orientation.UP if letter == PLUS else Orientation.DOWN
        intervals.append(
            Interval(Fraction(cursor, scale), Fraction(cursor + length, scale), orientation)
        )
        cursor += length
    return OrientedPaintbox(tuple(intervals))
