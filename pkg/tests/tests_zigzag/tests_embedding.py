from fractions import Fraction

import pytest

from zigzag_boundary.characters.paintbox import Orientation, OrientedPaintbox
from zigzag_boundary.exceptions import CompositionError
from zigzag_boundary.zigzag.compositions import Composition
from zigzag_boundary.zigzag.embedding import iota


def test_iota_of_worked_example(three_pieces):
    assert iota(Composition.of(4, 1, 1, 3)) == three_pieces


def test_iota_of_row_and_column():
    assert iota(Composition.of(5)) == OrientedPaintbox.from_triples([(0, 1, "up")])
    assert iota(Composition.of(1, 1, 1)) == OrientedPaintbox.from_triples([(0, 1, "down")])


def test_iota_is_finitary_on_the_grid():
    box = iota(Composition.of(2, 3, 1, 1))
    assert box.is_finitary
    assert all((interval.length * 6).denominator == 1 for interval in box.intervals)
    assert [i.orientation for i in box.intervals] == [
        Orientation.UP,
        Orientation.DOWN,
        Orientation.UP,
        Orientation.DOWN,
    ]
    assert box.intervals[0].right == Fraction(1, 6)


def test_iota_needs_two_boxes():
    with pytest.raises(CompositionError):
        iota(Composition.of(1))
