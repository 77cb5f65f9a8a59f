import math
from fractions import Fraction

import numpy
import pytest
from hypothesis import given, settings

from tests.strategies import paintboxes
from zigzag_boundary.characters.paintbox import Orientation
from zigzag_boundary.exceptions import PaintboxError
from zigzag_boundary.sampler.arrangement import ArrangementPrefix
from zigzag_boundary.sampler.construction import arrangement_from_points, draw_points, sample_arrangement
from zigzag_boundary.sampler.heights import (
    decode_heights,
    empirical_heights,
    encode_heights,
    heights,
    limiting_heights,
    quasi_uniform_atoms,
    quasi_uniform_cdf,
)


def test_empirical_heights():
    identity = ArrangementPrefix((1, 2, 3, 4))
    assert empirical_heights(identity).tolist() == [0.0, 0.25, 0.5, 0.75]
    reversal = ArrangementPrefix((1, 1, 1, 1))
    assert empirical_heights(reversal).tolist() == [0.75, 0.5, 0.25, 0.0]


def test_heights_of_single_intervals(single_up, single_down):
    n = 1000
    assert (heights(single_up, n, 0)[:10] <= 0.01).all()
    assert (heights(single_down, n, 0)[:10] >= 0.99).all()


def test_limiting_heights(three_pieces, gapped, empty_paintbox):
    points = numpy.array([0.1, 0.5, 0.9])
    assert limiting_heights(three_pieces, points).tolist() == [0.0, 0.75, 0.75]
    assert limiting_heights(gapped, numpy.array([0.1, 0.3, 0.8])).tolist() == [0.1, 0.25, 0.875]
    assert limiting_heights(empty_paintbox, points).tolist() == points.tolist()


def test_heights_of_the_uniform_arrangement_converge(empty_paintbox):
    n = 20_000
    xi = draw_points(empty_paintbox, n, 13)
    observed = empirical_heights(arrangement_from_points(empty_paintbox, xi))
    assert numpy.abs(observed[:10] - limiting_heights(empty_paintbox, xi[:10])).max() <= 0.02


def test_heights_converge_to_initial_points(three_pieces):
    n = 20_000
    xi = draw_points(three_pieces, n, 2)
    observed = empirical_heights(arrangement_from_points(three_pieces, xi))
    assert numpy.abs(observed[:10] - limiting_heights(three_pieces, xi[:10])).max() <= 0.02


def test_quasi_uniform_atoms(three_pieces, bi_interval, gapped):
    assert quasi_uniform_atoms(three_pieces) == [(0, Fraction(3, 8)), (Fraction(3, 4), Fraction(5, 8))]
    assert quasi_uniform_atoms(bi_interval) == [(Fraction(1, 3), 1)]
    assert quasi_uniform_atoms(gapped) == [(Fraction(1, 4), Fraction(1, 4)), (Fraction(7, 8), Fraction(1, 8))]


def test_quasi_uniform_cdf(empty_paintbox, bi_interval, gapped):
    for x in ("0", "1/5", "2/3", "1"):
        assert quasi_uniform_cdf(empty_paintbox, x) == Fraction(x)
    assert quasi_uniform_cdf(bi_interval, Fraction(1, 3)) == 1
    assert quasi_uniform_cdf(bi_interval, Fraction(1, 3), closed=False) == 0
    assert quasi_uniform_cdf(gapped, Fraction(3, 5)) == Fraction(3, 5)
    assert quasi_uniform_cdf(gapped, 1) == 1
    with pytest.raises(PaintboxError):
        quasi_uniform_cdf(gapped, Fraction(3, 2))


@settings(max_examples=30, deadline=None)
@given(paintboxes())
def test_quasi_uniform_measure_brackets_the_identity(box):
    # holds on the support of the measure: the atoms and the complement of the intervals
    points = [point for point, _ in quasi_uniform_atoms(box)]
    points += [Fraction(i, 64) for i in range(65) if box.locate(Fraction(i, 64)) is None]
    for x in points:
        assert quasi_uniform_cdf(box, x, closed=False) <= x <= quasi_uniform_cdf(box, x)
    assert quasi_uniform_cdf(box, 1) == 1


def test_decode_heights():
    arrangement = decode_heights((0.5, 0.5, 0.2), (Orientation.UP, Orientation.DOWN, None))
    assert arrangement.initial_ranks == (1, 1, 1)
    assert arrangement.permutation() == (3, 2, 1)
    rising = decode_heights((0.5, 0.5, 0.5), (Orientation.UP,) * 3)
    assert rising.permutation() == (1, 2, 3)


@pytest.mark.parametrize("fixture", ["three_pieces", "gapped", "bi_interval", "empty_paintbox"])
def test_height_encoding_rebuilds_the_arrangement(fixture, request):
    box = request.getfixturevalue(fixture)
    for seed in range(100):
        encoding = encode_heights(box, 50, seed)
        assert encoding.arrangement == sample_arrangement(box, 50, seed)
        assert len(encoding.phi) == len(encoding.signs) == 50


def test_height_signs(three_pieces, gapped):
    encoding = encode_heights(three_pieces, 200, 4)
    assert None not in encoding.signs
    assert set(encoding.phi) <= {0.0, 0.75}
    encoding = encode_heights(gapped, 200, 4)
    for value, sign in zip(encoding.phi, encoding.signs):
        if sign is Orientation.UP:
            assert value == 0.25
        elif sign is Orientation.DOWN:
            assert value == 0.875


def test_sign_frequency_at_a_shared_initial_point(bi_interval):
    n = 3000
    encoding = encode_heights(bi_interval, n, 21)
    ups = sum(sign is Orientation.UP for sign in encoding.signs) / n
    assert abs(ups - 2 / 3) <= 4 * math.sqrt(2 / 9 / n)
