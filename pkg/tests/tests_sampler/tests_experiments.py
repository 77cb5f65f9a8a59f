import statistics
from fractions import Fraction

import pytest

from tests.oracle import kernel_oracle
from zigzag_boundary.characters.evaluators import evaluate
from zigzag_boundary.exceptions import BoundExceededError, CompositionError
from zigzag_boundary.sampler.construction import sample_arrangement
from zigzag_boundary.sampler.experiments import (
    MAX_KERNEL_SIZE,
    kernel_trajectory,
    lln_trajectory,
    shapes_along,
)
from zigzag_boundary.zigzag.compositions import Composition

C = Composition.of


def test_shapes_along_single_intervals(single_up, single_down):
    assert shapes_along(single_up, [10, 2, 5], 0) == [(2, C(2)), (5, C(5)), (10, C(10))]
    assert shapes_along(single_down, [3], 0) == [(3, C(1, 1, 1))]


def test_shapes_along_read_one_arrangement(three_pieces):
    arrangement = sample_arrangement(three_pieces, 40, 8)
    rows = shapes_along(three_pieces, [5, 20, 40], 8)
    assert rows == [(n, arrangement.shape(n)) for n in (5, 20, 40)]


def test_lln_on_single_intervals(single_up, single_down):
    assert lln_trajectory(single_up, [2, 10, 100], 0) == [(2, 0), (10, 0), (100, 0)]
    assert [d for _, d in lln_trajectory(single_down, [2, 50], 3)] == [0, 0]


def test_lln_checkpoints_are_validated(three_pieces):
    with pytest.raises(CompositionError):
        lln_trajectory(three_pieces, [1, 10], 0)
    with pytest.raises(CompositionError):
        lln_trajectory(three_pieces, [], 0)


def test_lln_distances_are_fractions(three_pieces):
    rows = lln_trajectory(three_pieces, [10, 100], 1)
    assert [n for n, _ in rows] == [10, 100]
    assert all(isinstance(d, Fraction) and 0 <= d <= 1 for _, d in rows)


@pytest.mark.slow
def test_lln_distances_shrink(three_pieces):
    early, late = [], []
    for seed in range(20):
        (_, first), (_, last) = lln_trajectory(three_pieces, [100, 10_000], seed)
        early.append(first)
        late.append(last)
    assert statistics.median(late) <= Fraction(1, 20)
    assert statistics.median(late) < statistics.median(early)


@pytest.mark.slow
def test_lln_for_the_uniform_arrangement(empty_paintbox):
    medians = []
    for n in (100, 1000, 10_000):
        medians.append(statistics.median(lln_trajectory(empty_paintbox, [n], seed)[0][1] for seed in range(5)))
    assert medians[0] > medians[1] > medians[2]


def test_kernel_of_the_one_box_shape(empty_paintbox):
    rows = kernel_trajectory(empty_paintbox, C(1), [1, 3, 5], 0)
    assert [n for n, _, _, _ in rows] == [1, 3, 5]
    assert all(kernel == 1 and target == 1 for _, _, kernel, target in rows)


def test_kernel_trajectory_matches_brute_force(three_pieces):
    mu = C(2, 1)
    for n, shape, kernel, target in kernel_trajectory(three_pieces, mu, [3, 5, 7], 4):
        assert shape.size == n
        assert kernel == kernel_oracle(mu, shape)
        assert target == evaluate(three_pieces, mu)


def test_kernel_trajectory_bounds(three_pieces):
    with pytest.raises(BoundExceededError):
        kernel_trajectory(three_pieces, C(1), [MAX_KERNEL_SIZE + 1], 0)
    with pytest.raises(CompositionError):
        kernel_trajectory(three_pieces, C(2, 1), [2], 0)
