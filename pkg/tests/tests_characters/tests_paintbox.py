from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given

from tests.strategies import paintboxes
from zigzag_boundary.characters.paintbox import (
    Interval,
    Orientation,
    OrientedPaintbox,
    RankedFrequencies,
    format_paintbox,
    paintbox_distance,
    parse_paintbox,
    rank,
    read_paintbox,
)
from zigzag_boundary.exceptions import PaintboxError, PaintboxFormatError
from zigzag_boundary.zigzag.compositions import Composition
from zigzag_boundary.zigzag.embedding import iota


def test_interval_bounds():
    with pytest.raises(PaintboxError):
        Interval(Fraction(1, 2), Fraction(1, 2), Orientation.UP)
    with pytest.raises(PaintboxError):
        Interval(Fraction(0), Fraction(3, 2), Orientation.DOWN)
    interval = Interval(Fraction(1, 4), Fraction(1, 2), "down")
    assert interval.orientation is Orientation.DOWN
    assert interval.initial_point == Fraction(1, 2)
    assert interval.contains(Fraction(1, 3))
    assert not interval.contains(Fraction(1, 4))


def test_overlapping_or_unsorted_intervals_are_rejected():
    first = Interval(Fraction(0), Fraction(1, 2), Orientation.UP)
    second = Interval(Fraction(1, 4), Fraction(1), Orientation.UP)
    with pytest.raises(PaintboxError):
        OrientedPaintbox((first, second))
    third = Interval(Fraction(3, 4), Fraction(1), Orientation.UP)
    with pytest.raises(PaintboxError):
        OrientedPaintbox((third, first))
    assert len(OrientedPaintbox.from_triples([("3/4", 1, "up"), (0, "1/2", "up")])) == 2


def test_finitary_paintbox(three_pieces):
    assert [i.length for i in three_pieces.up] == [Fraction(3, 8), Fraction(1, 4)]
    assert [i.length for i in three_pieces.down] == [Fraction(3, 8)]
    assert three_pieces.is_finitary
    assert three_pieces.gamma == 0
    assert three_pieces.gaps() == []
    assert three_pieces.endpoints() == [0, Fraction(3, 8), Fraction(3, 4), 1]


def test_paintbox_with_gaps(gapped):
    assert gapped.gamma == Fraction(5, 8)
    assert not gapped.is_finitary
    assert gapped.gaps() == [
        (0, Fraction(1, 4)),
        (Fraction(1, 2), Fraction(3, 4)),
        (Fraction(7, 8), 1),
    ]
    assert [s.is_gap for s in gapped.segments()] == [True, False, True, False, True]
    assert sum(s.length for s in gapped.segments()) == 1


def test_locate(three_pieces, gapped):
    assert three_pieces.locate(Fraction(1, 2)) == 1
    assert three_pieces.locate(Fraction(1, 8)) == 0
    assert three_pieces.locate(Fraction(3, 8)) is None
    assert gapped.locate(0.1) is None
    assert gapped.locate(0.8) == 1


def test_special_paintboxes():
    assert OrientedPaintbox.empty().gamma == 1
    shuffle = OrientedPaintbox.equispaced(4)
    assert shuffle.is_finitary and len(shuffle.up) == 4
    box = OrientedPaintbox.bi_interval(Fraction(1, 3))
    assert [i.orientation for i in box.intervals] == [Orientation.DOWN, Orientation.UP]
    with pytest.raises(PaintboxError):
        OrientedPaintbox.bi_interval(1)
    with pytest.raises(PaintboxError):
        OrientedPaintbox.equispaced(0)


def test_mirror(bi_interval):
    assert bi_interval.mirror() == OrientedPaintbox.bi_interval(Fraction(2, 3))
    assert OrientedPaintbox.equispaced(3).mirror() == OrientedPaintbox.equispaced(3, Orientation.DOWN)


@given(paintboxes())
def test_mirror_is_an_involution(box):
    assert box.mirror().mirror() == box
    assert box.mirror().gamma == box.gamma


def test_truncate(three_pieces):
    truncated = three_pieces.truncate(Fraction(1, 4))
    assert len(truncated) == 2
    assert truncated.gamma == Fraction(1, 4)
    assert three_pieces.truncate(0) == three_pieces


def test_rank(three_pieces):
    ranked = rank(three_pieces)
    assert ranked.alpha == (Fraction(3, 8), Fraction(1, 4))
    assert ranked.beta == (Fraction(3, 8),)
    assert ranked.gamma == 0
    assert rank(OrientedPaintbox.empty()) == RankedFrequencies((), ())


def test_ranked_frequencies_are_validated():
    with pytest.raises(PaintboxError):
        RankedFrequencies((Fraction(-1, 2),))
    with pytest.raises(PaintboxError):
        RankedFrequencies((Fraction(1, 2), Fraction(1, 3)), (Fraction(1, 4),))
    assert RankedFrequencies(("1/8", "1/2")).alpha == (Fraction(1, 2), Fraction(1, 8))


def test_distance_examples(single_up, three_pieces, empty_paintbox):
    assert paintbox_distance(three_pieces, three_pieces) == 0
    assert paintbox_distance(single_up, empty_paintbox) == Fraction(1, 2)
    assert paintbox_distance(three_pieces, empty_paintbox) == Fraction(3, 16)
    assert paintbox_distance(iota(Composition.of(4, 1, 1, 3)), three_pieces) == 0


@given(paintboxes(), paintboxes())
def test_distance_is_a_symmetric_nonnegative_rational(a, b):
    assert paintbox_distance(a, b) == paintbox_distance(b, a)
    assert 0 <= paintbox_distance(a, b) <= 1
    assert paintbox_distance(a, a) == 0


@given(paintboxes())
def test_distance_to_empty_is_half_the_longest_interval(box):
    longest = max((interval.length for interval in box.intervals), default=Fraction(0))
    assert paintbox_distance(box, OrientedPaintbox.empty()) == longest / 2


def test_parse_paintbox(three_pieces):
    text = "# fixture\n0 3/8 up\n\n3/8 3/4 DOWN  # middle\n3/4 1 up\n"
    assert parse_paintbox(text) == three_pieces
    assert parse_paintbox("empty\n") == OrientedPaintbox.empty()
    assert str(three_pieces) == "0 3/8 up; 3/8 3/4 down; 3/4 1 up"


@pytest.mark.parametrize(
    "text, line",
    [
        ("0 1/2 up\n1/4 1 down\n", 2),
        ("0 1/2 sideways\n", 1),
        ("0 1/2\n", 1),
        ("# comment\n1/2 0 up\n", 2),
        ("1/2 1 up\n0 1/4 up\n", 2),
        ("0 1/0 up\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(PaintboxFormatError) as info:
        parse_paintbox(text)
    assert info.value.line == line


@pytest.mark.parametrize("text", ["", "# nothing here\n", "empty\n0 1 up\n"])
def test_parse_rejects_files_without_a_paintbox(text):
    with pytest.raises(PaintboxFormatError):
        parse_paintbox(text)


@given(paintboxes())
def test_format_round_trip(box):
    assert parse_paintbox(format_paintbox(box)) == box


def test_read_paintbox(paintbox_file: Path, three_pieces, tmp_path: Path):
    assert read_paintbox(paintbox_file) == three_pieces
    broken = tmp_path / "broken.txt"
    broken.write_text("0 1 up\n1/2 1 down\n", encoding="utf-8")
    with pytest.raises(PaintboxFormatError) as info:
        read_paintbox(broken)
    assert info.value.path == broken
    assert str(broken) in str(info.value)
