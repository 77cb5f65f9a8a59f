from fractions import Fraction
from pathlib import Path

import pytest

from zigzag_boundary.characters.paintbox import OrientedPaintbox, format_paintbox


@pytest.fixture
def single_up() -> OrientedPaintbox:
    return OrientedPaintbox.from_triples([(0, 1, "up")])


@pytest.fixture
def single_down() -> OrientedPaintbox:
    return OrientedPaintbox.from_triples([(0, 1, "down")])


@pytest.fixture
def bi_interval() -> OrientedPaintbox:
    return OrientedPaintbox.bi_interval(Fraction(1, 3))


@pytest.fixture
def three_pieces() -> OrientedPaintbox:
    """Up, down, up over eighths of the unit interval."""
    return OrientedPaintbox.from_triples(
        [("0", "3/8", "up"), ("3/8", "6/8", "down"), ("6/8", "1", "up")]
    )


@pytest.fixture
def gapped() -> OrientedPaintbox:
    return OrientedPaintbox.from_triples([("1/4", "1/2", "up"), ("3/4", "7/8", "down")])


@pytest.fixture
def empty_paintbox() -> OrientedPaintbox:
    return OrientedPaintbox.empty()


@pytest.fixture
def paintbox_file(tmp_path: Path, three_pieces: OrientedPaintbox) -> Path:
    path = tmp_path / "three_pieces.txt"
    path.write_text("# up, down, up\n" + format_paintbox(three_pieces), encoding="utf-8")
    return path
