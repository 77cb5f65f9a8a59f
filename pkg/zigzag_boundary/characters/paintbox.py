"""
Oriented paintboxes with rational endpoints.

An oriented paintbox is a finite, ordered family of disjoint open subintervals
of ``]0, 1[``, each tagged ``up`` or ``down``. The uncovered part of ``[0, 1]``
(the gaps) carries the remaining mass ``gamma``.
"""

import bisect
import enum
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from zigzag_boundary.exceptions import PaintboxError, PaintboxFormatError

Rational = Union[int, str, Fraction]


class Orientation(enum.Enum):
    UP = "up"
    DOWN = "down"

    def flipped(self) -> "Orientation":
        return Orientation.DOWN if self is Orientation.UP else Orientation.UP


@dataclass(frozen=True)
class Interval:
    left: Fraction
    right: Fraction
    orientation: Orientation

    def __post_init__(self):
        left, right = Fraction(self.left), Fraction(self.right)
        if not 0 <= left < right <= 1:
            raise PaintboxError(f"Interval ]{left}, {right}[ is not inside ]0, 1[")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "orientation", Orientation(self.orientation))

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    @property
    def initial_point(self) -> Fraction:
        """Left endpoint of an up-interval, right endpoint of a down-interval."""
        return self.left if self.orientation is Orientation.UP else self.right

    def contains(self, x) -> bool:
        return self.left < x < self.right


@dataclass(frozen=True)
class Segment:
    """A piece of ``[0, 1]`` in spatial order: an interval or a positive gap."""

    left: Fraction
    right: Fraction
    orientation: Optional[Orientation]

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    @property
    def is_gap(self) -> bool:
        return self.orientation is None


@dataclass(frozen=True)
class RankedFrequencies:
    """Sorted-down interval lengths ``alpha`` (up) and ``beta`` (down)."""

    alpha: Tuple[Fraction, ...] = ()
    beta: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        alpha = tuple(sorted((Fraction(a) for a in self.alpha), reverse=True))
        beta = tuple(sorted((Fraction(b) for b in self.beta), reverse=True))
        if any(x <= 0 for x in alpha + beta):
            raise PaintboxError("Frequencies must be positive")
        if sum(alpha) + sum(beta) > 1:
            raise PaintboxError("Frequencies must sum to at most 1")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def gamma(self) -> Fraction:
        return 1 - sum(self.alpha) - sum(self.beta)


@dataclass(frozen=True)
class OrientedPaintbox:
    intervals: Tuple[Interval, ...] = ()

    def __post_init__(self):
        intervals = tuple(self.intervals)
        for previous, current in zip(intervals, intervals[1:]):
            if current.left < previous.left:
                raise PaintboxError("Intervals must be sorted by left endpoint")
            if current.left < previous.right:
                raise PaintboxError(
                    f"Intervals ]{previous.left}, {previous.right}[ and "
                    f"]{current.left}, {current.right}[ overlap"
                )
        object.__setattr__(self, "intervals", intervals)

    @classmethod
    def empty(cls) -> "OrientedPaintbox":
        return cls(())

    @classmethod
    def from_triples(
        cls, triples: Iterable[Tuple[Rational, Rational, Union[str, Orientation]]]
    ) -> "OrientedPaintbox":
        """Build from ``(left, right, orientation)`` triples in any order."""
        intervals = [
            Interval(Fraction(left), Fraction(right), Orientation(orientation))
            for left, right, orientation in triples
        ]
        return cls(tuple(sorted(intervals, key=lambda interval: interval.left)))

    @classmethod
    def equispaced(
        cls, a: int, orientation: Orientation = Orientation.UP
    ) -> "OrientedPaintbox":
        """Division of ``]0, 1[`` into ``a`` equal intervals (the a-shuffle box)."""
        if a < 1:
            raise PaintboxError(f"Need at least one interval, got {a}")
        return cls(
            tuple(Interval(Fraction(i, a), Fraction(i + 1, a), orientation) for i in range(a))
        )

    @classmethod
    def bi_interval(cls, phi: Rational) -> "OrientedPaintbox":
        """A down-interval ``]0, phi[`` followed by an up-interval ``]phi, 1[``."""
        phi = Fraction(phi)
        if not 0 < phi < 1:
            raise PaintboxError(f"Bi-interval split point must be in ]0, 1[, got {phi}")
        return cls(
            (
                Interval(Fraction(0), phi, Orientation.DOWN),
                Interval(phi, Fraction(1), Orientation.UP),
            )
        )

    def __len__(self) -> int:
        return len(self.intervals)

    @property
    def up(self) -> Tuple[Interval, ...]:
        return tuple(i for i in self.intervals if i.orientation is Orientation.UP)

    @property
    def down(self) -> Tuple[Interval, ...]:
        return tuple(i for i in self.intervals if i.orientation is Orientation.DOWN)

    @property
    def total_length(self) -> Fraction:
        return sum((interval.length for interval in self.intervals), Fraction(0))

    @property
    def gamma(self) -> Fraction:
        return 1 - self.total_length

    @property
    def is_finitary(self) -> bool:
        return self.total_length == 1

    def endpoints(self) -> List[Fraction]:
        points = set()
        for interval in self.intervals:
            points.update((interval.left, interval.right))
        return sorted(points)

    def gaps(self) -> List[Tuple[Fraction, Fraction]]:
        """Complementary segments of positive length, left to right."""
        return [(s.left, s.right) for s in self.segments() if s.is_gap]

    def segments(self) -> List[Segment]:
        """Intervals and positive-length gaps of ``[0, 1]`` in spatial order."""
        pieces = []
        cursor = Fraction(0)
        for interval in self.intervals:
            if interval.left > cursor:
                pieces.append(Segment(cursor, interval.left, None))
            pieces.append(Segment(interval.left, interval.right, interval.orientation))
            cursor = interval.right
        if cursor < 1:
            pieces.append(Segment(cursor, Fraction(1), None))
        return pieces

    def locate(self, x) -> Optional[int]:
        """Index of the interval containing ``x``, or ``None`` for the complement."""
        lo, hi = 0, len(self.intervals)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.intervals[mid].right <= x:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self.intervals) and self.intervals[lo].contains(x):
            return lo
        return None

    def mirror(self) -> "OrientedPaintbox":
        """Reflect ``x -> 1 - x`` and swap orientations."""
        return OrientedPaintbox(
            tuple(
                Interval(1 - interval.right, 1 - interval.left, interval.orientation.flipped())
                for interval in reversed(self.intervals)
            )
        )

    def truncate(self, epsilon: Rational) -> "OrientedPaintbox":
        """Delete all interval components of length at most ``epsilon``."""
        epsilon = Fraction(epsilon)
        return OrientedPaintbox(tuple(i for i in self.intervals if i.length > epsilon))

    def __str__(self) -> str:
        return format_paintbox(self).strip().replace("\n", "; ")


def rank(paintbox: OrientedPaintbox) -> RankedFrequencies:
    """Project a paintbox to the sorted lengths of its up- and down-intervals."""
    return RankedFrequencies(
        alpha=tuple(interval.length for interval in paintbox.up),
        beta=tuple(interval.length for interval in paintbox.down),
    )


def _complement(intervals: Sequence[Interval]) -> List[Tuple[Fraction, Fraction]]:
    """Closed segments of ``[0, 1]`` left uncovered by ``intervals`` (points allowed)."""
    pieces = []
    cursor = Fraction(0)
    for interval in intervals:
        pieces.append((cursor, interval.left))
        cursor = interval.right
    pieces.append((cursor, Fraction(1)))
    return pieces


def _distance_to_complement(x: Fraction, holes: Sequence[Interval], lefts: Sequence[Fraction]) -> Fraction:
    i = bisect.bisect_right(lefts, x) - 1
    if i >= 0 and holes[i].contains(x):
        return min(x - holes[i].left, holes[i].right - x)
    return Fraction(0)


def _directed_hausdorff(holes_a: Sequence[Interval], holes_b: Sequence[Interval]) -> Fraction:
    """``sup`` over ``x`` in the complement of ``holes_b`` of the distance to that of ``holes_a``."""
    target = _complement(holes_b)
    starts = [a for a, _ in target]
    candidates = [x for segment in target for x in segment]
    for hole in holes_a:
        middle = (hole.left + hole.right) / 2
        i = bisect.bisect_right(starts, middle) - 1
        if target[i][0] <= middle <= target[i][1]:
            candidates.append(middle)
    lefts = [hole.left for hole in holes_a]
    return max(_distance_to_complement(x, holes_a, lefts) for x in candidates)


def _hausdorff(holes_a: Sequence[Interval], holes_b: Sequence[Interval]) -> Fraction:
    return max(
        _directed_hausdorff(holes_a, holes_b), _directed_hausdorff(holes_b, holes_a)
    )


def paintbox_distance(a: OrientedPaintbox, b: OrientedPaintbox) -> Fraction:
    """
    Hausdorff-type distance between two paintboxes.

    The smallest ``theta`` such that the ``theta``-inflation of each of the
    closed sets ``[0,1] \\ U_up`` and ``[0,1] \\ U_down`` of one paintbox covers
    the corresponding set of the other, in both directions.
    """
    return max(_hausdorff(a.up, b.up), _hausdorff(a.down, b.down))


def parse_paintbox(
    text: str, path: Optional[Union[str, Path]] = None
) -> OrientedPaintbox:
    """
    Parse the text format: one ``left right orientation`` line per interval.

    Rationals are written ``p/q``; blank lines and ``#`` comments are ignored;
    the empty paintbox is written as the single keyword ``empty``.
    """
    intervals: List[Interval] = []
    saw_empty = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower() == "empty":
            saw_empty = True
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise PaintboxFormatError(
                f"expected 'left right orientation', got {line!r}", number, path
            )
        try:
            interval = Interval(Fraction(tokens[0]), Fraction(tokens[1]), Orientation(tokens[2].lower()))
        except (ValueError, ZeroDivisionError) as error:
            raise PaintboxFormatError(str(error), number, path)
        if intervals and interval.left < intervals[-1].left:
            raise PaintboxFormatError("lines must be sorted by left endpoint", number, path)
        if intervals and interval.left < intervals[-1].right:
            raise PaintboxFormatError("interval overlaps the previous one", number, path)
        intervals.append(interval)
    if saw_empty and intervals:
        raise PaintboxFormatError("'empty' cannot be combined with intervals", None, path)
    if not saw_empty and not intervals:
        raise PaintboxFormatError("no intervals found", None, path)
    return OrientedPaintbox(tuple(intervals))


def read_paintbox(path: Union[str, Path]) -> OrientedPaintbox:
    path = Path(path)
    return parse_paintbox(path.read_text(encoding="utf-8"), path=path)


def format_paintbox(paintbox: OrientedPaintbox) -> str:
    if not paintbox.intervals:
        return "empty\n"
    return "".join(
        f"{interval.left} {interval.right} {interval.orientation.value}\n"
        for interval in paintbox.intervals
    )
