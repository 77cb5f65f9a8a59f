"""
Compositions, zigzag diagrams and their binary-word encoding.

A composition ``(3, 1, 4)`` is drawn as a zigzag whose j-th row holds
``parts[j]`` boxes, each row starting below the last box of the previous one.
Boxes are enumerated left to right, top to bottom, and the binary word records
for each pair of consecutive boxes whether they share a row (``+``) or a
column (``-``).
"""

import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Tuple

from zigzag_boundary.exceptions import CompositionError

PLUS = "+"
MINUS = "-"

BinaryWord = str


@dataclass(frozen=True, order=True)
class Composition:
    """
    A composition of ``size`` into strictly positive parts.

    Instances are immutable value objects; the dataclass ordering compares the
    ``parts`` tuples, which gives the lexicographic order used to iterate over
    a level of the graph.
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for part in parts:
            if isinstance(part, bool) or not isinstance(part, int) or part < 1:
                raise CompositionError(
                    f"Composition parts must be positive integers, got {parts}"
                )
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse the comma-separated form ``"3,1,4"``; ``""`` is the empty one."""
        text = text.strip()
        if text in ("", "()", "-", "empty"):
            return cls(())
        try:
            parts = tuple(int(token) for token in text.strip("()").split(","))
        except ValueError:
            raise CompositionError(f"Cannot parse composition from {text!r}")
        return cls(parts)

    @classmethod
    def from_word(cls, word: BinaryWord) -> "Composition":
        return from_word(word)

    @classmethod
    def from_descents(cls, descents: Iterable[int], size: int) -> "Composition":
        """Composition of ``size`` whose partial sums (except the last) are ``descents``."""
        cuts = sorted(set(descents))
        if cuts and (cuts[0] < 1 or cuts[-1] >= size):
            raise CompositionError(f"Descents {cuts} out of range for size {size}")
        if size == 0:
            return cls(())
        bounds = [0] + cuts + [size]
        return cls(tuple(b - a for a, b in zip(bounds, bounds[1:])))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def is_row(self) -> bool:
        return len(self.parts) <= 1

    @property
    def is_column(self) -> bool:
        return all(part == 1 for part in self.parts)

    @property
    def is_hook(self) -> bool:
        """True for ``(1^l, k+1)``, the shapes supported by a bi-interval."""
        return all(part == 1 for part in self.parts[:-1])

    def to_word(self) -> BinaryWord:
        return to_word(self)

    def conjugate(self) -> "Composition":
        return conjugate(self)

    def descents(self) -> FrozenSet[int]:
        """Partial sums of all parts but the last, i.e. the descent set."""
        return frozenset(itertools.accumulate(self.parts[:-1]))

    def clusters(self) -> List[Tuple[str, int]]:
        """Maximal runs of equal letters of the word, as ``(letter, length)``."""
        return [
            (letter, len(list(group)))
            for letter, group in itertools.groupby(self.to_word())
        ]

    def slice(self, start: int, stop: int) -> "Composition":
        """The sub-zigzag formed by boxes ``start + 1, ..., stop``."""
        if not 0 <= start <= stop <= self.size:
            raise CompositionError(
                f"Box range ({start}, {stop}] outside a zigzag of size {self.size}"
            )
        if start == stop:
            return Composition(())
        return from_word(self.to_word()[start : stop - 1])

    def split(self, position: int) -> Tuple["Composition", "Composition"]:
        """Split into the first ``position`` boxes and the remaining ones."""
        return self.slice(0, position), self.slice(position, self.size)


EMPTY = Composition(())


def to_word(composition: Composition) -> BinaryWord:
    """
    Encode a zigzag as a word over ``{+, -}`` of length ``size - 1``.

    The empty composition is mapped to the empty word by convention, like the
    one-box zigzag.
    """
    return MINUS.join(PLUS * (part - 1) for part in composition.parts)


def from_word(word: BinaryWord) -> Composition:
    """Inverse of :func:`to_word`; the empty word gives the one-box zigzag."""
    if set(word) - {PLUS, MINUS}:
        raise CompositionError(f"Binary words are made of '+' and '-', got {word!r}")
    return Composition(tuple(len(run) + 1 for run in word.split(MINUS)))


def flip(word: BinaryWord) -> BinaryWord:
    return word.translate(str.maketrans({PLUS: MINUS, MINUS: PLUS}))


def conjugate(composition: Composition) -> Composition:
    """Reflect the zigzag about the bisectrix: reverse and flip its word."""
    if composition.is_empty:
        return composition
    return from_word(flip(composition.to_word())[::-1])


def compositions(size: int) -> List[Composition]:
    """All ``2^(size-1)`` compositions of ``size`` in lexicographic order."""
    if size < 0:
        raise CompositionError(f"Negative size {size}")
    if size == 0:
        return [EMPTY]
    return sorted(
        from_word("".join(letters))
        for letters in itertools.product((PLUS, MINUS), repeat=size - 1)
    )


def is_partition(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def transpose_partition(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    """Conjugate partition (transposed Young diagram)."""
    if not is_partition(parts):
        raise CompositionError(f"{parts} is not a partition")
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0] if parts else 0))
