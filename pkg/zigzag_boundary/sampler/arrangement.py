"""Arrangement prefixes stored as initial-rank streams."""

import bisect
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy

from zigzag_boundary.exceptions import PermutationError
from zigzag_boundary.zigzag.compositions import Composition
from zigzag_boundary.zigzag.permutations import Permutation, as_permutation, zigzag_shape


class _FreeSlots:
    """Fenwick tree over ``n`` slots answering "position of the r-th free slot"."""

    def __init__(self, n: int):
        self.n = n
        self.tree = [0] * (n + 1)
        for i in range(1, n + 1):
            self.tree[i] += 1
            parent = i + (i & -i)
            if parent <= n:
                self.tree[parent] += self.tree[i]
        self.top = 1 << (n.bit_length() - 1) if n else 0

    def take(self, rank: int) -> int:
        """Occupy and return (1-based) the ``rank``-th free slot."""
        position, step = 0, self.top
        while step:
            following = position + step
            if following <= self.n and self.tree[following] < rank:
                position = following
                rank -= self.tree[following]
            step >>= 1
        slot = position + 1
        i = slot
        while i <= self.n:
            self.tree[i] -= 1
            i += i & -i
        return slot


@dataclass(frozen=True)
class ArrangementPrefix:
    """
    The coherent permutations ``Pi_1, ..., Pi_n`` of an arrangement.

    ``initial_ranks[k-1]`` is the position of ``k`` in ``Pi_k``.
    """

    initial_ranks: Tuple[int, ...]

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.initial_ranks)
        for k, r in enumerate(ranks, start=1):
            if not 1 <= r <= k:
                raise PermutationError(f"Initial rank r_{k} = {r} outside [1, {k}]")
        object.__setattr__(self, "initial_ranks", ranks)

    @property
    def n(self) -> int:
        return len(self.initial_ranks)

    def permutation(self, k: Optional[int] = None) -> Permutation:
        """``Pi_k`` in one-row notation (``Pi_n`` by default)."""
        k = self.n if k is None else k
        if not 0 <= k <= self.n:
            raise PermutationError(f"Prefix of length {self.n} has no Pi_{k}")
        slots = _FreeSlots(k)
        values = [0] * k
        for value in range(k, 0, -1):
            values[slots.take(self.initial_ranks[value - 1]) - 1] = value
        return tuple(values)

    def permutations(self) -> List[Permutation]:
        full = numpy.asarray(self.permutation())
        return [tuple(int(v) for v in full[full <= k]) for k in range(1, self.n + 1)]

    def shape(self, k: Optional[int] = None) -> Composition:
        return zigzag_shape(self.permutation(k))

    def truncate(self, k: int) -> "ArrangementPrefix":
        return ArrangementPrefix(self.initial_ranks[:k])

    @classmethod
    def from_permutation(cls, permutation: Sequence[int]) -> "ArrangementPrefix":
        """Initial ranks of the unique prefix ending in ``permutation``."""
        permutation = as_permutation(permutation)
        where = {value: position for position, value in enumerate(permutation)}
        seen: List[int] = []
        ranks = []
        for value in range(1, len(permutation) + 1):
            position = where[value]
            ranks.append(bisect.bisect_left(seen, position) + 1)
            bisect.insort(seen, position)
        return cls(tuple(ranks))


def restrict_to(permutation: numpy.ndarray, k: int) -> numpy.ndarray:
    """``Pi_k`` from ``Pi_n`` by keeping the values ``<= k`` in place."""
    return permutation[permutation <= k]


def is_coherent(permutations: Sequence[Sequence[int]]) -> bool:
    """True when each permutation is the restriction of the next one."""
    for smaller, larger in zip(permutations, permutations[1:]):
        k = len(smaller)
        if tuple(v for v in larger if v <= k) != tuple(smaller):
            return False
    return True
