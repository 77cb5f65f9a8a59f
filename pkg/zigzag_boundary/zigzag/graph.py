"""
The graded graph of zigzag diagrams.

Level ``n`` holds the ``2^(n-1)`` compositions of ``n``; ``mu -> lambda`` is an
edge when ``lambda`` is the shape of an extension of a permutation of shape
``mu``. In word form, ``w(mu)`` is obtained from ``w(lambda)`` by deleting one
letter (subword order).
"""

import functools
import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List

from zigzag_boundary.exceptions import CompositionError
from zigzag_boundary.zigzag.compositions import EMPTY, Composition, from_word

logger = logging.getLogger(__name__)


def successors(mu: Composition) -> List[Composition]:
    """
    The ``|mu| + 1`` immediate followers of ``mu``.

    Increment one part; prepend a part 1; or split a part into two positive
    parts and increment the first of them.
    """
    if mu.is_empty:
        return [Composition((1,))]
    parts = mu.parts
    followers = []
    for j in range(len(parts)):
        followers.append(Composition(parts[:j] + (parts[j] + 1,) + parts[j + 1 :]))
    followers.append(Composition((1,) + parts))
    for j, part in enumerate(parts):
        for head in range(1, part):
            followers.append(
                Composition(parts[:j] + (head + 1, part - head) + parts[j + 1 :])
            )
    return followers


def predecessors(lam: Composition) -> List[Composition]:
    """All distinct ``mu`` with ``mu -> lambda``, in lexicographic order."""
    if lam.is_empty:
        raise CompositionError("The empty zigzag has no predecessors")
    if lam.size == 1:
        return [EMPTY]
    word = lam.to_word()
    return sorted({from_word(word[:i] + word[i + 1 :]) for i in range(len(word))})


def is_edge(mu: Composition, lam: Composition) -> bool:
    return lam.size == mu.size + 1 and mu in predecessors(lam)


@functools.lru_cache(maxsize=None)
def dimension(lam: Composition) -> int:
    """
    Number of standard paths from the root to ``lambda``.

    Equals the number of permutations of ``[|lambda|]`` with zigzag shape
    ``lambda``. Computed by ``d(lambda) = sum d(mu)`` over predecessors.
    """
    if lam.is_empty:
        return 1
    return sum(dimension(mu) for mu in predecessors(lam))


def paths_down(lam: Composition, floor: int = 0) -> Dict[Composition, int]:
    """
    Table of ``d(nu, lambda)`` for every ``nu`` below ``lambda``.

    Walks down from ``lambda`` level by level through predecessors, so only
    zigzags whose word is a subword of ``w(lambda)`` are ever visited.

    Parameters
    ----------
    lam : Composition
        Top vertex.
    floor : int
        Lowest level kept in the table.

    Returns
    -------
    dict
        Number of ascending chains ``nu -> ... -> lambda`` for each ``nu`` with
        ``floor <= |nu| <= |lambda|``.
    """
    table = {lam: 1}
    level = {lam: 1}
    for size in range(lam.size, max(floor, 1), -1):
        below: Dict[Composition, int] = defaultdict(int)
        for kappa, count in level.items():
            for nu in predecessors(kappa):
                below[nu] += count
        logger.debug("paths_down(%s): %d vertices at level %d", lam, len(below), size - 1)
        table.update(below)
        level = below
    if floor == 0 and not lam.is_empty:
        # the root has the single edge to (1)
        table[EMPTY] = table[Composition((1,))]
    return table


def path_count(mu: Composition, lam: Composition) -> int:
    """Number of ascending chains ``mu -> ... -> lambda`` (zero if none)."""
    if mu.size > lam.size:
        raise CompositionError(f"|{mu}| exceeds |{lam}|")
    if mu.size == lam.size:
        return int(mu == lam)
    return paths_down(lam, floor=mu.size).get(mu, 0)


def martin_kernel(mu: Composition, lam: Composition) -> Fraction:
    """The fraction ``d(mu, lambda) / d(lambda)`` of standard paths through ``mu``."""
    return Fraction(path_count(mu, lam), dimension(lam))


def transition_probability(mu: Composition, lam: Composition) -> Fraction:
    """Inverse-time transition ``P(X_{n-1} = mu | X_n = lambda)``."""
    if not is_edge(mu, lam):
        return Fraction(0)
    return Fraction(dimension(mu), dimension(lam))
