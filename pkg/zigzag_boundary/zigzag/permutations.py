"""Permutations in one-row notation and their descent statistics."""

import itertools
from collections import defaultdict
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterable, List, Sequence, Tuple

from zigzag_boundary.exceptions import PermutationError
from zigzag_boundary.zigzag.compositions import Composition

Permutation = Tuple[int, ...]


def as_permutation(values: Iterable[int]) -> Permutation:
    """Validate that ``values`` is a bijection of ``[n]`` and return it as a tuple."""
    values = tuple(values)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise PermutationError(f"{values} is not a permutation of [{len(values)}]")
    return values


def parse_permutation(text: str) -> Permutation:
    """
    Parse one-row notation: ``"13842567"`` for n <= 9, comma separated otherwise.
    """
    text = text.strip()
    if "," in text or " " in text:
        tokens = text.replace(",", " ").split()
    else:
        tokens = list(text)
    try:
        return as_permutation(int(token) for token in tokens)
    except ValueError:
        raise PermutationError(f"Cannot parse permutation from {text!r}")


def format_permutation(permutation: Sequence[int]) -> str:
    if len(permutation) <= 9:
        return "".join(str(value) for value in permutation)
    return ",".join(str(value) for value in permutation)


def descent_set(permutation: Sequence[int]) -> FrozenSet[int]:
    """Positions ``j`` (1-based) with ``pi(j) > pi(j+1)``."""
    return frozenset(
        j + 1 for j in range(len(permutation) - 1) if permutation[j] > permutation[j + 1]
    )


def zigzag_shape(permutation: Sequence[int]) -> Composition:
    """Lengths of the maximal increasing runs of the permutation."""
    return Composition.from_descents(descent_set(permutation), len(permutation))


def inverse(permutation: Sequence[int]) -> Permutation:
    result = [0] * len(permutation)
    for position, value in enumerate(permutation, start=1):
        result[value - 1] = position
    return tuple(result)


def shape_from_inverse(inverse_permutation: Sequence[int]) -> Composition:
    """
    Zigzag shape of ``pi`` read off ``pi^-1``.

    Splits ``pi^-1`` into maximal subsequences of consecutive integers appearing
    left to right; for ``15246783`` these are ``123, 4, 5678``, so the shape of
    ``13842567`` is ``(3, 1, 4)``.
    """
    where = {value: index for index, value in enumerate(inverse_permutation)}
    n = len(inverse_permutation)
    breaks = [k for k in range(1, n) if where[k + 1] < where[k]]
    return Composition.from_descents(breaks, n)


def restrict(permutation: Sequence[int], j: int) -> Permutation:
    """Remove the value ``j`` and rank the remaining values (the map tau_j)."""
    n = len(permutation)
    if not 1 <= j <= n:
        raise PermutationError(f"Cannot remove {j} from a permutation of [{n}]")
    return tuple(v - 1 if v > j else v for v in permutation if v != j)


def extensions(permutation: Sequence[int]) -> List[Permutation]:
    """The ``n + 1`` permutations obtained by inserting ``n + 1`` in every slot."""
    top = len(permutation) + 1
    values = tuple(permutation)
    return [values[:slot] + (top,) + values[slot:] for slot in range(top)]


def permutations_of(n: int) -> Iterable[Permutation]:
    return itertools.permutations(range(1, n + 1))


def restriction_law(
    probability: Callable[[Composition], Fraction], n: int, j: int
) -> Dict[Permutation, Fraction]:
    """
    Exact pushforward of ``P(Pi_n = pi) = probability(zs(pi))`` under ``tau_j``.

    Parameters
    ----------
    probability : callable
        Probability function on zigzags of size ``n``.
    n : int
        Size of the permutations; all of ``S_n`` is enumerated.
    j : int
        Value removed by the restriction.

    Returns
    -------
    dict
        Law of ``tau_j(Pi_n)`` keyed by permutations of ``[n - 1]``.
    """
    law: Dict[Permutation, Fraction] = defaultdict(Fraction)
    for permutation in permutations_of(n):
        law[restrict(permutation, j)] += probability(zigzag_shape(permutation))
    return dict(law)
