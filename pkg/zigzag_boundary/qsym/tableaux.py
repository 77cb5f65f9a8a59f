"""Standard Young tableaux and the F-expansion of Schur functions."""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from zigzag_boundary.exceptions import CompositionError
from zigzag_boundary.qsym.algebra import Basis, QSymElement
from zigzag_boundary.zigzag.compositions import Composition, is_partition

Tableau = Tuple[Tuple[int, ...], ...]


def _check_partition(shape: Sequence[int]) -> Tuple[int, ...]:
    shape = tuple(shape)
    if not is_partition(shape):
        raise CompositionError(f"{shape} is not a partition")
    return shape


def standard_tableaux(shape: Sequence[int]) -> Iterator[Tableau]:
    """
    Enumerate the standard Young tableaux of ``shape``.

    Entries ``1..n`` are placed one at a time into any row whose end is a
    corner of the current (partial) diagram.
    """
    shape = _check_partition(shape)
    n = sum(shape)
    rows: List[List[int]] = [[] for _ in shape]

    def place(value: int) -> Iterator[Tableau]:
        if value > n:
            yield tuple(tuple(row) for row in rows)
            return
        for i, target in enumerate(shape):
            filled = len(rows[i])
            if filled == target:
                continue
            if i > 0 and len(rows[i - 1]) <= filled:
                continue
            rows[i].append(value)
            yield from place(value + 1)
            rows[i].pop()

    yield from place(1)


def descent_composition(tableau: Tableau) -> Composition:
    """``i`` is a descent when ``i + 1`` sits in a strictly lower row than ``i``."""
    row_of = {value: r for r, row in enumerate(tableau) for value in row}
    n = len(row_of)
    descents = [i for i in range(1, n) if row_of[i + 1] > row_of[i]]
    return Composition.from_descents(descents, n)


def schur_to_f(shape: Sequence[int]) -> QSymElement:
    """
    Expand the Schur function ``S_shape`` in the fundamental basis.

    Parameters
    ----------
    shape : sequence of int
        A partition (weakly decreasing positive parts).

    Returns
    -------
    QSymElement
        ``sum F_{D(T)}`` over standard tableaux ``T``, with nonnegative integer
        coefficients adding up to the number of tableaux.
    """
    terms: Dict[Composition, Fraction] = defaultdict(Fraction)
    for tableau in standard_tableaux(shape):
        terms[descent_composition(tableau)] += 1
    return QSymElement(Basis.F, terms)
