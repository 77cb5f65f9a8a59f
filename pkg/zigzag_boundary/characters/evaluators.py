"""
Characters of QSym evaluated on the fundamental basis.

A character is represented by its values ``p(lambda) = psi(F_lambda)`` on
compositions. Paintbox characters are assembled by M-mixing the two
elementary characters (one per interval) with the uniform character (one per
gap of the complement), each weighted by the length of its piece.
"""

import enum
import functools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple, Union

from zigzag_boundary.characters.paintbox import Orientation, OrientedPaintbox
from zigzag_boundary.exceptions import CharacterError
from zigzag_boundary.qsym.algebra import Basis, QSymElement, m_to_f
from zigzag_boundary.zigzag.compositions import Composition, compositions
from zigzag_boundary.zigzag.graph import dimension, successors

logger = logging.getLogger(__name__)

Rule = Callable[[Composition], Fraction]


class Provenance(enum.Enum):
    PAINTBOX = "paintbox"
    ELEMENTARY = "elementary"
    MIXED = "mixed"
    CLOSED_FORM = "closed-form"


@dataclass(frozen=True, eq=False)
class CharacterEvaluator:
    """
    A probability function on compositions, ``lambda -> psi(F_lambda)``.

    Calls are memoized per instance; the cache only ever stores values the
    rule would recompute identically.
    """

    rule: Rule
    provenance: Provenance
    label: str = ""
    _cache: Dict[Composition, Fraction] = field(
        default_factory=dict, init=False, repr=False
    )

    def __call__(self, lam: Composition) -> Fraction:
        value = self._cache.get(lam)
        if value is None:
            value = Fraction(self.rule(lam))
            self._cache[lam] = value
        return value

    def __str__(self) -> str:
        return self.label or self.provenance.value


def elementary_plus() -> CharacterEvaluator:
    """``psi_+``: one on one-row zigzags (including the empty one), zero elsewhere."""
    return CharacterEvaluator(
        lambda lam: Fraction(int(lam.is_row)), Provenance.ELEMENTARY, "psi+"
    )


def elementary_minus() -> CharacterEvaluator:
    """``psi_-``: one on one-column zigzags, zero elsewhere."""
    return CharacterEvaluator(
        lambda lam: Fraction(int(lam.is_column)), Provenance.ELEMENTARY, "psi-"
    )


def uniform_character() -> CharacterEvaluator:
    """The character of the uniform random permutation, ``p(lambda) = 1/|lambda|!``."""
    return CharacterEvaluator(
        lambda lam: Fraction(1, math.factorial(lam.size)), Provenance.CLOSED_FORM, "uniform"
    )


def _mix_value(
    factors: Sequence[CharacterEvaluator], weights: Sequence[Fraction], lam: Composition
) -> Fraction:
    n = lam.size
    # reach[i]: total weight of the ways the factors seen so far consume boxes 1..i
    reach = [Fraction(0)] * (n + 1)
    reach[0] = Fraction(1)
    for factor, weight in zip(factors, weights):
        step = [Fraction(0)] * (n + 1)
        for start, carried in enumerate(reach):
            if not carried:
                continue
            for stop in range(start, n + 1):
                value = factor(lam.slice(start, stop))
                if value:
                    step[stop] += carried * weight ** (stop - start) * value
        reach = step
    return reach[n]


def m_mix(
    factors: Sequence[CharacterEvaluator],
    weights: Sequence[Union[int, str, Fraction]],
    label: str = "",
) -> CharacterEvaluator:
    """
    M-mixture of characters.

    ``psi(F_lambda)`` is the sum over ordered splittings of ``lambda`` into
    ``k`` consecutive sub-zigzags of ``prod w_j^{|lambda(j)|} psi_j(F_lambda(j))``.

    Parameters
    ----------
    factors : sequence of CharacterEvaluator
        The characters being mixed, in order.
    weights : sequence of rationals
        Nonnegative weights summing to one, one per factor.
    label : str, optional
        Description carried by the resulting evaluator.

    Returns
    -------
    CharacterEvaluator
    """
    factors = tuple(factors)
    weights = tuple(Fraction(w) for w in weights)
    if len(factors) != len(weights):
        raise CharacterError(f"{len(factors)} factors but {len(weights)} weights")
    if any(w < 0 for w in weights):
        raise CharacterError("Mixing weights must be nonnegative")
    if sum(weights) != 1:
        raise CharacterError(f"Mixing weights sum to {sum(weights)}, not 1")
    return CharacterEvaluator(
        functools.partial(_mix_value, factors, weights),
        Provenance.MIXED,
        label or "mix(" + ", ".join(f"{w}:{f}" for f, w in zip(factors, weights)) + ")",
    )


def mixture(
    evaluators: Sequence[CharacterEvaluator], weights: Sequence[Union[int, str, Fraction]]
) -> CharacterEvaluator:
    """Convex combination ``sum c_i p_i`` (the law of a randomly chosen paintbox)."""
    evaluators = tuple(evaluators)
    weights = tuple(Fraction(w) for w in weights)
    if len(evaluators) != len(weights) or sum(weights) != 1 or any(w < 0 for w in weights):
        raise CharacterError("Mixture weights must be nonnegative, one per evaluator, summing to 1")
    return CharacterEvaluator(
        lambda lam: sum((c * e(lam) for e, c in zip(evaluators, weights)), Fraction(0)),
        Provenance.MIXED,
        "mixture",
    )


@functools.lru_cache(maxsize=128)
def paintbox_character(paintbox: OrientedPaintbox) -> CharacterEvaluator:
    """
    The character of an oriented paintbox.

    Pieces of ``[0, 1]`` are visited left to right: up-intervals contribute
    ``psi_+``, down-intervals ``psi_-`` and gaps of positive length the uniform
    character, each weighted by its length.
    """
    plus, minus, uniform = elementary_plus(), elementary_minus(), uniform_character()
    factors: List[CharacterEvaluator] = []
    weights: List[Fraction] = []
    for segment in paintbox.segments():
        if segment.is_gap:
            factors.append(uniform)
        elif segment.orientation is Orientation.UP:
            factors.append(plus)
        else:
            factors.append(minus)
        weights.append(segment.length)
    logger.debug("paintbox character with %d factors", len(factors))
    mixed = m_mix(factors, weights)
    return CharacterEvaluator(mixed.rule, Provenance.PAINTBOX, str(paintbox) or "empty")


def evaluate(paintbox: OrientedPaintbox, lam: Composition) -> Fraction:
    """``p(lambda)``, the probability of each permutation of shape ``lambda``."""
    return paintbox_character(paintbox)(lam)


@dataclass
class RecursionReport:
    depth: int
    checked: int = 0
    normalized: bool = True
    failures: List[Tuple[Composition, Fraction, Fraction]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.normalized and not self.failures

    def __bool__(self) -> bool:
        return self.passed


def check_recursion(evaluator: CharacterEvaluator, depth: int) -> RecursionReport:
    """
    Verify ``p(empty) = 1`` and ``p(mu) = sum p(lambda)`` over successors for ``|mu| < depth``.

    Failures are collected as ``(mu, p(mu), sum over successors)`` triples.
    """
    if depth < 1:
        raise CharacterError(f"Recursion depth must be at least 1, got {depth}")
    report = RecursionReport(depth=depth)
    report.normalized = evaluator(Composition(())) == 1
    for size in range(depth):
        for mu in compositions(size):
            expected = evaluator(mu)
            total = sum((evaluator(lam) for lam in successors(mu)), Fraction(0))
            report.checked += 1
            if expected != total:
                report.failures.append((mu, expected, total))
    logger.debug(
        "recursion check of %s to depth %d: %d checked, %d failures",
        evaluator, depth, report.checked, len(report.failures),
    )
    return report


def evaluate_qsym(evaluator: CharacterEvaluator, a: QSymElement) -> Fraction:
    """Linear extension of ``evaluator``; M-basis input is converted first."""
    if a.basis is Basis.M:
        a = m_to_f(a)
    return sum((c * evaluator(lam) for lam, c in a.items()), Fraction(0))


def shape_pmf(
    character: Union[CharacterEvaluator, OrientedPaintbox], n: int
) -> Dict[Composition, Fraction]:
    """Law of ``zs(Pi_n)``: ``lambda -> d(lambda) p(lambda)`` over level ``n``."""
    if isinstance(character, OrientedPaintbox):
        character = paintbox_character(character)
    return {lam: dimension(lam) * character(lam) for lam in compositions(n)}


def a_shuffle_pmf(n: int, k: int, a: int) -> Fraction:
    """
    Probability of one permutation with ``k - 1`` descents after an a-shuffle.

    Equals ``C(n + a - k, n) / a^n``.
    """
    if not 1 <= k <= n:
        raise CharacterError(f"Need 1 <= k <= n, got k={k}, n={n}")
    if a < 1:
        raise CharacterError(f"Need a >= 1, got {a}")
    return Fraction(math.comb(n + a - k, n), a**n)


def a_shuffle_character(a: int) -> CharacterEvaluator:
    """Closed form of the equispaced ``a``-interval up paintbox."""
    if a < 1:
        raise CharacterError(f"Need a >= 1, got {a}")

    def rule(lam: Composition) -> Fraction:
        if lam.is_empty:
            return Fraction(1)
        return a_shuffle_pmf(lam.size, len(lam), a)

    return CharacterEvaluator(rule, Provenance.CLOSED_FORM, f"{a}-shuffle")


def bi_interval_character(phi: Union[str, Fraction]) -> CharacterEvaluator:
    """Closed form ``phi^l (1 - phi)^k`` on hooks ``(1^l, k + 1)``, zero off hooks."""
    phi = Fraction(phi)
    if not 0 <= phi <= 1:
        raise CharacterError(f"Need 0 <= phi <= 1, got {phi}")

    def rule(lam: Composition) -> Fraction:
        if lam.is_empty:
            return Fraction(1)
        if not lam.is_hook:
            return Fraction(0)
        legs = len(lam) - 1
        return phi**legs * (1 - phi) ** (lam.parts[-1] - 1)

    return CharacterEvaluator(rule, Provenance.CLOSED_FORM, f"bi-interval({phi})")


@functools.lru_cache(maxsize=None)
def _eulerian_by_descents(n: int, m: int) -> int:
    if m < 0 or m >= max(n, 1):
        return int(n == 0 and m == 0)
    if n == 1:
        return 1
    return (m + 1) * _eulerian_by_descents(n - 1, m) + (n - m) * _eulerian_by_descents(n - 1, m - 1)


def eulerian_number(n: int, k: int) -> int:
    """Number of permutations of ``[n]`` with ``k - 1`` descents."""
    if not 1 <= k <= n:
        raise CharacterError(f"Need 1 <= k <= n, got k={k}, n={n}")
    return _eulerian_by_descents(n, k - 1)

