"""
Character values on symmetric-function generators.

The restriction of a paintbox character to Sym only depends on the ranked
frequencies ``(alpha, beta)``; its values on the complete homogeneous
functions are the coefficients of
``H(t) = exp(gamma t) prod(1 + beta_j t) / prod(1 - alpha_i t)``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import sympy

from zigzag_boundary.characters.evaluators import CharacterEvaluator
from zigzag_boundary.characters.paintbox import RankedFrequencies
from zigzag_boundary.exceptions import CharacterError, CompositionError
from zigzag_boundary.zigzag.compositions import Composition, is_partition

logger = logging.getLogger(__name__)

SERIES_ORDER = 12


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series ``c_0 + c_1 t + ... + c_N t^N`` with exact coefficients."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise CharacterError("A truncated series needs at least one coefficient")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @classmethod
    def constant(cls, value, order: int = SERIES_ORDER) -> "TruncatedSeries":
        return cls((Fraction(value),) + (Fraction(0),) * order)

    @classmethod
    def monomial(cls, coefficient, power: int, order: int = SERIES_ORDER) -> "TruncatedSeries":
        values = [Fraction(0)] * (order + 1)
        if power <= order:
            values[power] = Fraction(coefficient)
        return cls(tuple(values))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def _common(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = self._common(other)
        return TruncatedSeries(
            tuple(self[i] + other[i] for i in range(order + 1))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + other.scale_values(-1)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = self._common(other)
        return TruncatedSeries(
            tuple(
                sum((self[i] * other[n - i] for i in range(n + 1)), Fraction(0))
                for n in range(order + 1)
            )
        )

    def scale_values(self, factor) -> "TruncatedSeries":
        factor = Fraction(factor)
        return TruncatedSeries(tuple(factor * c for c in self.coefficients))

    def scale(self, omega) -> "TruncatedSeries":
        """Substitute ``t -> omega t``."""
        omega = Fraction(omega)
        return TruncatedSeries(tuple(c * omega**n for n, c in enumerate(self.coefficients)))

    def exp(self) -> "TruncatedSeries":
        """``exp`` of a series without constant term, via ``n e_n = sum k a_k e_{n-k}``."""
        if self[0] != 0:
            raise CharacterError("exp needs a zero constant term")
        result = [Fraction(1)] + [Fraction(0)] * self.order
        for n in range(1, self.order + 1):
            result[n] = sum((k * self[k] * result[n - k] for k in range(1, n + 1)), Fraction(0)) / n
        return TruncatedSeries(tuple(result))

    def log(self) -> "TruncatedSeries":
        """``log`` of a series with constant term one, via ``n h_n = sum k l_k h_{n-k}``."""
        if self[0] != 1:
            raise CharacterError("log needs constant term 1")
        result = [Fraction(0)] * (self.order + 1)
        for n in range(1, self.order + 1):
            tail = sum((k * result[k] * self[n - k] for k in range(1, n)), Fraction(0))
            result[n] = (n * self[n] - tail) / n
        return TruncatedSeries(tuple(result))


def _frequencies(alpha: Union[RankedFrequencies, Sequence], beta: Sequence = ()) -> RankedFrequencies:
    if isinstance(alpha, RankedFrequencies):
        return alpha
    return RankedFrequencies(tuple(alpha), tuple(beta))


def h_series(frequencies: RankedFrequencies, order: int = SERIES_ORDER) -> TruncatedSeries:
    """The generating series ``H(t)`` truncated at ``t^order``."""
    if order < 0:
        raise CharacterError(f"Negative truncation order {order}")
    series = TruncatedSeries.monomial(frequencies.gamma, 1, order).exp()
    for a in frequencies.alpha:
        # 1 / (1 - a t)
        series = series * TruncatedSeries(tuple(a**n for n in range(order + 1)))
    for b in frequencies.beta:
        series = series * (TruncatedSeries.constant(1, order) + TruncatedSeries.monomial(b, 1, order))
    return series


def h_values(
    alpha: Union[RankedFrequencies, Sequence], order: int = SERIES_ORDER, beta: Sequence = ()
) -> List[Fraction]:
    """``psi(h_0), ..., psi(h_order)`` for the ranked frequencies ``(alpha, beta)``."""
    return list(h_series(_frequencies(alpha, beta), order).coefficients)


def p_values(
    alpha: Union[RankedFrequencies, Sequence], order: int = SERIES_ORDER, beta: Sequence = ()
) -> List[Fraction]:
    """
    ``psi(p_n)`` for ``n = 0..order``; index 0 holds 0.

    ``p_1 = 1`` and ``p_n = sum alpha_i^n + (-1)^(n-1) sum beta_j^n`` beyond.
    """
    frequencies = _frequencies(alpha, beta)
    values = [Fraction(0), Fraction(1)][: order + 1]
    for n in range(2, order + 1):
        values.append(
            sum((a**n for a in frequencies.alpha), Fraction(0))
            + (-1) ** (n - 1) * sum((b**n for b in frequencies.beta), Fraction(0))
        )
    return values


def schur_value(
    alpha: Union[RankedFrequencies, Sequence], shape: Sequence[int], beta: Sequence = ()
) -> Fraction:
    """
    ``psi(s_shape)`` from the Jacobi-Trudi determinant ``det[h_{shape_i - i + j}]``.

    Parameters
    ----------
    alpha : RankedFrequencies or sequence
        Ranked frequencies, or the ``alpha`` part with ``beta`` given separately.
    shape : sequence of int
        A partition.

    Returns
    -------
    Fraction
    """
    shape = tuple(shape)
    if not is_partition(shape):
        raise CompositionError(f"{shape} is not a partition")
    if not shape:
        return Fraction(1)
    h = h_values(_frequencies(alpha, beta), sum(shape) + len(shape))

    def entry(k: int) -> sympy.Rational:
        if k < 0:
            return sympy.Integer(0)
        return sympy.Rational(h[k].numerator, h[k].denominator)

    size = len(shape)
    matrix = sympy.Matrix(size, size, lambda i, j: entry(shape[i] - i + j))
    determinant = sympy.Rational(matrix.det(method="bareiss"))
    logger.debug("Jacobi-Trudi determinant for %s: %s", shape, determinant)
    return Fraction(int(determinant.p), int(determinant.q))


def character_h_series(character: CharacterEvaluator, order: int = SERIES_ORDER) -> TruncatedSeries:
    """``sum psi(F_(n)) t^n``; on Sym, ``F_(n) = h_n``."""
    return TruncatedSeries(
        tuple(character(Composition((n,)) if n else Composition(())) for n in range(order + 1))
    )

