"""
Exact linear algebra in the F (fundamental) and M (monomial) bases of QSym.

Elements are finite maps from compositions to rationals. Products of
fundamental functions are computed by shuffling representative permutations;
comultiplication splits a zigzag into consecutive sub-zigzags.
"""

import enum
import functools
import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from zigzag_boundary.exceptions import BasisError, CharacterError
from zigzag_boundary.zigzag.compositions import Composition, conjugate
from zigzag_boundary.zigzag.permutations import Permutation, zigzag_shape

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
Tensor = Dict[Tuple[Composition, ...], Fraction]


class Basis(enum.Enum):
    F = "F"
    M = "M"


def _sort_key(composition: Composition):
    return composition.size, composition.parts


@dataclass(frozen=True)
class QSymElement:
    """A finite rational combination of ``F_lambda`` (or ``M_lambda``)."""

    basis: Basis
    terms: Mapping[Composition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for composition, coefficient in self.terms.items():
            coefficient = Fraction(coefficient)
            if coefficient:
                cleaned[composition] = coefficient
        ordered = dict(sorted(cleaned.items(), key=lambda item: _sort_key(item[0])))
        object.__setattr__(self, "basis", Basis(self.basis))
        object.__setattr__(self, "terms", ordered)

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    @classmethod
    def zero(cls, basis: Basis = Basis.F) -> "QSymElement":
        return cls(basis, {})

    @classmethod
    def one(cls, basis: Basis = Basis.F) -> "QSymElement":
        return cls(basis, {Composition(()): Fraction(1)})

    @classmethod
    def basis_element(cls, basis: Basis, composition: Composition) -> "QSymElement":
        return cls(basis, {composition: Fraction(1)})

    def coefficient(self, composition: Composition) -> Fraction:
        return self.terms.get(composition, Fraction(0))

    def items(self):
        return self.terms.items()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _combine(self, other: "QSymElement", sign: int) -> "QSymElement":
        if not isinstance(other, QSymElement):
            return NotImplemented
        if other.basis is not self.basis:
            raise BasisError(f"Cannot combine {self.basis.value} and {other.basis.value}")
        terms = defaultdict(Fraction, self.terms)
        for composition, coefficient in other.terms.items():
            terms[composition] += sign * coefficient
        return QSymElement(self.basis, terms)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, scalar: Scalar) -> "QSymElement":
        return QSymElement(self.basis, {c: scalar * v for c, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, QSymElement):
            return f_product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def degrees(self) -> List[int]:
        """Sorted degrees present, with ``deg F_lambda = |lambda|``."""
        return sorted({composition.size for composition in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, degree: int) -> "QSymElement":
        return QSymElement(
            self.basis, {c: v for c, v in self.terms.items() if c.size == degree}
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{coefficient} * {self.basis.value}[{composition}]"
            for composition, coefficient in self.terms.items()
        )


def F(*parts: int) -> QSymElement:
    return QSymElement.basis_element(Basis.F, Composition(parts))


def M(*parts: int) -> QSymElement:
    return QSymElement.basis_element(Basis.M, Composition(parts))


def _require(element: QSymElement, basis: Basis, operation: str):
    if element.basis is not basis:
        raise BasisError(f"{operation} expects the {basis.value} basis, got {element.basis.value}")


def canonical_representative(composition: Composition) -> Permutation:
    """
    Permutation of shape ``composition`` with blocks of values assigned top-down.

    The last run receives ``1..parts[-1]``, the run before it the next block,
    and so on, so descents sit exactly at the run boundaries.
    """
    values: List[int] = []
    top = composition.size
    for part in composition.parts:
        values.extend(range(top - part + 1, top + 1))
        top -= part
    return tuple(values)


def shuffles(left: Sequence[int], right: Sequence[int]) -> Iterable[Permutation]:
    """
    The shuffle set of ``left`` (on ``[k]``) with ``right`` shifted by ``k``.

    Every interleaving keeps the order of ``left`` and of ``k + right``.
    """
    k, size = len(left), len(left) + len(right)
    shifted = [k + value for value in right]
    for slots in itertools.combinations(range(size), k):
        merged = [0] * size
        chosen = set(slots)
        left_iter, right_iter = iter(left), iter(shifted)
        for position in range(size):
            merged[position] = next(left_iter) if position in chosen else next(right_iter)
        yield tuple(merged)


@functools.lru_cache(maxsize=None)
def _pair_product(mu: Composition, nu: Composition) -> Tuple[Tuple[Composition, int], ...]:
    counts: Dict[Composition, int] = defaultdict(int)
    for merged in shuffles(canonical_representative(mu), canonical_representative(nu)):
        counts[zigzag_shape(merged)] += 1
    logger.debug("F[%s] * F[%s]: %d terms", mu, nu, len(counts))
    return tuple(counts.items())


def f_product(a: QSymElement, b: QSymElement) -> QSymElement:
    """Bilinear extension of the shuffle product ``F_mu F_nu``."""
    _require(a, Basis.F, "f_product")
    _require(b, Basis.F, "f_product")
    terms: Dict[Composition, Fraction] = defaultdict(Fraction)
    for mu, x in a.terms.items():
        for nu, y in b.terms.items():
            for lam, count in _pair_product(mu, nu):
                terms[lam] += x * y * count
    return QSymElement(Basis.F, terms)


def comultiply_iterated(a: QSymElement, k: int) -> Tensor:
    """
    The k-fold coproduct as a coefficient map over k-tuples of compositions.

    Each ``F_lambda`` expands over all splittings of ``lambda`` into ``k``
    consecutive, possibly empty, sub-zigzags.
    """
    _require(a, Basis.F, "comultiply")
    if k < 1:
        raise CharacterError(f"Iterated coproduct needs k >= 1, got {k}")
    tensor: Tensor = defaultdict(Fraction)
    for lam, coefficient in a.terms.items():
        for cuts in itertools.combinations_with_replacement(range(lam.size + 1), k - 1):
            bounds = (0,) + cuts + (lam.size,)
            key = tuple(lam.slice(start, stop) for start, stop in zip(bounds, bounds[1:]))
            tensor[key] += coefficient
    return {key: value for key, value in tensor.items() if value}


def comultiply(a: QSymElement) -> Dict[Tuple[Composition, Composition], Fraction]:
    """``delta(F_lambda) = sum F_mu (x) F_nu`` over the ``|lambda| + 1`` splittings."""
    return comultiply_iterated(a, 2)


def tensor_multiply(x: Tensor, y: Tensor) -> Tensor:
    """Componentwise product of two tensors of equal arity."""
    result: Tensor = defaultdict(Fraction)
    for left, a in x.items():
        for right, b in y.items():
            if len(left) != len(right):
                raise BasisError("Tensors of different arity")
            factors = [
                _pair_product(mu, nu) for mu, nu in zip(left, right)
            ]
            for combination in itertools.product(*factors):
                key = tuple(lam for lam, _ in combination)
                weight = 1
                for _, count in combination:
                    weight *= count
                result[key] += a * b * weight
    return {key: value for key, value in result.items() if value}


def involution(a: QSymElement) -> QSymElement:
    """The automorphism ``F_lambda -> F_lambda'`` (conjugate zigzag)."""
    _require(a, Basis.F, "involution")
    return QSymElement(Basis.F, {conjugate(lam): c for lam, c in a.terms.items()})


def refinements(lam: Composition) -> List[Composition]:
    """All compositions refining ``lam`` (including ``lam`` itself)."""
    free = [d for d in range(1, lam.size) if d not in lam.descents()]
    result = []
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            result.append(Composition.from_descents(lam.descents() | set(extra), lam.size))
    return result


def f_to_m(a: QSymElement) -> QSymElement:
    """Expand in the monomial basis: ``F_lambda`` is the sum of ``M_mu`` over refinements."""
    _require(a, Basis.F, "f_to_m")
    terms: Dict[Composition, Fraction] = defaultdict(Fraction)
    for lam, coefficient in a.terms.items():
        for mu in refinements(lam):
            terms[mu] += coefficient
    return QSymElement(Basis.M, terms)


def m_to_f(a: QSymElement) -> QSymElement:
    """
    Inverse of :func:`f_to_m` by triangular elimination.

    ``F_mu`` has leading term ``M_mu`` and otherwise only strictly finer terms,
    so repeatedly peeling off the coarsest remaining term terminates.
    """
    _require(a, Basis.M, "m_to_f")
    remainder = a
    result = QSymElement.zero(Basis.F)
    while remainder:
        mu = min(remainder.terms, key=lambda c: (len(c), c.size, c.parts))
        coefficient = remainder.terms[mu]
        leading = QSymElement.basis_element(Basis.F, mu).scale(coefficient)
        result = result + leading
        remainder = remainder - f_to_m(leading)
    return result
