import math
from fractions import Fraction

import pytest

from tests.oracle import enumerate_by_shape
from zigzag_boundary.characters.evaluators import paintbox_character, uniform_character
from zigzag_boundary.exceptions import PermutationError
from zigzag_boundary.zigzag.compositions import Composition
from zigzag_boundary.zigzag.graph import successors
from zigzag_boundary.zigzag.permutations import (
    as_permutation,
    descent_set,
    extensions,
    format_permutation,
    inverse,
    parse_permutation,
    permutations_of,
    restrict,
    restriction_law,
    shape_from_inverse,
    zigzag_shape,
)

PI_8 = parse_permutation("13842567")


def test_parse_and_format():
    assert PI_8 == (1, 3, 8, 4, 2, 5, 6, 7)
    assert format_permutation(PI_8) == "13842567"
    long = tuple(range(10, 0, -1))
    assert parse_permutation(format_permutation(long)) == long
    assert parse_permutation("3, 1, 2") == (3, 1, 2)


@pytest.mark.parametrize("text", ["112", "124", "1a2"])
def test_parse_rejects_non_permutations(text):
    with pytest.raises(PermutationError):
        parse_permutation(text)


def test_as_permutation_rejects_gaps():
    with pytest.raises(PermutationError):
        as_permutation([0, 1])


def test_descent_set():
    assert descent_set(PI_8) == {3, 4}
    assert descent_set((1, 2, 3, 4)) == frozenset()
    assert descent_set((3, 2, 1)) == {1, 2}


def test_zigzag_shape():
    assert zigzag_shape(PI_8) == Composition.of(3, 1, 4)
    assert zigzag_shape(tuple(range(1, 7))) == Composition.of(6)
    assert zigzag_shape((1, 5, 2, 4, 6, 7, 8, 3)) == Composition.of(2, 5, 1)
    assert zigzag_shape(()) == Composition(())


def test_shape_from_inverse():
    assert inverse(PI_8) == (1, 5, 2, 4, 6, 7, 8, 3)
    assert shape_from_inverse(inverse(PI_8)) == Composition.of(3, 1, 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_shape_from_inverse_agrees_with_run_scan(n):
    for perm in permutations_of(n):
        assert shape_from_inverse(inverse(perm)) == zigzag_shape(perm)


def test_restrict():
    assert format_permutation(restrict(PI_8, 4)) == "1372456"
    assert restrict((1, 2, 3, 4), 4) == (1, 2, 3)
    assert restrict((2, 1), 1) == (1,)
    with pytest.raises(PermutationError):
        restrict((2, 1), 3)


def test_extensions():
    assert extensions((1,)) == [(2, 1), (1, 2)]
    assert extensions((2, 1)) == [(3, 2, 1), (2, 3, 1), (2, 1, 3)]
    assert all(restrict(child, 3) == (2, 1) for child in extensions((2, 1)))


def test_extension_shapes_are_successors():
    for perm in permutations_of(4):
        shapes = {zigzag_shape(child) for child in extensions(perm)}
        assert shapes == set(successors(zigzag_shape(perm)))


@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_restriction_law_of_uniform_permutation(j):
    law = restriction_law(uniform_character(), 4, j)
    assert len(law) == 6
    assert set(law.values()) == {Fraction(1, 6)}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_restriction_law_is_independent_of_removed_value(n, three_pieces):
    character = paintbox_character(three_pieces)
    expected = {perm: character(zigzag_shape(perm)) for perm in permutations_of(n - 1)}
    for j in range(1, n + 1):
        assert restriction_law(character, n, j) == expected


def test_shape_classes_cover_symmetric_group():
    groups = enumerate_by_shape(5)
    assert sum(len(perms) for perms in groups.values()) == math.factorial(5)
    for lam, perms in groups.items():
        assert all(zigzag_shape(perm) == lam for perm in perms)
