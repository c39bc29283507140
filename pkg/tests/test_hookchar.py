import itertools
from fractions import Fraction
from math import factorial

import pytest

from hookspherical.hookchar import (HookShape, hook_character, hook_dimension, mn_character,
                                    spherical_bruteforce)
from hookspherical.invariant import delta, solve
from hookspherical.permgroup import (BlockStructure, Permutation, class_size, partitions,
                                     support_cycle, young_subgroup)


def count_syt(shape):
    """Standard Young tableaux counted by placing 1..N one box at a time."""
    n = sum(shape)

    def rec(filled, k):
        if k > n:
            return 1
        total = 0
        for r, length in enumerate(shape):
            c = filled[r]
            if c < length and (r == 0 or filled[r - 1] > c):
                filled[r] += 1
                total += rec(filled, k + 1)
                filled[r] -= 1
        return total

    return rec([0] * len(shape), 1)


def representative(ct):
    cycles, start = [], 1
    for length in ct:
        cycles.append(list(range(start, start + length)))
        start += length
    return Permutation.from_cycles(cycles, sum(ct))


def trace_on_alternating_module(N, b, w):
    """Trace of w on span{Delta(x_T)}, basis: (b+1)-subsets T containing 1."""
    basis = [delta(T, N) for T in itertools.combinations(range(1, N + 1), b + 1) if T[0] == 1]
    gram = [[u.dot(v) for v in basis] for u in basis]
    images = [f.act(w) for f in basis]
    rhs = [[basis[i].dot(images[j]) for j in range(len(basis))] for i in range(len(basis))]
    coords = solve(gram, rhs)
    return sum(coords[i][i] for i in range(len(basis)))


def test_character_examples():
    assert hook_character(HookShape(4, 1), (4,)) == -1
    assert hook_character(HookShape(4, 1), (1, 1, 1, 1)) == 3 == count_syt((3, 1))
    for b in range(0, 6):
        N = b + 1
        for ell in range(1, N + 1):
            assert hook_character(HookShape(N, b), (ell,) + (1,) * (N - ell)) == (-1) ** (ell + 1)


def test_dimension_examples():
    assert hook_dimension(HookShape(5, 0)) == 1
    assert hook_dimension(HookShape(5, 4)) == 1
    assert hook_dimension(HookShape(4, 1)) == 3 == count_syt((3, 1))


@pytest.mark.parametrize("N", range(1, 8))
def test_dimension_matches_syt_and_identity_value(N):
    for b in range(N):
        shape = HookShape(N, b)
        assert hook_dimension(shape) == count_syt(shape.partition)
        assert hook_character(shape, (1,) * N) == hook_dimension(shape)


@pytest.mark.parametrize("N", range(1, 7))
def test_mn_matches_alternating_module(N):
    for b in range(N):
        for ct in partitions(N):
            assert hook_character(HookShape(N, b), ct) == trace_on_alternating_module(N, b, representative(ct))


@pytest.mark.parametrize("N", range(1, 7))
def test_column_orthogonality(N):
    for b in range(N):
        shape = HookShape(N, b)
        assert sum(class_size(ct) * hook_character(shape, ct) ** 2 for ct in partitions(N)) == factorial(N)


def test_mn_general_shape():
    # chi^{(2,2)} on S_4: classes (1^4), (2,1,1), (2,2), (3,1), (4)
    vals = [mn_character((2, 2), ct) for ct in [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]]
    assert vals == [2, 0, 2, -1, 0]


def test_invalid_inputs():
    with pytest.raises(ValueError):
        HookShape(3, 3)
    with pytest.raises(ValueError):
        hook_character(HookShape(4, 1), (2, 1))


def test_bruteforce_examples():
    g = Permutation.from_cycles([[1, 3]], 3)
    assert spherical_bruteforce(HookShape(3, 1), BlockStructure((2, 1)), g) == Fraction(-1, 2)
    blocks = BlockStructure((2, 2, 3))
    assert spherical_bruteforce(HookShape(7, 0), blocks, Permutation.parse("(1 5)(2 3 6)", 7)) == 1
    for b in range(3):
        assert spherical_bruteforce(HookShape(7, b), blocks, Permutation.identity(7)) == \
            {0: 1, 1: 2, 2: 1}[b]


def test_bi_invariance():
    blocks = BlockStructure((2, 2, 1))
    shape = HookShape(5, 1)
    g = Permutation.parse("(1 3 5)", 5)
    ref = spherical_bruteforce(shape, blocks, g)
    for h1 in young_subgroup(blocks):
        for h2 in list(young_subgroup(blocks))[::2]:
            assert spherical_bruteforce(shape, blocks, h1 * g * h2) == ref


def test_bruteforce_size_mismatch():
    with pytest.raises(ValueError):
        spherical_bruteforce(HookShape(4, 1), BlockStructure((2, 1)), Permutation.identity(3))
