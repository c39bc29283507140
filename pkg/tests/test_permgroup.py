import itertools
import random
from math import factorial, prod

import pytest

from hookspherical.permgroup import (BlockStructure, Permutation, class_size, compose, cycle_type,
                                     partitions, support_cycle, young_subgroup)


def test_intervals():
    b = BlockStructure((2, 3, 1))
    assert b.N == 6 and b.p == 3
    assert b.intervals == [(1, 2), (3, 5), (6, 6)]
    assert [b.block_of(i) for i in range(1, 7)] == [1, 1, 2, 2, 2, 3]
    with pytest.raises(ValueError):
        BlockStructure((2, 0))


def test_support_cycle_examples():
    b = BlockStructure((2, 3, 1))
    assert support_cycle(b, [1, 3]) == Permutation.from_cycles([[1, 6]], 6)
    assert support_cycle(b, [1, 2, 3]) == Permutation.from_cycles([[1, 3, 6]], 6)
    assert support_cycle(b, [2]).is_identity()
    with pytest.raises(ValueError):
        support_cycle(b, [4])
    with pytest.raises(ValueError):
        support_cycle(b, [])


@pytest.mark.parametrize("sizes,count", [((2, 1), 2), ((2, 2), 4), ((1, 1, 1), 1)])
def test_young_subgroup_examples(sizes, count):
    assert len(list(young_subgroup(BlockStructure(sizes)))) == count


def small_compositions(max_total=8):
    for total in range(1, max_total + 1):
        for p in range(1, 4):
            for sizes in itertools.product(range(1, total + 1), repeat=p):
                if sum(sizes) == total and prod(factorial(s) for s in sizes) <= 2000:
                    yield sizes


@pytest.mark.parametrize("sizes", list(small_compositions()))
def test_young_subgroup_enumeration(sizes):
    blocks = BlockStructure(sizes)
    elems = list(young_subgroup(blocks))
    assert len(elems) == len(set(elems)) == blocks.order
    for h in elems:
        for lo, hi in blocks.intervals:
            assert {h(i) for i in range(lo, hi + 1)} == set(range(lo, hi + 1))


def test_enumeration_is_deterministic():
    blocks = BlockStructure((2, 2))
    first = [h.oneline() for h in young_subgroup(blocks)]
    assert first == [[1, 2, 3, 4], [1, 2, 4, 3], [2, 1, 3, 4], [2, 1, 4, 3]]


def test_cycle_type_and_compose():
    assert cycle_type(Permutation.from_oneline([3, 2, 1])) == (2, 1)
    assert cycle_type(Permutation.identity(4)) == (1, 1, 1, 1)
    u = Permutation.from_cycles([[1, 3]], 3)
    v = Permutation.from_cycles([[1, 2]], 3)
    w = compose(u, v)
    # u(v(1)) = u(2) = 2, u(v(2)) = u(1) = 3, u(v(3)) = u(3) = 1
    assert w.oneline() == [2, 3, 1]
    assert cycle_type(w) == (3,)
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_conjugation_invariance():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 8)
        w = Permutation(rng.sample(range(n), n))
        u = Permutation(rng.sample(range(n), n))
        assert cycle_type(u * w * u.inverse()) == cycle_type(w)


def test_cycle_notation_round_trip():
    w = Permutation.parse("(1 3 6)(2 5)", 6)
    assert w.cycle_string() == "(1 3 6)(2 5)"
    assert Permutation.parse(w.cycle_string(), 6) == w
    assert Permutation.parse("()", 3).is_identity()
    with pytest.raises(ValueError):
        Permutation.parse("(1 2", 3)
    with pytest.raises(ValueError):
        Permutation.parse("(1 2)(2 3)", 3)


def test_class_sizes_sum_to_factorial():
    for n in range(1, 8):
        assert sum(class_size(ct) for ct in partitions(n)) == factorial(n)
