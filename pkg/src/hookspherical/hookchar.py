"""Hook characters via Murnaghan-Nakayama and the brute-force spherical average."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from . import _kernels
from .permgroup import BlockStructure, Permutation, is_partition_of


@dataclass(frozen=True)
class HookShape:
    """The partition [N - b, 1^b]."""

    N: int
    b: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"N must be positive, got {self.N}")
        if not 0 <= self.b <= self.N - 1:
            raise ValueError(f"need 0 <= b <= N-1, got N={self.N}, b={self.b}")

    @property
    def partition(self) -> tuple[int, ...]:
        return (self.N - self.b,) + (1,) * self.b


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], mu: tuple[int, ...]) -> int:
    # beta: sorted bead positions of the first-column hook lengths
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    beads = set(beta)
    total = 0
    for x in beta:
        y = x - r
        if y < 0 or y in beads:
            continue
        height = sum(1 for z in beta if y < z < x)
        moved = tuple(sorted((beads - {x}) | {y}))
        total += (-1) ** height * _mn(moved, rest)
    return total


def mn_character(shape: Sequence[int], ct: Sequence[int]) -> int:
    """chi^shape at cycle type ``ct`` by border-strip removal (any partition shape)."""
    shape = tuple(shape)
    ct = tuple(sorted(ct, reverse=True))
    n = sum(shape)
    if not is_partition_of(shape, n):
        raise ValueError(f"{shape} is not a partition")
    if not is_partition_of(ct, n):
        raise ValueError(f"cycle type {ct} is not a partition of {n}")
    length = len(shape)
    beta = tuple(sorted(shape[i] + (length - 1 - i) for i in range(length)))
    return _mn(beta, ct)


def hook_character(shape: HookShape, ct: Sequence[int]) -> int:
    ct = tuple(sorted(ct, reverse=True))
    if not is_partition_of(ct, shape.N):
        raise ValueError(f"cycle type {ct} is not a partition of {shape.N}")
    return mn_character(shape.partition, ct)


def hook_dimension(shape: HookShape) -> int:
    return comb(shape.N - 1, shape.b)


def spherical_bruteforce(shape: HookShape, blocks: BlockStructure, g: Permutation,
                         backend: str | None = None) -> Fraction:
    """Average of chi^tau(g h) over every h in the Young subgroup G_n."""
    if blocks.N != shape.N:
        raise ValueError(f"blocks sum to {blocks.N} but the shape has N={shape.N}")
    if len(g) != shape.N:
        raise ValueError(f"g acts on {len(g)} points, expected {shape.N}")
    hist = _kernels.class_histogram(g, blocks, backend=backend)
    total = sum(count * hook_character(shape, ct) for ct, count in hist.items())
    return Fraction(total, blocks.order)
