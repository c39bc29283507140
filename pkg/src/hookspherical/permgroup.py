"""Permutations of [1, N], Young subgroups and support cycles.

Permutations are stored 0-based internally; every user-facing form (one-line
lists, cycle strings, support sets, intervals) is 1-based.

Composition is right-to-left as functions: ``(u * v)(i) == u(v(i))``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Permutation:
    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a 0-based permutation")
        self._images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_oneline(cls, oneline: Sequence[int]) -> "Permutation":
        """From the 1-based one-line form ``[w(1), ..., w(N)]``."""
        return cls([i - 1 for i in oneline])

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            for c in cyc:
                if not 1 <= c <= n:
                    raise ValueError(f"point {c} outside [1, {n}]")
                if c in seen:
                    raise ValueError(f"point {c} appears twice in cycle notation")
                seen.add(c)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b - 1
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        """Parse cycle notation such as ``"(1 3 6)(2 5)"``; ``"()"`` is the identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*(\d+([\s,]+\d+)*)?\s*\)\s*)*", text):
            raise ValueError(f"malformed cycle notation {text!r}")
        cycles = [
            [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        return cls.from_cycles(cycles, n)

    @property
    def images(self) -> tuple[int, ...]:
        """0-based images."""
        return self._images

    def oneline(self) -> list[int]:
        return [i + 1 for i in self._images]

    def __len__(self):
        return len(self._images)

    def __call__(self, i: int) -> int:
        """Image of the 1-based point i."""
        return self._images[i - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._images)
        for i, w in enumerate(self._images):
            inv[w] = i
        return Permutation(inv)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles (1-based), each starting at its smallest point."""
        seen = [False] * len(self._images)
        out = []
        for start in range(len(self._images)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self._images[i]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def is_identity(self) -> bool:
        return all(i == w for i, w in enumerate(self._images))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self):
        return hash(self._images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()}, N={len(self)})"


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``u * v`` with ``(u * v)(i) = u(v(i))``."""
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {len(u)} vs {len(v)}")
    ui = u.images
    return Permutation([ui[j] for j in v.images])


def cycle_type(w: Permutation) -> tuple[int, ...]:
    """Cycle lengths in weakly decreasing order (fixed points included)."""
    return tuple(sorted((len(c) for c in w.cycles(include_fixed=True)), reverse=True))


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def is_partition_of(parts: Sequence[int], n: int) -> bool:
    return (
        all(isinstance(x, int) and x > 0 for x in parts)
        and all(a >= b for a, b in zip(parts, parts[1:]))
        and sum(parts) == n
    )


def class_size(ct: Sequence[int]) -> int:
    """Number of permutations in S_N with cycle type ``ct``."""
    n = sum(ct)
    denom = 1
    for length in set(ct):
        c = ct.count(length)
        denom *= length**c * factorial(c)
    return factorial(n) // denom


@dataclass(frozen=True)
class BlockStructure:
    """Composition n = (n_1, ..., n_p) of N; block j occupies the interval I_j."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes:
            raise ValueError("a block structure needs at least one block")
        if any(s < 1 for s in sizes):
            raise ValueError(f"block sizes must be positive, got {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def parse(cls, text: str) -> "BlockStructure":
        try:
            sizes = tuple(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError as exc:
            raise ValueError(f"malformed block list {text!r}") from exc
        return cls(sizes)

    @property
    def N(self) -> int:
        return sum(self.sizes)

    @property
    def p(self) -> int:
        return len(self.sizes)

    @cached_property
    def starts(self) -> tuple[int, ...]:
        """0-based first position of each block."""
        out, acc = [], 0
        for s in self.sizes:
            out.append(acc)
            acc += s
        return tuple(out)

    @property
    def intervals(self) -> list[tuple[int, int]]:
        """1-based inclusive ``[start, end]`` of each interval I_j."""
        return [(s + 1, s + n) for s, n in zip(self.starts, self.sizes)]

    def block_of(self, position: int) -> int:
        """1-based block label of a 1-based position."""
        for j, (lo, hi) in enumerate(self.intervals, start=1):
            if lo <= position <= hi:
                return j
        raise ValueError(f"position {position} outside [1, {self.N}]")

    def positions(self, j: int) -> range:
        """1-based positions of block j."""
        lo, hi = self.intervals[j - 1]
        return range(lo, hi + 1)

    @property
    def order(self) -> int:
        return prod(factorial(s) for s in self.sizes)

    def __str__(self):
        return ",".join(map(str, self.sizes))


def check_support(blocks: BlockStructure, support: Iterable[int]) -> tuple[int, ...]:
    members = tuple(sorted(int(a) for a in support))
    if not members:
        raise ValueError("support set must be nonempty")
    if len(set(members)) != len(members):
        raise ValueError(f"support set has repeated members: {members}")
    bad = [a for a in members if not 1 <= a <= blocks.p]
    if bad:
        raise ValueError(f"support members {bad} outside [1, {blocks.p}]")
    return members


def support_cycle(blocks: BlockStructure, support: Iterable[int]) -> Permutation:
    """The cycle through the first position of each interval I_a, a in A ascending."""
    members = check_support(blocks, support)
    points = [blocks.starts[a - 1] + 1 for a in members]
    return Permutation.from_cycles([points], blocks.N)


def block_permutation_tables(blocks: BlockStructure) -> list[list[tuple[int, ...]]]:
    """Per block, all permutations of ``range(n_j)`` in lexicographic order."""
    return [list(itertools.permutations(range(s))) for s in blocks.sizes]


def young_subgroup(blocks: BlockStructure) -> Iterator[Permutation]:
    """All elements of S_{n_1} x ... x S_{n_p}, first block varying slowest."""
    tables = block_permutation_tables(blocks)
    for factors in itertools.product(*tables):
        images = []
        for start, f in zip(blocks.starts, factors):
            images.extend(start + x for x in f)
        yield Permutation(images)
