"""Closed forms for the hook spherical function at support cycles.

For tau = [N-b, 1^b], blocks n = (n_1..n_p), m = p - b - 1 and a support set
A of size l, the value chi^tau[A; n] is the average of chi^tau(g_A h) over
h in G_n. Two equivalent expressions are provided:

* :func:`spherical_big2` -- alternating sum of ``e_i(1/n_a)`` (default path);
* :func:`spherical_big1` -- sum of ``e_{l-k}(n_a - 1)`` over ``prod n_a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

from .permgroup import BlockStructure, check_support, support_cycle
from .symfunc import elem_sym, elem_sym_all, pochhammer


class NoInvariants(ValueError):
    """Raised when m = p - b - 1 < 0: the hook isotype does not occur in V_lambda."""

    def __init__(self, b: int, p: int):
        self.b, self.p = b, p
        super().__init__(
            f"no nonzero G_n-invariants: m = p - b - 1 = {p - b - 1} < 0 (b={b}, p={p})"
        )


def multiplicity(b: int, p: int) -> int:
    """Number of copies of [N-b, 1^b] in V_lambda with p distinct degrees."""
    m = p - b - 1
    if m < 0:
        raise NoInvariants(b, p)
    return comb(b + m, b)


@dataclass(frozen=True)
class SphericalQuery:
    b: int
    blocks: BlockStructure
    support: tuple[int, ...]

    def __post_init__(self):
        if self.b < 0:
            raise ValueError(f"b must be nonnegative, got {self.b}")
        if not isinstance(self.blocks, BlockStructure):
            object.__setattr__(self, "blocks", BlockStructure(tuple(self.blocks)))
        object.__setattr__(self, "support", check_support(self.blocks, self.support))
        if self.b > self.blocks.N - 1:
            raise ValueError(f"b={self.b} too large for N={self.blocks.N}")

    @property
    def p(self) -> int:
        return self.blocks.p

    @property
    def ell(self) -> int:
        return len(self.support)

    @property
    def m(self) -> int:
        return self.p - self.b - 1

    @property
    def support_sizes(self) -> tuple[int, ...]:
        return tuple(self.blocks.sizes[a - 1] for a in self.support)

    def cycle(self):
        return support_cycle(self.blocks, self.support)


def normalize_support(q: SphericalQuery) -> SphericalQuery:
    """Move the support blocks to the front so that A = {1, ..., l}.

    Conjugating g_A by the block relabelling leaves the value unchanged.
    """
    chosen = [q.blocks.sizes[a - 1] for a in q.support]
    rest = [s for j, s in enumerate(q.blocks.sizes, start=1) if j not in q.support]
    return SphericalQuery(q.b, BlockStructure(tuple(chosen + rest)), tuple(range(1, q.ell + 1)))


def spherical_big2(q: SphericalQuery) -> Fraction:
    b, m, ell = q.b, q.m, q.ell
    if m < 0:
        raise NoInvariants(b, q.p)
    inv = [Fraction(1, n) for n in q.support_sizes]
    e = elem_sym_all(inv)
    value = Fraction(comb(b + m, b))
    for i in range(1, min(b, ell - 1) + 1):
        value += (-1) ** i * comb(b + m - i, b - i) * e[i]
    return value


def spherical_big1(q: SphericalQuery, allow_single: bool = False) -> Fraction:
    """Product form; ``l = 1`` lies outside its stated range unless ``allow_single``."""
    b, m, ell = q.b, q.m, q.ell
    if m < 0:
        raise NoInvariants(b, q.p)
    if ell < 2 and not allow_single:
        raise ValueError("spherical_big1 needs a support of size >= 2 (pass allow_single=True)")
    sizes = q.support_sizes
    shifted = [Fraction(n - 1) for n in sizes]
    bracket = Fraction(0)
    for k in range(min(m, ell) + 1):
        bracket += pochhammer(Fraction(b + 1), m - k) / factorial(m - k) * elem_sym(ell - k, shifted)
    bracket += (-1) ** (ell + 1) * pochhammer(Fraction(b - ell + 1), m) / factorial(m)
    return bracket / prod(sizes)


def spherical_value(b: int, blocks, support, method: str = "big2") -> Fraction:
    q = SphericalQuery(b, blocks if isinstance(blocks, BlockStructure) else BlockStructure(tuple(blocks)),
                       tuple(support))
    if method == "big2":
        return spherical_big2(q)
    if method == "big1":
        return spherical_big1(q, allow_single=True)
    raise ValueError(f"unknown closed-form method {method!r}")
