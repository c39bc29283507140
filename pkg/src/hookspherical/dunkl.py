"""Dunkl operators and P_k = sum_i (x_i D_i)^k as exact matrices at a fixed kappa.

Matrices act on the homogeneous polynomials of one total degree in N
variables (monomial basis). ``isotype_trace`` reads off the sum of P_k
eigenvalues on the [N-b, 1^b]-isotypic part of V_lambda: P_k is triangular
in dominance order, so the V_lambda diagonal block carries those eigenvalues.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterable

from .exact import Scalar, as_rational
from .hookchar import HookShape, hook_character, hook_dimension
from .permgroup import Permutation, cycle_type
from .spectrum import DegreeProfile
from .spherical import multiplicity

Exponent = tuple[int, ...]


def _compositions(total: int, parts: int) -> Iterable[Exponent]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class MonomialSpace:
    """Monomials of total degree ``degree`` in ``N`` variables, reverse-lex ordered."""

    N: int
    degree: int
    basis: tuple[Exponent, ...] = field(init=False, repr=False)
    index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.N < 1 or self.degree < 0:
            raise ValueError(f"invalid monomial space N={self.N}, degree={self.degree}")
        basis = tuple(_compositions(self.degree, self.N))
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "index", {e: i for i, e in enumerate(basis)})

    @property
    def dim(self) -> int:
        return len(self.basis)

    def orbit(self, lam: Exponent) -> list[int]:
        """Basis indices of the distinct rearrangements of ``lam``."""
        if len(lam) != self.N or sum(lam) != self.degree:
            raise ValueError(f"{lam} is not an exponent in this space")
        return sorted(self.index[e] for e in set(itertools.permutations(lam)))


class OperatorMatrix:
    """Square matrix over a MonomialSpace, stored by columns as sparse dicts."""

    __slots__ = ("space", "cols")

    def __init__(self, space: MonomialSpace, cols: dict[int, dict[int, Fraction]] | None = None):
        self.space = space
        self.cols = {}
        for c, col in (cols or {}).items():
            clean = {r: Fraction(v) for r, v in col.items() if v}
            if clean:
                self.cols[c] = clean

    @classmethod
    def identity(cls, space: MonomialSpace) -> "OperatorMatrix":
        return cls(space, {i: {i: Fraction(1)} for i in range(space.dim)})

    def entry(self, r: int, c: int) -> Fraction:
        return self.cols.get(c, {}).get(r, Fraction(0))

    def column(self, c: int) -> dict[int, Fraction]:
        return dict(self.cols.get(c, {}))

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        out = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            tgt = out.setdefault(c, {})
            for r, v in col.items():
                tgt[r] = tgt.get(r, 0) + v
        return OperatorMatrix(self.space, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s: Scalar) -> "OperatorMatrix":
        return OperatorMatrix(self.space, {c: {r: v * s for r, v in col.items()}
                                           for c, col in self.cols.items()})

    def apply(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for c, x in vec.items():
            for r, v in self.cols.get(c, {}).items():
                out[r] = out.get(r, 0) + v * x
        return {r: v for r, v in out.items() if v}

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return OperatorMatrix(self.space, {c: self.apply(col) for c, col in other.cols.items()})

    def __pow__(self, k: int) -> "OperatorMatrix":
        if k < 0:
            raise ValueError("negative matrix power")
        out = OperatorMatrix.identity(self.space)
        for _ in range(k):
            out = self @ out
        return out

    def trace(self) -> Fraction:
        return sum((col.get(c, Fraction(0)) for c, col in self.cols.items()), Fraction(0))

    def is_diagonal(self) -> bool:
        return all(set(col) <= {c} for c, col in self.cols.items())

    def to_dense(self) -> list[list[Fraction]]:
        n = self.space.dim
        rows = [[Fraction(0)] * n for _ in range(n)]
        for c, col in self.cols.items():
            for r, v in col.items():
                rows[r][c] = v
        return rows

    def __eq__(self, other):
        return (isinstance(other, OperatorMatrix) and self.space == other.space
                and self.cols == other.cols)

    def __repr__(self):
        nnz = sum(len(c) for c in self.cols.values())
        return f"OperatorMatrix(dim={self.space.dim}, nnz={nnz})"


def _bump(e: Exponent, changes: dict[int, int]) -> Exponent:
    out = list(e)
    for i, v in changes.items():
        out[i] = v
    return tuple(out)


def xDx_matrix(space: MonomialSpace, i: int, kappa0: Scalar) -> OperatorMatrix:
    """Matrix of f -> x_i D_i f for a 1-based variable index i."""
    if not 1 <= i <= space.N:
        raise ValueError(f"variable index {i} outside [1, {space.N}]")
    kappa0 = as_rational(kappa0)
    ii = i - 1
    cols = {}
    for c, beta in enumerate(space.basis):
        col: dict[int, Fraction] = {}
        if beta[ii]:
            col[c] = Fraction(beta[ii])
        if kappa0:
            for jj in range(space.N):
                if jj == ii or beta[ii] == beta[jj]:
                    continue
                # x_i (x^beta - x^{beta (i j)}) / (x_i - x_j), exact
                a, b = beta[ii], beta[jj]
                lo, diff = min(a, b), abs(a - b)
                sign = 1 if a > b else -1
                for t in range(diff):
                    e = _bump(beta, {ii: lo + diff - 1 - t + 1, jj: lo + t})
                    r = space.index[e]
                    col[r] = col.get(r, 0) + sign * kappa0
        cols[c] = col
    return OperatorMatrix(space, cols)


def pk_matrix(space: MonomialSpace, k: int, kappa0: Scalar) -> OperatorMatrix:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    total = OperatorMatrix(space)
    for i in range(1, space.N + 1):
        total = total + xDx_matrix(space, i, kappa0) ** k
    return total


def permutation_matrix(space: MonomialSpace, w: Permutation) -> OperatorMatrix:
    """Action (w P)(x) = P(x w) on monomials."""
    images = w.images
    cols = {}
    for c, e in enumerate(space.basis):
        new = [0] * space.N
        for i, a in enumerate(e):
            new[images[i]] = a
        cols[c] = {space.index[tuple(new)]: Fraction(1)}
    return OperatorMatrix(space, cols)


def isotype_projector(space: MonomialSpace, shape: HookShape) -> OperatorMatrix:
    """(dim tau / N!) sum_w chi^tau(w) w on the whole space."""
    if shape.N != space.N:
        raise ValueError("shape and space disagree on N")
    acc: dict[int, dict[int, Fraction]] = {}
    for images in itertools.permutations(range(space.N)):
        w = Permutation(images)
        chi = hook_character(shape, cycle_type(w))
        if not chi:
            continue
        for c, col in permutation_matrix(space, w).cols.items():
            for r in col:
                tgt = acc.setdefault(c, {})
                tgt[r] = tgt.get(r, 0) + chi
    scale = Fraction(hook_dimension(shape), factorial(space.N))
    return OperatorMatrix(space, {c: {r: v * scale for r, v in col.items()} for c, col in acc.items()})


def orbit_projector(space: MonomialSpace, lam: Exponent) -> OperatorMatrix:
    """Coordinate projection Q_lambda onto the span of the orbit of x^lambda."""
    return OperatorMatrix(space, {i: {i: Fraction(1)} for i in space.orbit(lam)})


@lru_cache(maxsize=256)
def _cached_projector(space: MonomialSpace, shape: HookShape) -> OperatorMatrix:
    return isotype_projector(space, shape)


@lru_cache(maxsize=256)
def _cached_pk(space: MonomialSpace, k: int, kappa0: Fraction) -> OperatorMatrix:
    return pk_matrix(space, k, kappa0)


def isotype_trace(profile: DegreeProfile, b: int, k: int, kappa0: Scalar) -> Fraction:
    """tr(Q_lambda Pi_tau P_k Q_lambda) at kappa = kappa0."""
    multiplicity(b, profile.p)  # NoInvariants when m < 0
    shape = HookShape(profile.N, b)
    space = MonomialSpace(profile.N, profile.total_degree)
    orbit = space.orbit(profile.exponent)
    proj = _cached_projector(space, shape)
    pk = _cached_pk(space, k, as_rational(kappa0))
    total = Fraction(0)
    for u in orbit:
        pcol = pk.cols.get(u, {})
        for v in orbit:
            pv = pcol.get(v)
            if pv:
                total += proj.entry(u, v) * pv
    return total


def symmetric_line_check(N: int, d: int, k: int, kappa0: Scalar) -> bool:
    """P_k (x_1...x_N)^d == N d^k (x_1...x_N)^d."""
    space = MonomialSpace(N, N * d)
    c = space.index[(d,) * N]
    return pk_matrix(space, k, kappa0).column(c) == ({c: Fraction(N * d**k)} if d else {})


def monomial_space_dim(N: int, degree: int) -> int:
    return comb(degree + N - 1, N - 1)
