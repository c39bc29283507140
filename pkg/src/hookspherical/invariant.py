"""Constructive check of the spherical function through G_n-invariant polynomials.

The hook module [N-b, 1^b] is realised by alternating polynomials in b+1 of
the variables. Its G_n-invariants are spanned by the sums ``xi_S``; given the
Gram matrix ``M`` and ``T(g)_{ij} = <g xi_j, xi_i>`` the spherical value is
``tr(T(g) M^{-1})``, which also equals ``tr(B(g))`` where ``B`` expands
``rho g xi_i`` in the basis.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .hookchar import HookShape
from .permgroup import BlockStructure, Permutation, young_subgroup
from .spherical import NoInvariants

Exponent = tuple[int, ...]
Weight = Callable[[Exponent], Fraction]


class MultivariatePoly:
    """Sparse polynomial in x_1..x_N: exponent tuple -> nonzero Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Fraction] | None = None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
            if c:
                clean[tuple(exp)] = Fraction(c)
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c) -> "MultivariatePoly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultivariatePoly":
        """x_i for a 1-based index i."""
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): Fraction(1)})

    def _check(self, other: "MultivariatePoly"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "MultivariatePoly") -> "MultivariatePoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultivariatePoly(self.nvars, out)

    def __neg__(self):
        return MultivariatePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultivariatePoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultivariatePoly(self.nvars, out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, MultivariatePoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultivariatePoly({len(self.terms)} terms in {self.nvars} vars)"

    def act(self, w: Permutation) -> "MultivariatePoly":
        """(w P)(x) = P(x w) with (x w)_i = x_{w(i)}."""
        if len(w) != self.nvars:
            raise ValueError("permutation size does not match variable count")
        images = w.images
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, a in enumerate(e):
                new[images[i]] = a
            out[tuple(new)] = c
        return MultivariatePoly(self.nvars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, a in zip(point, e):
                if a:
                    term *= Fraction(x) ** a
            total += term
        return total

    def dot(self, other: "MultivariatePoly", weight: Weight | None = None) -> Fraction:
        """Inner product making monomials orthogonal; orthonormal when ``weight`` is None."""
        self._check(other)
        small, big = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        total = Fraction(0)
        for e, c in small.terms.items():
            d = big.terms.get(e)
            if d is not None:
                total += c * d if weight is None else c * d * weight(e)
        return total


def orbit_weight(weights: Mapping[tuple[int, ...], Fraction], default=Fraction(1)) -> Weight:
    """S_N-invariant weight: a positive number per sorted exponent (monomial orbit)."""
    def weight(e: Exponent) -> Fraction:
        return Fraction(weights.get(tuple(sorted(e, reverse=True)), default))
    return weight


def delta(positions: Sequence[int], nvars: int) -> MultivariatePoly:
    """Vandermonde product prod_{j<k} (x_{i_j} - x_{i_k}) over 1-based positions.

    A single position gives the constant 1.
    """
    if len(set(positions)) != len(positions):
        raise ValueError(f"repeated position in {tuple(positions)}")
    for i in positions:
        if not 1 <= i <= nvars:
            raise ValueError(f"position {i} outside [1, {nvars}]")
    out = MultivariatePoly.constant(nvars, 1)
    for j, k in itertools.combinations(positions, 2):
        out = out * (MultivariatePoly.variable(nvars, j) - MultivariatePoly.variable(nvars, k))
    return out


def interval_labels(positions: Sequence[int], blocks: BlockStructure) -> tuple[int, ...]:
    """The block label of each coordinate of a tuple of positions."""
    return tuple(blocks.block_of(i) for i in positions)


def xi_basis(shape: HookShape, blocks: BlockStructure) -> list[tuple[frozenset[int], MultivariatePoly]]:
    """Invariant basis ``xi_S`` labelled by the m-subsets S of [1, p-1] it omits."""
    if shape.N != blocks.N:
        raise ValueError(f"shape has N={shape.N} but blocks sum to {blocks.N}")
    b, p = shape.b, blocks.p
    m = p - b - 1
    if m < 0:
        raise NoInvariants(b, p)
    out = []
    for S in itertools.combinations(range(1, p), m):
        labels = [j for j in range(1, p) if j not in S] + [p]
        xi = MultivariatePoly(blocks.N)
        for choice in itertools.product(*(blocks.positions(j) for j in labels)):
            xi = xi + delta(choice, blocks.N)
        out.append((frozenset(S), xi))
    return out


def symmetrize(f: MultivariatePoly, blocks: BlockStructure) -> MultivariatePoly:
    """Average of h f over h in G_n."""
    if f.nvars != blocks.N:
        raise ValueError("polynomial and blocks disagree on N")
    acc: dict[Exponent, Fraction] = {}
    for h in young_subgroup(blocks):
        for e, c in f.act(h).terms.items():
            acc[e] = acc.get(e, 0) + c
    order = blocks.order
    return MultivariatePoly(f.nvars, {e: c / order for e, c in acc.items()})


def gram_matrix(basis: Sequence[MultivariatePoly], weight: Weight | None = None) -> list[list[Fraction]]:
    return [[u.dot(v, weight) for v in basis] for u in basis]


def t_matrix(g: Permutation, basis: Sequence[MultivariatePoly],
             weight: Weight | None = None) -> list[list[Fraction]]:
    """T(g)_{ij} = <g xi_j, xi_i>."""
    moved = [xi.act(g) for xi in basis]
    return [[moved[j].dot(basis[i], weight) for j in range(len(basis))] for i in range(len(basis))]


class SingularMatrix(ArithmeticError):
    pass


def solve(a: Sequence[Sequence[Fraction]], rhs: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan solve of ``a X = rhs`` for square nonsingular ``a``."""
    n = len(a)
    cols = len(rhs[0]) if rhs else 0
    aug = [[Fraction(x) for x in a[i]] + [Fraction(x) for x in rhs[i]] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:n + cols] for row in aug]


def _trace(mat: Sequence[Sequence[Fraction]]) -> Fraction:
    return sum((mat[i][i] for i in range(len(mat))), Fraction(0))


def spherical_via_gram(shape: HookShape, blocks: BlockStructure, g: Permutation,
                       weight: Weight | None = None) -> Fraction:
    """tr(T(g) M^{-1}), computed as tr(M^{-1} T(g))."""
    basis = [xi for _, xi in xi_basis(shape, blocks)]
    m = gram_matrix(basis, weight)
    t = t_matrix(g, basis, weight)
    try:
        return _trace(solve(m, t))
    except SingularMatrix as exc:
        raise SingularMatrix(f"Gram matrix singular for b={shape.b}, blocks={blocks}") from exc


def expansion_matrix(shape: HookShape, blocks: BlockStructure, g: Permutation,
                     weight: Weight | None = None) -> list[list[Fraction]]:
    """B(g) with rho g xi_i = sum_j B_{ji} xi_j.

    B solves M^T B = T(g); the expansion is then confirmed polynomial by
    polynomial, so a wrong basis fails loudly instead of giving a wrong trace.
    """
    basis = [xi for _, xi in xi_basis(shape, blocks)]
    m = gram_matrix(basis, weight)
    mt = [list(row) for row in zip(*m)]
    bmat = solve(mt, t_matrix(g, basis, weight))
    for i, xi in enumerate(basis):
        lhs = symmetrize(xi.act(g), blocks)
        rhs = MultivariatePoly(blocks.N)
        for j, xj in enumerate(basis):
            if bmat[j][i]:
                rhs = rhs + xj * bmat[j][i]
        if not (lhs - rhs).is_zero():
            raise ArithmeticError(f"rho g xi_{i} is not in the span of the invariant basis")
    return bmat


def spherical_via_expansion(shape: HookShape, blocks: BlockStructure, g: Permutation,
                            weight: Weight | None = None) -> Fraction:
    return _trace(expansion_matrix(shape, blocks, g, weight))


def alternating_sum_value(point: Sequence) -> Fraction:
    """sum_j (-1)^j Delta(point with coordinate j removed), j = 1..len(point)."""
    def vdm(xs):
        out = Fraction(1)
        for a, c in itertools.combinations(xs, 2):
            out *= a - c
        return out

    pts = [Fraction(x) for x in point]
    return sum(((-1) ** j * vdm(pts[:j - 1] + pts[j:]) for j in range(1, len(pts) + 1)),
               Fraction(0))


def check_sumdelt(b: int, point: Sequence) -> bool:
    if len(point) != b + 2:
        raise ValueError(f"need b+2 = {b + 2} coordinates, got {len(point)}")
    return alternating_sum_value(point) == 0


def content_t0(i: int, b: int) -> int:
    """Content of entry i in the hook tableau whose first column is 1..b+1."""
    return 1 - i if i <= b + 1 else i - b - 1


def jucys_murphy_image(f: MultivariatePoly, j: int) -> MultivariatePoly:
    """omega_j f = sum_{i<j} (i, j) f."""
    out = MultivariatePoly(f.nvars)
    for i in range(1, j):
        out = out + f.act(Permutation.from_cycles([[i, j]], f.nvars))
    return out


def check_jucys_murphy(N: int, b: int) -> bool:
    if b + 1 > N:
        raise ValueError(f"need b+1 <= N, got N={N}, b={b}")
    f = delta(range(1, b + 2), N)
    return all(jucys_murphy_image(f, i) == f * content_t0(i, b) for i in range(1, N + 1))
