"""Sum of the eigenvalues of P_k on the hook-isotypic part of V_lambda, as a polynomial in kappa."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from math import factorial, prod

from .exact import KappaPoly
from .hookchar import HookShape, hook_dimension
from .permgroup import BlockStructure
from .spherical import NoInvariants, SphericalQuery, multiplicity, normalize_support, spherical_big2
from .symfunc import complete_sym


class Normalization(str, enum.Enum):
    """Weight attached to a support set A in the eigenvalue sum.

    AS_PRINTED multiplies by prod_{i in A} n_i!, PLAIN by prod_{i in A} n_i.
    Only PLAIN agrees with the Dunkl operator oracle once some n_i >= 3.
    """

    AS_PRINTED = "as-printed"
    PLAIN = "plain-product"

    @classmethod
    def parse(cls, text: str) -> "Normalization":
        key = text.strip().lower()
        aliases = {"as-printed": cls.AS_PRINTED, "printed": cls.AS_PRINTED,
                   "plain": cls.PLAIN, "plain-product": cls.PLAIN}
        if key not in aliases:
            raise ValueError(f"unknown normalization {text!r}")
        return aliases[key]

    def weight(self, sizes) -> int:
        if self is Normalization.AS_PRINTED:
            return prod(factorial(n) for n in sizes)
        return prod(sizes)


DEFAULT_NORMALIZATION = Normalization.PLAIN


@dataclass(frozen=True)
class DegreeProfile:
    """lambda = (d_1^{n_1}, ..., d_p^{n_p}) with d_1 > ... > d_p >= 0."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(d), int(n)) for d, n in self.pairs)
        if not pairs:
            raise ValueError("a degree profile needs at least one pair")
        for d, n in pairs:
            if d < 0:
                raise ValueError(f"degrees must be nonnegative, got {d}")
            if n < 1:
                raise ValueError(f"multiplicities must be positive, got {n}")
        for (d1, _), (d2, _) in zip(pairs, pairs[1:]):
            if not d1 > d2:
                raise ValueError(f"degrees must strictly decrease, got {d1} then {d2}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def parse(cls, text: str) -> "DegreeProfile":
        """Parse ``"d1:n1,d2:n2,..."``, e.g. ``"5:2,3:1,0:3"``."""
        pairs = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok:
                continue
            try:
                d, n = tok.split(":")
                pairs.append((int(d), int(n)))
            except ValueError as exc:
                raise ValueError(f"malformed profile entry {tok!r}") from exc
        return cls(tuple(pairs))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.pairs)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(n for _, n in self.pairs)

    @property
    def p(self) -> int:
        return len(self.pairs)

    @property
    def N(self) -> int:
        return sum(self.sizes)

    @property
    def total_degree(self) -> int:
        return sum(d * n for d, n in self.pairs)

    @property
    def blocks(self) -> BlockStructure:
        return BlockStructure(self.sizes)

    @property
    def exponent(self) -> tuple[int, ...]:
        """The exponent vector lambda itself."""
        return tuple(d for d, n in self.pairs for _ in range(n))

    def __str__(self):
        return ",".join(f"{d}:{n}" for d, n in self.pairs)


def shifted_degrees(profile: DegreeProfile) -> list[KappaPoly]:
    """d_i + kappa (n_{i+1} + ... + n_p)."""
    sizes = profile.sizes
    return [KappaPoly((d, sum(sizes[i + 1:]))) for i, d in enumerate(profile.degrees)]


@dataclass(frozen=True)
class SpectrumResult:
    value: KappaPoly
    normalization: Normalization
    b: int
    k: int
    profile: DegreeProfile
    dimension: int = field(default=0)
    multiplicity: int = field(default=0)


def eigenvalue_sum(profile: DegreeProfile, b: int, k: int,
                   normalization: Normalization | str = DEFAULT_NORMALIZATION) -> SpectrumResult:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if isinstance(normalization, str) and not isinstance(normalization, Normalization):
        normalization = Normalization.parse(normalization)
    p = profile.p
    mu = multiplicity(b, p)  # raises NoInvariants when m < 0
    shape = HookShape(profile.N, b)
    dim = hook_dimension(shape)
    dt = shifted_degrees(profile)
    blocks = profile.blocks
    minus_kappa = KappaPoly((0, -1))
    total = KappaPoly.zero()
    for ell in range(1, min(k + 1, p) + 1):
        inner = KappaPoly.zero()
        for A in itertools.combinations(range(1, p + 1), ell):
            if ell == 1:
                chi = mu
            else:
                chi = spherical_big2(normalize_support(SphericalQuery(b, blocks, A)))
            if chi == 0:
                continue
            h = complete_sym(k + 1 - ell, [dt[a - 1] for a in A])
            w = normalization.weight([blocks.sizes[a - 1] for a in A])
            inner = inner + h * (chi * w)
        total = total + minus_kappa ** (ell - 1) * inner
    return SpectrumResult(total * dim, normalization, b, k, profile, dim, mu)


__all__ = ["DegreeProfile", "Normalization", "SpectrumResult", "eigenvalue_sum",
           "shifted_degrees", "NoInvariants", "DEFAULT_NORMALIZATION"]
