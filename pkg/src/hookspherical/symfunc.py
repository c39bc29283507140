"""Elementary/complete symmetric polynomials, Pochhammer symbols and binomials.

``elem_sym`` and ``complete_sym`` work over any commutative ring whose
elements support ``+`` and ``*`` with ints (Fraction, int, KappaPoly).
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .exact import KappaPoly


def _one_like(vals: Sequence):
    if any(isinstance(v, KappaPoly) for v in vals):
        return KappaPoly.one()
    return Fraction(1)


def _zero_like(vals: Sequence):
    if any(isinstance(v, KappaPoly) for v in vals):
        return KappaPoly.zero()
    return Fraction(0)


def elem_sym_all(vals: Sequence) -> list:
    """``[e_0, e_1, ..., e_len(vals)]`` via the product of ``(1 + c t)``."""
    e = [_one_like(vals)] + [_zero_like(vals)] * len(vals)
    for i, c in enumerate(vals, start=1):
        for j in range(i, 0, -1):
            e[j] = e[j] + c * e[j - 1]
    return e


def elem_sym(k: int, vals: Sequence):
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k > len(vals):
        return _zero_like(vals)
    return elem_sym_all(vals)[k]


def complete_sym(k: int, vals: Sequence):
    """Complete homogeneous symmetric polynomial h_k.

    Uses h_k(c_1..c_q) = h_k(c_1..c_{q-1}) + c_q h_{k-1}(c_1..c_q), i.e. the
    monomials of degree k are split by whether they contain c_q.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    h = [_one_like(vals)] + [_zero_like(vals)] * k
    for c in vals:
        for j in range(1, k + 1):
            h[j] = h[j] + c * h[j - 1]
    return h[k]


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1)."""
    if n < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    out = Fraction(1) if not isinstance(a, KappaPoly) else KappaPoly.one()
    for i in range(n):
        out = out * (a + i)
    return out


def binomial(n, k: int) -> Fraction:
    """n(n-1)...(n-k+1)/k!, defined for any rational upper argument; 0 for k < 0."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    for i in range(k):
        num *= n - i
    return num / factorial(k)
