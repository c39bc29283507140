"""Exact scalars and dense univariate polynomials in the coupling parameter kappa.

Scalars are :class:`fractions.Fraction`; nothing in the package touches floats.
"""
from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    if "." in text or "e" in text.lower():
        raise ValueError(f"decimal literal {text!r} is not an exact rational")
    return Fraction(text)


def format_rational(value: Scalar) -> str:
    """Text form ``num/den``, with ``/den`` dropped for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class KappaPoly:
    """Polynomial in kappa with Fraction coefficients, ascending degree.

    Trailing zeros are trimmed so the zero polynomial has no coefficients.
    Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> "KappaPoly":
        return cls((c,))

    @classmethod
    def kappa(cls) -> "KappaPoly":
        return cls((0, 1))

    @classmethod
    def zero(cls) -> "KappaPoly":
        return cls()

    @classmethod
    def one(cls) -> "KappaPoly":
        return cls((1,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, i: int) -> Fraction:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    @staticmethod
    def _lift(other) -> "KappaPoly":
        if isinstance(other, KappaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return KappaPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        n = max(len(a), len(b))
        return KappaPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return KappaPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, KappaPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return KappaPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return KappaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = KappaPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: Scalar) -> "KappaPoly":
        return KappaPoly(c * x for x in self._coeffs)

    def __truediv__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(Fraction(1) / c)

    def __call__(self, kappa0: Scalar) -> Fraction:
        kappa0 = as_rational(kappa0)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * kappa0 + c
        return acc

    evaluate = __call__

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self):
        if len(self._coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self._coeffs)

    def __repr__(self):
        return f"KappaPoly({[format_rational(c) for c in self._coeffs]})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("k" if i == 1 else f"k^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(format_rational(c) + (("*" + mono) if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> str:
        return json.dumps(self.to_strings())

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, text: str) -> "KappaPoly":
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("KappaPoly JSON must be an array of coefficient strings")
        return cls(as_rational(c) for c in data)

    @classmethod
    def interpolate(cls, points: Sequence[tuple[Scalar, Scalar]]) -> "KappaPoly":
        """Lagrange interpolation through ``(kappa0, value)`` pairs with distinct abscissae."""
        xs = [as_rational(x) for x, _ in points]
        if len(set(xs)) != len(xs):
            raise ValueError("interpolation nodes must be distinct")
        out = KappaPoly()
        for i, (xi, (_, yi)) in enumerate(zip(xs, points)):
            basis = KappaPoly.one()
            denom = Fraction(1)
            for j, xj in enumerate(xs):
                if j != i:
                    basis = basis * KappaPoly((-xj, 1))
                    denom *= xi - xj
            out = out + basis.scale(as_rational(yi) / denom)
        return out
