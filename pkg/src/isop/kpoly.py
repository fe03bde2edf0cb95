"""Exact univariate polynomials in k with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction]


class KPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def k(cls) -> "KPolynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, value: Number) -> "KPolynomial":
        return cls((value,))

    @staticmethod
    def _lift(other) -> "KPolynomial":
        return other if isinstance(other, KPolynomial) else KPolynomial((other,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return KPolynomial(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return KPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return KPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return KPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Number):
        return KPolynomial(c / Fraction(scalar) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = KPolynomial((other,))
        if not isinstance(other, KPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, k: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def compose(self, inner: "KPolynomial") -> "KPolynomial":
        acc = KPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def choose2(self) -> "KPolynomial":
        return self * (self - 1) / 2

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"non-integral coefficients: {self}")
        return tuple(int(c) for c in self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "KPolynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" + ("" if i == 0 else "*k" if i == 1 else f"*k^{i}"))
        return "KPolynomial(" + " + ".join(reversed(terms)) + ")"
