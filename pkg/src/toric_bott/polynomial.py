"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _normalize(coeffs):
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class UniPoly:
    """Polynomial sum(coefficients[i] * t**i); trailing zeros stripped."""

    coefficients: tuple

    def __init__(self, coefficients=()):
        object.__setattr__(self, "coefficients", _normalize(coefficients))

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return UniPoly(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(size))
        )

    def __sub__(self, other):
        other = _coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return UniPoly(
            tuple(self.coefficient(i) - other.coefficient(i) for i in range(size))
        )

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coefficients))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(tuple(c * other for c in self.coefficients))
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients))
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def compose_negated(self):
        """The polynomial p(-t)."""
        return UniPoly(
            tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coefficients))
        )

    def is_integer_valued(self) -> bool:
        """True iff p(k) is an integer for every integer k.

        Equivalent to integrality of the coefficients in the binomial
        basis; checked through values at degree+1 consecutive integers.
        """
        return all(self(k).denominator == 1 for k in range(self.degree + 2))

    def coefficient_strings(self, descending: bool = True):
        """Exact coefficient strings ("num/den" or plain integers)."""
        size = len(self.coefficients) or 1
        cs = [str(self.coefficient(i)) for i in range(size)]
        return cs[::-1] if descending else cs

    def format(self, var: str = "k") -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficient(i)
            if c == 0:
                continue
            power = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not power:
                parts.append(str(c))
            elif c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}*{power}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.format("k")


def _coerce(value) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly.constant(value)


def lagrange_interpolate(points) -> UniPoly:
    """The unique polynomial of degree < len(points) through the points.

    Exact over the rationals; nodes must be distinct.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if len({x for x, _ in pts}) != len(pts):
        raise ValueError("interpolation nodes must be distinct")
    result = UniPoly.zero()
    for i, (xi, yi) in enumerate(pts):
        basis = UniPoly.constant(1)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            basis = basis * UniPoly((-xj, 1))
            denom *= xi - xj
        result = result + basis * (yi / denom)
    return result
