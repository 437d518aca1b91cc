"""Univariate truncated power series (jets) with exact rational coefficients.

A jet of order N keeps the coefficients of x^0 .. x^N and forgets everything
above.  Operations require equal orders so that precision is never lost
silently; the caller picks the order once per computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["SeriesJet", "jet_mul", "jet_order_of_vanishing", "jet_pow"]


@dataclass(frozen=True)
class SeriesJet:
    """Truncated power series: coeffs[d] is the coefficient of x^d."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(x) for x in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if self.order < 0:
            raise ValueError("jet order must be non-negative")
        if len(coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(coeffs)}")

    @classmethod
    def zero(cls, order: int) -> SeriesJet:
        return cls(order, (Fraction(0),) * (order + 1))

    @classmethod
    def one(cls, order: int) -> SeriesJet:
        return cls.monomial(order, 0)

    @classmethod
    def monomial(cls, order: int, degree: int, coeff: Fraction | int = 1) -> SeriesJet:
        """coeff * x^degree, or the zero jet if degree exceeds the order."""
        c = [Fraction(0)] * (order + 1)
        if 0 <= degree <= order:
            c[degree] = Fraction(coeff)
        return cls(order, tuple(c))

    def coefficient(self, degree: int) -> Fraction:
        return self.coeffs[degree]

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coeffs)

    def scale(self, factor: Fraction | int) -> SeriesJet:
        f = Fraction(factor)
        return SeriesJet(self.order, tuple(f * x for x in self.coeffs))

    def __add__(self, other: SeriesJet) -> SeriesJet:
        _check_order(self, other)
        return SeriesJet(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: SeriesJet) -> SeriesJet:
        _check_order(self, other)
        return SeriesJet(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> SeriesJet:
        return self.scale(-1)


def _check_order(a: SeriesJet, b: SeriesJet) -> None:
    if a.order != b.order:
        raise ValueError(f"jet orders differ: {a.order} != {b.order}")


def jet_mul(a: SeriesJet, b: SeriesJet) -> SeriesJet:
    """Product truncated at the common order."""
    _check_order(a, b)
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if bj != 0:
                out[i + j] += ai * bj
    return SeriesJet(n, tuple(out))


def jet_pow(a: SeriesJet, k: int) -> SeriesJet:
    """a**k truncated at a's order; a**0 is the constant jet 1."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = SeriesJet.one(a.order)
    for _ in range(k):
        result = jet_mul(result, a)
    return result


def jet_order_of_vanishing(a: SeriesJet) -> int | None:
    """Smallest degree with a nonzero coefficient, or None for the zero jet."""
    return next((d for d, x in enumerate(a.coeffs) if x != 0), None)
