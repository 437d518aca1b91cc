"""Exact scalars: arbitrary-precision rationals and rational circle points.

Rotation angles are never stored as floats.  A rotation by theta is encoded
as the exact pair (cos theta, sin theta) with c**2 + s**2 == 1, normally
produced from a rational half-tangent t = tan(theta/2).  Plain rationals are
``fractions.Fraction`` values, which keep the canonical form we rely on
(positive denominator, lowest terms) after every operation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "INF_HALF_TANGENT",
    "CirclePoint",
    "approximate_angle",
    "circle_from_half_tangent",
    "distinct_mod_pi",
    "parse_circle_point",
    "parse_rational",
]

#: Token for the half-tangent of theta = pi, where tan(theta/2) has a pole.
INF_HALF_TANGENT = "inf"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into an exact rational."""
    token = text.strip()
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational token {token!r}") from exc


@dataclass(frozen=True)
class CirclePoint:
    """Exact point (cos theta, sin theta) on the unit circle."""

    c: Fraction
    s: Fraction

    def __post_init__(self) -> None:
        c, s = Fraction(self.c), Fraction(self.s)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "s", s)
        if c * c + s * s != 1:
            raise ValueError(f"({c}, {s}) is not on the unit circle")

    def antipode(self) -> CirclePoint:
        return CirclePoint(-self.c, -self.s)

    def inverse(self) -> CirclePoint:
        """The rotation by the opposite angle."""
        return CirclePoint(self.c, -self.s)

    def compose(self, other: CirclePoint) -> CirclePoint:
        """The rotation by the sum of both angles."""
        return CirclePoint(
            self.c * other.c - self.s * other.s,
            self.s * other.c + self.c * other.s,
        )

    def encode(self) -> str:
        return f"{self.c},{self.s}"


def circle_from_half_tangent(t: Fraction | int | str) -> CirclePoint:
    """Circle point of the angle with tan(theta/2) = t.

    The token ``"inf"`` selects theta = pi, i.e. the point (-1, 0); any other
    string is parsed as a rational.
    """
    if isinstance(t, str):
        if t.strip() == INF_HALF_TANGENT:
            return CirclePoint(Fraction(-1), Fraction(0))
        t = parse_rational(t)
    t = Fraction(t)
    den = 1 + t * t
    return CirclePoint((1 - t * t) / den, 2 * t / den)


def distinct_mod_pi(a: CirclePoint, b: CirclePoint) -> bool:
    """True iff the two angles differ by neither 0 nor pi."""
    return a != b and a != b.antipode()


def approximate_angle(theta: str, max_denominator: int) -> CirclePoint:
    """Nearest exact circle point for a decimal angle (radians).

    Takes the best rational approximation of tan(theta/2) with denominator
    at most ``max_denominator`` and maps it through the half-tangent
    parametrization.  Angles within 1e-12 of pi go to (-1, 0), where the
    half-tangent has its pole.
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be at least 1")
    try:
        value = float(theta)
    except ValueError as exc:
        raise ValueError(f"invalid angle token {theta!r}") from exc
    if not math.isfinite(value):
        raise ValueError(f"invalid angle token {theta!r}")
    if abs(value - math.pi) <= 1e-12:
        return CirclePoint(Fraction(-1), Fraction(0))
    t = Fraction(math.tan(value / 2)).limit_denominator(max_denominator)
    return circle_from_half_tangent(t)


def parse_circle_point(token: str) -> CirclePoint:
    """Parse one branch token: ``t=<rational>``, ``t=inf``, or ``c,s``."""
    item = token.strip()
    if item.startswith("t="):
        return circle_from_half_tangent(item[2:])
    if "," in item:
        left, _, right = item.partition(",")
        return CirclePoint(parse_rational(left), parse_rational(right))
    raise ValueError(f"invalid circle-point token {item!r}")
