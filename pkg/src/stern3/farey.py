"""Exact Farey map on the triangle 0 <= y <= x <= 1.

The triangle splits into three closed subtriangles, each carried back onto
the whole triangle by one branch of the map; the digit stream of a point
records which subtriangle every iterate lands in.  All point arithmetic
uses fractions.Fraction -- the defining inequalities become equalities on
subdivision vertices all the time, so floating point is never used.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .matrices import product_over


class OutOfDomain(ValueError):
    """Point lies outside the triangle 0 <= y <= x <= 1."""


class ZeroDenominator(ZeroDivisionError):
    """A projective division or map branch hit a zero denominator."""


class RationalPoint(NamedTuple):
    x: Fraction
    y: Fraction


def as_point(p) -> RationalPoint:
    """Coerce a coordinate pair to exact rationals."""
    x, y = p
    return RationalPoint(Fraction(x), Fraction(y))


def in_domain(p) -> bool:
    x, y = as_point(p)
    return 0 <= y <= x <= 1


def _require_domain(p) -> RationalPoint:
    pt = as_point(p)
    if not 0 <= pt.y <= pt.x <= 1:
        raise OutOfDomain(f"({pt.x}, {pt.y}) is not in the triangle 0 <= y <= x <= 1")
    return pt


def in_subtriangle(digit: int, p) -> bool:
    """Closed membership test for one of the three subtriangles."""
    x, y = as_point(p)
    if digit == 0:
        return 1 - 2 * y >= x - y >= y
    if digit == 1:
        return 2 * x - 1 >= y >= 1 - x
    if digit == 2:
        return 1 - 2 * x + 2 * y >= 1 - x >= x - y
    raise ValueError(f"digit must be 0, 1 or 2, got {digit!r}")


def classify(p) -> int:
    """Subtriangle digit of a point; ties on shared edges pick the lowest."""
    pt = _require_domain(p)
    for digit in (0, 1, 2):
        if in_subtriangle(digit, pt):
            return digit
    raise AssertionError(f"point {pt} matched no subtriangle")  # systems cover the triangle


def apply_map(p) -> RationalPoint:
    """One step of the map: the branch of the point's subtriangle."""
    pt = _require_domain(p)
    branch = classify(pt)
    x, y = pt
    if branch == 0:
        den, nx, ny = 1 - 2 * y, x - y, y
    elif branch == 1:
        den, nx, ny = 2 * x - 1, y, 1 - x
    else:
        den, nx, ny = 1 - 2 * x + 2 * y, 1 - x, x - y
    if den == 0:
        raise ZeroDenominator(f"branch {branch} denominator vanishes at ({x}, {y})")
    image = RationalPoint(nx / den, ny / den)
    assert 0 <= image.y <= image.x <= 1
    return image


def expand(p, count: int) -> list[int]:
    """First ``count`` digits of the point's expansion.

    The j-th digit classifies the (j-1)-th iterate.  If a branch denominator
    ever vanished the digits so far would be returned, their number marking
    the stop index; no rational point of the triangle actually triggers
    this, the handling is defensive.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    pt = _require_domain(p)
    digits: list[int] = []
    while True:
        digits.append(classify(pt))
        if len(digits) == count:
            return digits
        try:
            pt = apply_map(pt)
        except ZeroDenominator:
            return digits


def project(v: Sequence[int]) -> RationalPoint:
    """Projectivize a homogeneous vector by its third coordinate."""
    a, b, c = v
    if c == 0:
        raise ZeroDenominator(f"third coordinate is zero in {tuple(v)!r}")
    return RationalPoint(Fraction(a, c), Fraction(b, c))


def _orient(a: RationalPoint, b: RationalPoint, c: RationalPoint) -> Fraction:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def cone_corners(digits: Iterable[int]) -> tuple[RationalPoint, RationalPoint, RationalPoint]:
    """Projected columns of the digit string's matrix product: the corners
    of its subdivision triangle."""
    m = product_over(digits)
    return tuple(project((m[0][j], m[1][j], m[2][j])) for j in range(3))


def cone_contains(digits: Iterable[int], p) -> bool:
    """Whether p lies in the closed triangle of a digit string's cone.

    Decided by exact barycentric sign tests; boundary points count as
    inside.  The corner triangles are never degenerate because the digit
    matrices are unimodular.
    """
    pt = _require_domain(p)
    c1, c2, c3 = cone_corners(digits)
    s1 = _orient(c1, c2, pt)
    s2 = _orient(c2, c3, pt)
    s3 = _orient(c3, c1, pt)
    return (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0)
