"""The triangular lattice with unit and sqrt(3) edges.

Points are written as (a, b) meaning a*g1 + b*g2 with g1 = (1, 0) and
g2 = (1/2, sqrt(3)/2).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .lattice import CayleyGraphSpec, UsageError

TriPoint = tuple[int, int]

SHORT_GENERATORS: tuple[TriPoint, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1), (-1, 1), (1, -1))
LONG_GENERATORS: tuple[TriPoint, ...] = ((1, 1), (-1, -1), (-1, 2), (1, -2), (-2, 1), (2, -1))

TRI_SPEC = CayleyGraphSpec(2, SHORT_GENERATORS + LONG_GENERATORS, name="triangular-12")


class DomainError(UsageError):
    pass


def ceil_sqrt(x: int) -> int:
    if x < 0:
        raise DomainError(f"square root of negative number {x}")
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def special_k_of_n(n: int) -> int | None:
    """k >= 1 with n == 24k^2 - 24k + 7, or None."""
    if n < 7:
        return None
    disc = 96 * n - 96  # (48k - 24)^2
    r = math.isqrt(disc)
    if r * r != disc or (r + 24) % 48:
        return None
    return (r + 24) // 48


def special_n(k: int) -> int:
    return 24 * k * k - 24 * k + 7


def e_of_n(n: int) -> int:
    """Maximum number of edges spanned by n >= 3 points of the 12-neighbour lattice."""
    if n < 3:
        raise DomainError(f"e(n) is defined for n >= 3, got {n}")
    if special_k_of_n(n) is not None:
        return 6 * n - 4 * math.isqrt(6 * n - 6)
    return 6 * n - ceil_sqrt(96 * n - 63)


def small_n(n: int) -> int:
    """Optimal edge counts for the sizes below the closed form's range."""
    if n == 1:
        return 0
    if n == 2:
        return 1
    raise DomainError(f"small_n covers n in {{1, 2}}, got {n}")


def max_edges(n: int) -> int:
    return small_n(n) if n < 3 else e_of_n(n)


def table_rows(n_max: int, n_min: int = 3) -> list[tuple[int, int, int | None]]:
    """(n, e(n), e(n) - e(n-1)) rows; the increment is None at n = 3."""
    rows = []
    for n in range(n_min, n_max + 1):
        delta = None if n == 3 else e_of_n(n) - e_of_n(n - 1)
        rows.append((n, e_of_n(n), delta))
    return rows


class PlanePoint(NamedTuple):
    """Exact planar position x + i*y where y = y_sqrt3 * sqrt(3)."""

    x: Fraction
    y_sqrt3: Fraction

    def as_floats(self) -> tuple[float, float]:
        return float(self.x), float(self.y_sqrt3) * math.sqrt(3)


def embed_to_plane(p: TriPoint) -> PlanePoint:
    a, b = p
    return PlanePoint(Fraction(a) + Fraction(b, 2), Fraction(b, 2))


def squared_distance(p: TriPoint, q: TriPoint) -> Fraction:
    P, Q = embed_to_plane(p), embed_to_plane(q)
    dx = P.x - Q.x
    dy = P.y_sqrt3 - Q.y_sqrt3
    return dx * dx + 3 * dy * dy
