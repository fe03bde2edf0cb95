"""Lattice 12-gons on the triangular lattice.

A hull is cut out by twelve half-planes whose boundary lines are parallel to
the twelve generator directions.  In (a, b) coordinates each boundary family
is the level set of an integer linear functional, so every comparison here is
integer arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .lattice import UsageError
from .trilattice import TRI_SPEC, DomainError, TriPoint

# Side directions counterclockwise: u1, t1, u2, t2, ..., u6, t6.
SIDE_DIRECTIONS: tuple[TriPoint, ...] = (
    (1, 0), (1, 1), (0, 1), (-1, 2), (-1, 1), (-2, 1),
    (-1, 0), (-1, -1), (0, -1), (1, -2), (1, -1), (2, -1),
)
SIDE_LABELS: tuple[str, ...] = tuple(
    f"{kind}{i}" for i in range(1, 7) for kind in ("u", "t")
)


def _functional(d: TriPoint) -> tuple[int, int]:
    # Constant along d; maximised on the side traversed in direction d.
    da, db = d
    return (db, -da)


FUNCTIONALS: tuple[tuple[int, int], ...] = tuple(_functional(d) for d in SIDE_DIRECTIONS)


def side_index(label: str) -> int:
    """Position of a side label such as 'u3' or 't6' in SIDE_DIRECTIONS."""
    kind, i = label[0], int(label[1:])
    if kind not in "ut" or not 1 <= i <= 6:
        raise UsageError(f"unknown side label {label!r}")
    return 2 * (i - 1) + (kind == "t")


def evaluate(f: tuple[int, int], p: TriPoint) -> int:
    return f[0] * p[0] + f[1] * p[1]


def support(S: Iterable[TriPoint]) -> tuple[int, ...]:
    pts = list(S)
    if not pts:
        raise UsageError("support of an empty set")
    return tuple(max(evaluate(f, p) for p in pts) for f in FUNCTIONALS)


def points_in_support(h: tuple[int, ...]) -> frozenset[TriPoint]:
    """All lattice points satisfying the twelve inequalities f_j(p) <= h_j."""
    # u2 and u5 bound a, u1 and u4 bound b.
    a_max, a_min = h[side_index("u2")], -h[side_index("u5")]
    b_max, b_min = h[side_index("u4")], -h[side_index("u1")]
    out = []
    for a in range(a_min, a_max + 1):
        for b in range(b_min, b_max + 1):
            if all(f[0] * a + f[1] * b <= hj for f, hj in zip(FUNCTIONALS, h)):
                out.append((a, b))
    return frozenset(out)


@dataclass(frozen=True)
class TwelveGonParams:
    u: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self):
        u, t = tuple(self.u), tuple(self.t)
        if len(u) != 6 or len(t) != 6:
            raise UsageError("a 12-gon has six u sides and six t sides")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "t", t)

    @classmethod
    def from_tuple(cls, values: Iterable[int]) -> "TwelveGonParams":
        v = tuple(values)
        return cls(v[:6], v[6:])

    @classmethod
    def regular(cls, u: int, t: int) -> "TwelveGonParams":
        return cls((u,) * 6, (t,) * 6)

    def as_tuple(self) -> tuple[int, ...]:
        return self.u + self.t

    def side(self, label: str) -> int:
        j = side_index(label)
        return self.u[j // 2] if j % 2 == 0 else self.t[j // 2]

    def lengths(self) -> tuple[int, ...]:
        """Side lengths in counterclockwise order u1, t1, u2, ..."""
        return tuple(x for pair in zip(self.u, self.t) for x in pair)

    @property
    def b_u(self) -> int:
        return sum(self.u)

    @property
    def b_t(self) -> int:
        return sum(self.t)

    @property
    def b(self) -> int:
        return self.b_u + self.b_t


@dataclass(frozen=True)
class HullSet:
    points: frozenset[TriPoint]
    anchor: TriPoint

    def __len__(self):
        return len(self.points)


def hull(S: Iterable[TriPoint]) -> HullSet:
    pts = points_in_support(support(S))
    return HullSet(pts, min(pts))


def is_hull(S: Iterable[TriPoint]) -> bool:
    pts = frozenset(S)
    return points_in_support(support(pts)) == pts


def params_from_hull(H: HullSet | Iterable[TriPoint]) -> TwelveGonParams:
    pts = H.points if isinstance(H, HullSet) else frozenset(H)
    h = support(pts)
    if points_in_support(h) != pts:
        raise DomainError("point set is not equal to its hull")
    lengths = []
    for f, hj in zip(FUNCTIONALS, h):
        on_side = sum(1 for p in pts if evaluate(f, p) == hj)
        lengths.append(on_side - 1)
    return TwelveGonParams(tuple(lengths[0::2]), tuple(lengths[1::2]))


def closure_residuals(params: TwelveGonParams) -> tuple[int, int]:
    u1, u2, u3, u4, u5, u6 = params.u
    t1, t2, t3, t4, t5, t6 = params.t
    r1 = u1 - u4 + t1 - t4 - t2 + t5 - u3 + u6 - 2 * t3 + 2 * t6
    r2 = t1 - t4 + u2 - u5 + 2 * t2 - 2 * t5 + u3 - u6 + t3 - t6
    return r1, r2


def corner_vertices(params: TwelveGonParams, anchor: TriPoint = (0, 0)) -> list[TriPoint]:
    """Polygon corners walking counterclockwise from the start of side u1."""
    a, b = anchor
    out = [(a, b)]
    for length, (da, db) in zip(params.lengths(), SIDE_DIRECTIONS):
        a, b = a + length * da, b + length * db
        out.append((a, b))
    return out


def twelvegon_points(params: TwelveGonParams, anchor: TriPoint = (0, 0)) -> HullSet:
    """Filled 12-gon whose side u1 starts at `anchor`."""
    if min(params.as_tuple()) < 0:
        raise DomainError(f"negative side length in {params.as_tuple()}")
    if closure_residuals(params) != (0, 0):
        raise DomainError(f"side walk does not close: residuals {closure_residuals(params)}")
    corners = corner_vertices(params, anchor)
    return hull(corners[:-1])


def side_vertex_count(u, t, choose2: Callable):
    """Parallelogram count minus the two hexagon corners and six small corners.

    Generic over the arithmetic type so the same expression serves integers
    and polynomials in k.
    """
    n = (t[1] + 2 * t[2] + t[3] + u[2] + u[3] + 1) * (t[0] + 2 * t[1] + t[2] + u[1] + u[2] + 1)
    n = n - choose2(t[1] + t[2] + u[2] + 1) - choose2(t[4] + t[5] + u[5] + 1)
    for ti in t:
        n = n - choose2(ti + 1)
    return n


def _choose2(x: int) -> int:
    return x * (x - 1) // 2


def vertex_count(params: TwelveGonParams) -> int:
    return side_vertex_count(params.u, params.t, _choose2)


def angle_condition_holds(params: TwelveGonParams) -> bool:
    """No boundary corner sharper than 90 degrees, via consecutive zero sides."""
    u, t = params.u, params.t
    for i in range(6):
        j = (i + 1) % 6
        if u[i] == t[i] == u[j] == 0 or t[i] == u[j] == t[j] == 0:
            return False
    return True


class PreconditionError(UsageError):
    pass


@dataclass(frozen=True)
class BoundaryStats:
    b_u: int
    b_t: int
    b: int
    boundary: int


def boundary_stats(params: TwelveGonParams) -> BoundaryStats:
    if not angle_condition_holds(params):
        raise PreconditionError(
            f"boundary formula needs all corner angles >= 90 degrees: {params.as_tuple()}"
        )
    return BoundaryStats(
        params.b_u, params.b_t, params.b, 6 * params.b_u + 10 * params.b_t + 12
    )


def direct_boundary(params: TwelveGonParams) -> int:
    from .lattice import edge_boundary

    return edge_boundary(twelvegon_points(params).points, TRI_SPEC)


def solve_t4_t5(u, t1: int, t2: int, t3: int, t6: int) -> tuple[int, int] | None:
    """Solve the two closure equations for (t4, t5); None if not integral."""
    u1, u2, u3, u4, u5, u6 = u
    x = u1 - u4 + t1 - t2 - u3 + u6 - 2 * t3 + 2 * t6
    y = t1 + u2 - u5 + 2 * t2 + u3 - u6 + t3 - t6
    if (y - x) % 3:
        return None
    t5 = (y - x) // 3
    return x + t5, t5


def sample_params(
    rng: random.Random, max_side: int = 8, min_side: int = 0, max_tries: int = 10_000
) -> TwelveGonParams:
    """Draw a closing parameter tuple by solving the closure equations for t4, t5."""
    for _ in range(max_tries):
        u = tuple(rng.randint(min_side, max_side) for _ in range(6))
        t1, t2, t3, t6 = (rng.randint(min_side, max_side) for _ in range(4))
        sol = solve_t4_t5(u, t1, t2, t3, t6)
        if sol is None:
            continue
        t4, t5 = sol
        if min(t4, t5) < min_side:
            continue
        return TwelveGonParams(u, (t1, t2, t3, t4, t5, t6))
    raise RuntimeError("could not sample closing parameters")


def separating_line_exists(S: Iterable[TriPoint]) -> bool:
    """True when a lattice line parallel to a generator misses S but splits it."""
    pts = list(S)
    for f in FUNCTIONALS[:6]:
        values = {evaluate(f, p) for p in pts}
        if max(values) - min(values) + 1 != len(values):
            return True
    return False
