"""Points, Cayley graph specs and exact edge counting on Z^d.

A vertex set is any finite iterable of integer tuples; counts are computed on
demand from the generator set, never from a materialised graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

LatticePoint = tuple[int, ...]


class UsageError(ValueError):
    """Raised when an operation is called with arguments that cannot make sense."""


class DimensionError(UsageError):
    pass


def add(p: LatticePoint, q: LatticePoint) -> LatticePoint:
    return tuple(x + y for x, y in zip(p, q))


def sub(p: LatticePoint, q: LatticePoint) -> LatticePoint:
    return tuple(x - y for x, y in zip(p, q))


def neg(p: LatticePoint) -> LatticePoint:
    return tuple(-x for x in p)


@dataclass(frozen=True)
class CayleyGraphSpec:
    """Undirected Cayley graph on Z^d given by a symmetric generating set.

    We do not check that the generators span Z^d as a group.
    """

    dimension: int
    generators: tuple[LatticePoint, ...]
    name: str = ""

    def __post_init__(self):
        if self.dimension < 1:
            raise UsageError(f"dimension must be positive, got {self.dimension}")
        gens = tuple(tuple(int(x) for x in u) for u in self.generators)
        if len(set(gens)) != len(gens):
            raise UsageError("duplicate generators")
        for u in gens:
            if len(u) != self.dimension:
                raise DimensionError(f"generator {u} is not {self.dimension}-dimensional")
            if not any(u):
                raise UsageError("the zero vector cannot be a generator")
        as_set = set(gens)
        for u in gens:
            if neg(u) not in as_set:
                raise UsageError(f"generating set is not symmetric: {neg(u)} missing")
        object.__setattr__(self, "generators", gens)

    @property
    def degree(self) -> int:
        return len(self.generators)

    def check_point(self, p: LatticePoint) -> None:
        if len(p) != self.dimension:
            raise DimensionError(
                f"point {tuple(p)} has dimension {len(p)}, graph has {self.dimension}"
            )


def neighbors(p: LatticePoint, g: CayleyGraphSpec) -> set[LatticePoint]:
    g.check_point(p)
    return {add(p, u) for u in g.generators}


def _as_set(S: Iterable[LatticePoint], g: CayleyGraphSpec) -> frozenset[LatticePoint]:
    pts = frozenset(tuple(p) for p in S)
    for p in pts:
        g.check_point(p)
    return pts


def count_neighbors_in(p: LatticePoint, S: set | frozenset, g: CayleyGraphSpec) -> int:
    """Number of generators u with p + u in S."""
    return sum(1 for u in g.generators if add(p, u) in S)


def induced_edge_count(S: Iterable[LatticePoint], g: CayleyGraphSpec) -> int:
    pts = _as_set(S, g)
    twice = sum(count_neighbors_in(p, pts, g) for p in pts)
    return twice // 2


def edge_boundary(S: Iterable[LatticePoint], g: CayleyGraphSpec) -> int:
    pts = _as_set(S, g)
    return sum(g.degree - count_neighbors_in(p, pts, g) for p in pts)


def translate(S: Iterable[LatticePoint], v: LatticePoint) -> frozenset[LatticePoint]:
    return frozenset(add(p, v) for p in S)


def canonical(S: Iterable[LatticePoint]) -> frozenset[LatticePoint]:
    """Translate S so that its lexicographically least point is the origin."""
    pts = [tuple(p) for p in S]
    if not pts:
        raise UsageError("cannot canonicalise an empty set")
    low = min(pts)
    return frozenset(sub(p, low) for p in pts)


def is_connected(S: Iterable[LatticePoint], g: CayleyGraphSpec) -> bool:
    pts = _as_set(S, g)
    if not pts:
        return True
    start = next(iter(pts))
    seen = {start}
    stack = [start]
    while stack:
        p = stack.pop()
        for q in neighbors(p, g):
            if q in pts and q not in seen:
                seen.add(q)
                stack.append(q)
    return len(seen) == len(pts)
