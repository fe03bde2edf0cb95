"""The graph G_d on Z^d generated by the unit vectors and +-2e_1.

Finite checks only: cube boundaries, the projection lower bound on the edge
boundary, Loomis-Whitney on samples, and the containment structure of optimal
sets at small sizes.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .lattice import CayleyGraphSpec, LatticePoint, UsageError, add, canonical, edge_boundary, sub
from .oracle import Budget, BudgetExceeded, max_induced_edges_table


def counterexample_spec(d: int) -> CayleyGraphSpec:
    if d < 2:
        raise UsageError(f"G_d needs d >= 2, got {d}")
    gens = []
    for i in range(d):
        e = tuple(int(j == i) for j in range(d))
        gens += [e, tuple(-x for x in e)]
    two = tuple(2 * int(j == 0) for j in range(d))
    gens += [two, tuple(-x for x in two)]
    return CayleyGraphSpec(d, tuple(gens), name=f"G_{d}")


def cube_set(d: int, k: int) -> frozenset[LatticePoint]:
    if d < 1 or k < 1:
        raise UsageError("cube needs d >= 1 and k >= 1")
    return frozenset(itertools.product(range(1, k + 1), repeat=d))


@dataclass(frozen=True)
class ProjectionProfile:
    sizes: tuple[int, ...]

    def loomis_whitney_holds(self, n: int) -> bool:
        return math.prod(self.sizes) >= n ** (len(self.sizes) - 1)


def projection_profile(S) -> ProjectionProfile:
    pts = [tuple(p) for p in S]
    if not pts:
        raise UsageError("projection of an empty set")
    d = len(pts[0])
    return ProjectionProfile(
        tuple(len({p[:i] + p[i + 1:] for p in pts}) for i in range(d))
    )


def projection_lower_bound(S) -> int:
    """4|P_1| + 2(|P_2| + ... + |P_d|): every line parallel to e_i meeting S leaves it twice,
    and along e_1 both the unit and the doubled step leave it."""
    sizes = projection_profile(S).sizes
    if len(sizes) < 2:
        raise UsageError("projection bound needs d >= 2")
    return 4 * sizes[0] + 2 * sum(sizes[1:])


def stated_cube_boundary(d: int, k: int) -> int:
    """The closed form 2(d + 1)k^(d - 1) quoted for the cube; see cube_report."""
    return 2 * (d + 1) * k ** (d - 1)


def counted_cube_boundary(d: int, k: int) -> int:
    """(2d + 4)k^(d - 1) for k >= 2: each e_1 row loses two unit and four doubled edges."""
    if k == 1:
        return 2 * d + 2
    return (2 * d + 4) * k ** (d - 1)


@dataclass(frozen=True)
class CubeReport:
    d: int
    k: int
    direct: int
    counted_formula: int
    stated_formula: int

    @property
    def discrepancy(self) -> int:
        return self.direct - self.stated_formula

    def to_json(self) -> dict:
        return {"d": self.d, "k": self.k, "direct": self.direct,
                "counted_formula": self.counted_formula,
                "stated_formula": self.stated_formula, "discrepancy": self.discrepancy}


def cube_report(d: int, k: int) -> CubeReport:
    direct = edge_boundary(cube_set(d, k), counterexample_spec(d))
    return CubeReport(d, k, direct, counted_cube_boundary(d, k), stated_cube_boundary(d, k))


def random_connected_set(rng: random.Random, g: CayleyGraphSpec, n: int) -> frozenset[LatticePoint]:
    """Random connected set grown from the origin by attaching random neighbours."""
    S = {(0,) * g.dimension}
    order = [(0,) * g.dimension]
    while len(S) < n:
        p = rng.choice(order)
        q = add(p, rng.choice(g.generators))
        if q not in S:
            S.add(q)
            order.append(q)
    return frozenset(S)


def contained_up_to_translation(A, B) -> bool:
    """Whether some translate of A lies inside B."""
    A, B = list(A), frozenset(B)
    a0 = min(A)
    for b in B:
        shift = sub(b, a0)
        if all(add(p, shift) in B for p in A):
            return True
    return False


@dataclass
class NestingReport:
    n_max: int
    complete: bool
    best_boundary: dict[int, int] = field(default_factory=dict)
    classes: dict[int, list[tuple[LatticePoint, ...]]] = field(default_factory=dict)
    extends: dict[int, list[bool]] = field(default_factory=dict)
    links: list[tuple[int, int, int]] = field(default_factory=list)
    longest_chain: list[int] = field(default_factory=list)
    message: str = ""

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "complete": self.complete,
            "message": self.message,
            "levels": [
                {
                    "n": n,
                    "best_boundary": self.best_boundary[n],
                    "optimal_classes": len(self.classes[n]),
                    "extends_optimally": self.extends.get(n, []),
                    "witnesses": [[list(p) for p in w] for w in self.classes[n]],
                }
                for n in sorted(self.classes)
            ],
            "links": [list(x) for x in self.links],
            "longest_chain": self.longest_chain,
        }


def nesting_dag(n_max: int, budget: Budget | None = None, threads: int = 1) -> NestingReport:
    """Containment DAG between optimal translation classes of consecutive sizes in G_2.

    A link (n, i, j) means a translate of class i at size n sits inside class j
    at size n + 1.  longest_chain lists class indices from n = 1 along one
    longest run of links.
    """
    g = counterexample_spec(2)
    report = NestingReport(n_max, True)
    try:
        results = max_induced_edges_table(g, n_max, budget, threads)
    except BudgetExceeded as exc:
        report.complete = False
        report.message = str(exc)
        results = max_induced_edges_table(g, exc.n - 1, budget, threads) if exc.n > 1 else []
    for r in results:
        report.best_boundary[r.n] = r.best_boundary
        report.classes[r.n] = [tuple(sorted(canonical(w))) for w in r.witnesses]
    sizes = sorted(report.classes)
    for n in sizes:
        if n + 1 not in report.classes:
            continue
        flags = []
        for i, A in enumerate(report.classes[n]):
            hit = False
            for j, B in enumerate(report.classes[n + 1]):
                if contained_up_to_translation(A, B):
                    report.links.append((n, i, j))
                    hit = True
            flags.append(hit)
        report.extends[n] = flags
    # Longest chain by dynamic programming over sizes from the top down.
    succ: dict[tuple[int, int], list[int]] = {}
    for n, i, j in report.links:
        succ.setdefault((n, i), []).append(j)
    depth: dict[tuple[int, int], int] = {}
    nxt: dict[tuple[int, int], int | None] = {}
    for n in reversed(sizes):
        for i in range(len(report.classes[n])):
            best, arg = 1, None
            for j in succ.get((n, i), []):
                if depth[(n + 1, j)] + 1 > best:
                    best, arg = depth[(n + 1, j)] + 1, j
            depth[(n, i)], nxt[(n, i)] = best, arg
    if sizes:
        start = max(range(len(report.classes[sizes[0]])), key=lambda i: depth[(sizes[0], i)])
        node: tuple[int, int] | None = (sizes[0], start)
        while node is not None:
            report.longest_chain.append(node[1])
            j = nxt[node]
            node = None if j is None else (node[0] + 1, j)
    return report
