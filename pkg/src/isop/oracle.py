"""Exact maximum induced edge counts on small vertex sets by exhaustive search.

Connected sets are grown Redelmeier-style from a root at the origin, adding
only cells that are lexicographically greater than the root.  Every
translation class then appears exactly once, with its least point at the
origin.

Branch and bound (both bounds assume best(r) is known exactly for r < n):
  * edges: E + (sum of the r largest neighbour counts into S over untried
    cells) + best(r) must reach the incumbent, because a future cell adjacent
    to S is always an untried cell;
  * minimum degree: in a set with E >= T edges every vertex has degree
    >= T - best(n - 1), and a vertex can still gain at most
    min(#untried neighbours, r) edges.
Ties with the incumbent are kept so that every optimal set is reported.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .lattice import CayleyGraphSpec, LatticePoint, UsageError, canonical, induced_edge_count


@dataclass(frozen=True)
class Budget:
    max_sets: int = 50_000_000
    wall_seconds: float = 600.0


class BudgetExceeded(RuntimeError):
    def __init__(self, n: int, sets_explored: int, best_lower_bound: int):
        super().__init__(
            f"budget exceeded at n={n} after {sets_explored} sets; best found {best_lower_bound}"
        )
        self.n = n
        self.sets_explored = sets_explored
        self.best_lower_bound = best_lower_bound


CanonicalSet = frozenset


@dataclass
class OracleResult:
    n: int
    best_edges: int
    best_boundary: int
    witnesses: list[tuple[LatticePoint, ...]]
    sets_explored: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "best_edges": self.best_edges,
            "best_boundary": self.best_boundary,
            "witnesses": [[list(p) for p in w] for w in self.witnesses],
            "sets_explored": self.sets_explored,
        }


class _Codec:
    """Points within radius R of the origin as integers, first coordinate most significant."""

    def __init__(self, g: CayleyGraphSpec, n: int):
        reach = max(abs(x) for u in g.generators for x in u)
        self.R = reach * max(n, 1) + 1
        self.W = 2 * self.R + 1
        self.d = g.dimension
        self.origin = self.encode((0,) * self.d)
        self.deltas = tuple(self.encode(u) - self.origin for u in g.generators)

    def encode(self, p) -> int:
        c = 0
        for x in p:
            c = c * self.W + (x + self.R)
        return c

    def decode(self, c: int) -> LatticePoint:
        out = []
        for _ in range(self.d):
            c, r = divmod(c, self.W)
            out.append(r - self.R)
        return tuple(reversed(out))


@dataclass
class _SubtreeResult:
    best: int
    witnesses: list[tuple[LatticePoint, ...]] = field(default_factory=list)
    explored: int = 0
    aborted: bool = False


class _Search:
    def __init__(self, g, n, best_smaller, lower_bound, prune, max_sets, deadline):
        self.codec = _Codec(g, n)
        self.n = n
        self.best_smaller = best_smaller
        self.prune = prune
        self.max_sets = max_sets
        self.deadline = deadline
        self.incumbent = lower_bound
        self.witnesses: list[frozenset[int]] = []
        self.explored = 0
        origin = self.codec.origin
        self.S = [origin]
        self.in_s = {origin}
        self.deg = {origin: 0}
        self.reached = {origin}

    def _neighbours_in_s(self, c: int) -> int:
        in_s = self.in_s
        return sum(1 for d in self.codec.deltas if c + d in in_s)

    def _expand(self, c: int) -> list[int]:
        added = []
        for d in self.codec.deltas:
            w = c + d
            if w > self.codec.origin and w not in self.reached:
                self.reached.add(w)
                added.append(w)
        return added

    def _push(self, c: int) -> int:
        ec = 0
        for d in self.codec.deltas:
            w = c + d
            if w in self.in_s:
                ec += 1
                self.deg[w] += 1
        self.S.append(c)
        self.in_s.add(c)
        self.deg[c] = ec
        return ec

    def _pop(self, c: int, added: list[int]) -> None:
        self.S.pop()
        self.in_s.discard(c)
        del self.deg[c]
        for d in self.codec.deltas:
            w = c + d
            if w in self.in_s:
                self.deg[w] -= 1
        for w in added:
            self.reached.discard(w)

    def _pruned(self, untried: list[int], E: int) -> bool:
        r = self.n - len(self.S)
        T = self.incumbent
        counts = sorted((self._neighbours_in_s(c) for c in untried), reverse=True)[:r]
        if E + sum(counts) + self.best_smaller[r] < T:
            return True
        delta = T - self.best_smaller[self.n - 1]
        if delta > 0:
            pool = set(untried)
            for v in self.S:
                avail = sum(1 for d in self.codec.deltas if v + d in pool)
                if self.deg[v] + min(avail, r) < delta:
                    return True
        return False

    def run(self, untried: list[int], E: int) -> None:
        self.explored += 1
        if self.explored > self.max_sets or (
            self.deadline is not None and self.explored % 4096 == 0 and time.monotonic() > self.deadline
        ):
            raise _Abort
        if len(self.S) == self.n:
            if E > self.incumbent:
                self.incumbent = E
                self.witnesses.clear()
            if E == self.incumbent:
                self.witnesses.append(frozenset(self.S))
            return
        if self.prune and self._pruned(untried, E):
            return
        for i, c in enumerate(untried):
            added = self._expand(c)
            ec = self._push(c)
            self.run(untried[i + 1:] + added, E + ec)
            self._pop(c, added)

    def initial_untried(self) -> list[int]:
        return self._expand(self.codec.origin)

    def points(self, cells) -> tuple[LatticePoint, ...]:
        return tuple(sorted(self.codec.decode(c) for c in cells))


class _Abort(Exception):
    pass


def _run_subtree(args) -> _SubtreeResult:
    g, n, best_smaller, lower_bound, prune, max_sets, deadline, index = args
    s = _Search(g, n, best_smaller, lower_bound, prune, max_sets, deadline)
    untried = s.initial_untried()
    try:
        if index is None:
            s.run(untried, 0)
        else:
            # Sets whose second cell is untried[index]; earlier cells are excluded.
            c = untried[index]
            added = s._expand(c)
            ec = s._push(c)
            s.run(untried[index + 1:] + added, ec)
    except _Abort:
        return _SubtreeResult(s.incumbent, [], s.explored, aborted=True)
    return _SubtreeResult(s.incumbent, [s.points(w) for w in s.witnesses], s.explored)


def _solve_exact(g, n, best_smaller, prune, budget, threads) -> OracleResult:
    deadline = time.monotonic() + budget.wall_seconds if budget.wall_seconds else None
    lower_bound = best_smaller[n - 1] + 1 if n >= 2 else 0
    if n <= 2:
        tasks = [(g, n, best_smaller, lower_bound, prune, budget.max_sets, deadline, None)]
        root_explored = 0
    else:
        width = len(_Search(g, n, best_smaller, 0, prune, 0, None).initial_untried())
        tasks = [
            (g, n, best_smaller, lower_bound, prune, budget.max_sets, deadline, i)
            for i in range(width)
        ]
        root_explored = 1
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_run_subtree, tasks))
    else:
        parts = []
        for t in tasks:
            parts.append(_run_subtree(t))
            if parts[-1].aborted:
                break
    explored = root_explored + sum(p.explored for p in parts)
    best = max(p.best for p in parts)
    if any(p.aborted for p in parts) or explored > budget.max_sets:
        raise BudgetExceeded(n, explored, best)
    witnesses = sorted(w for p in parts if p.best == best for w in p.witnesses)
    if not witnesses:
        raise AssertionError(f"no set reaches the lower bound {lower_bound} at n={n}")
    return OracleResult(n, best, g.degree * n - 2 * best, witnesses, explored)


def max_induced_edges_table(
    g: CayleyGraphSpec,
    n_max: int,
    budget: Budget | None = None,
    threads: int = 1,
    prune: bool = True,
) -> list[OracleResult]:
    """Oracle results for n = 1..n_max; each size reuses the smaller optima as bounds."""
    if n_max < 1:
        raise UsageError(f"n must be positive, got {n_max}")
    budget = budget or Budget()
    best_smaller = [0]
    out = []
    for n in range(1, n_max + 1):
        res = _solve_exact(g, n, best_smaller, prune, budget, threads)
        best_smaller.append(res.best_edges)
        out.append(res)
    return out


def max_induced_edges(
    g: CayleyGraphSpec,
    n: int,
    budget: Budget | None = None,
    threads: int = 1,
    prune: bool = True,
) -> OracleResult:
    return max_induced_edges_table(g, n, budget, threads, prune)[-1]


def enumerate_connected_sets(
    g: CayleyGraphSpec, n: int, budget: Budget | None = None
) -> Iterator[frozenset[LatticePoint]]:
    """Each translation class of connected n-sets once, least point at the origin."""
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    budget = budget or Budget()
    s = _Search(g, n, None, 0, False, budget.max_sets, None)
    count = 0

    def grow(untried):
        nonlocal count
        if len(s.S) == n:
            count += 1
            if count > budget.max_sets:
                raise BudgetExceeded(n, count, -1)
            yield frozenset(s.codec.decode(c) for c in s.S)
            return
        for i, c in enumerate(untried):
            added = s._expand(c)
            s._push(c)
            yield from grow(untried[i + 1:] + added)
            s._pop(c, added)

    yield from grow(s.initial_untried())


def naive_connected_classes(g: CayleyGraphSpec, n: int) -> set[frozenset[LatticePoint]]:
    """Translation classes by filtering every n-subset of a box around the origin."""
    from .lattice import is_connected

    reach = max(abs(x) for u in g.generators for x in u)
    radius = reach * (n - 1)
    box = [p for p in itertools.product(range(-radius, radius + 1), repeat=g.dimension)
           if p > (0,) * g.dimension]
    out = set()
    for rest in itertools.combinations(box, n - 1):
        S = ((0,) * g.dimension,) + rest
        if is_connected(S, g):
            out.add(canonical(S))
    return out


def windowed_unrestricted_max(g: CayleyGraphSpec, n: int, radius: int) -> int:
    """Max induced edges over all n-subsets, connected or not, of a cube of the given radius."""
    box = list(itertools.product(range(-radius, radius + 1), repeat=g.dimension))
    return max(induced_edge_count(S, g) for S in itertools.combinations(box, n))


def partition_max(best: list[int], n: int) -> int:
    """Best edge count of a disjoint union of connected optima with total size n."""
    table = [0] * (n + 1)
    for m in range(1, n + 1):
        table[m] = max(best[j] + table[m - j] for j in range(1, m + 1))
    return table[n]
