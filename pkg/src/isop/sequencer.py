"""Growing one extremal 12-gon into the next by side fills, and the nested ordering.

A node is a 12-tuple of side offsets (cu_1..cu_6, ct_1..ct_6) meaning
u_i = k + cu_i and t_i = k + ct_i.  The walk starts at the regular 12-gon with
sides (k - 1, k - 2) and ends at (k, k - 1), which is the start node for k + 1.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator

from .lattice import UsageError, count_neighbors_in, induced_edge_count
from .polygon import (
    FUNCTIONALS,
    SIDE_LABELS,
    TwelveGonParams,
    evaluate,
    params_from_hull,
    points_in_support,
    side_index,
    support,
    vertex_count,
)
from .trilattice import TRI_SPEC, TriPoint, e_of_n, max_edges
from .verifier import EdgeFormula, offsets_edge_formula

MOVE_ORDER: tuple[str, ...] = tuple(f"u{i}" for i in range(1, 7)) + tuple(f"t{i}" for i in range(1, 7))
A_LIMIT = 33
K_MIN = 3
ASSET_ENV = "ISOP_ASSET_DIR"
ASSET_NAME = "first55.jsonl"


class InadmissibleMove(UsageError):
    pass


class AssetError(RuntimeError):
    pass


@dataclass(frozen=True)
class GonNode:
    cu: tuple[int, ...]
    ct: tuple[int, ...]

    @classmethod
    def initial(cls) -> "GonNode":
        return cls((-1,) * 6, (-2,) * 6)

    @classmethod
    def terminal(cls) -> "GonNode":
        return cls((0,) * 6, (-1,) * 6)

    def as_tuple(self) -> tuple[int, ...]:
        return self.cu + self.ct

    def closure_residuals(self) -> tuple[int, int]:
        # Linear in k with zero k-coefficient, so checking the offsets suffices.
        u1, u2, u3, u4, u5, u6 = self.cu
        t1, t2, t3, t4, t5, t6 = self.ct
        r1 = u1 - u4 + t1 - t4 - t2 + t5 - u3 + u6 - 2 * t3 + 2 * t6
        r2 = t1 - t4 + u2 - u5 + 2 * t2 - 2 * t5 + u3 - u6 + t3 - t6
        return r1, r2

    def formula(self) -> tuple[int, int, EdgeFormula]:
        """(L, Q, (a, c)) with n = 24k^2 + Lk + Q and e = 6n - sqrt(96n + a) + c."""
        return offsets_edge_formula(self.cu, self.ct)

    def params_at(self, k: int) -> TwelveGonParams:
        return TwelveGonParams(tuple(k + c for c in self.cu), tuple(k + c for c in self.ct))


def apply_side_fill(node: GonNode, label: str) -> GonNode:
    j = side_index(label)
    i = j // 2
    cu, ct = list(node.cu), list(node.ct)
    if j % 2:
        ct[i] -= 1
        cu[i] += 1
        cu[(i + 1) % 6] += 1
    else:
        cu[i] -= 3
        ct[(i - 1) % 6] += 1
        ct[i] += 1
    out = GonNode(tuple(cu), tuple(ct))
    if min(K_MIN + c for c in out.as_tuple()) < 0:
        raise InadmissibleMove(f"{label} gives a negative side at k={K_MIN}: {out.as_tuple()}")
    if out.closure_residuals() != (0, 0):
        raise AssertionError(f"side fill broke closure: {out}")
    return out


@dataclass
class AuxGraph:
    nodes: set[GonNode]
    edges: dict[GonNode, list[tuple[str, GonNode]]]
    parent: dict[GonNode, tuple[GonNode, str] | None]
    nonzero_constant: list[GonNode]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(v) for v in self.edges.values())


def node_admissible(node: GonNode, terminal_level: int) -> bool:
    """Filter used while growing the move graph.

    Short sides stay >= 1 and long sides >= 0 at k = 3, a < 33, and no node
    lies beyond the terminal's level (each move raises L by one); on the
    terminal's own level only the terminal is kept.
    """
    if min(node.cu) < 1 - K_MIN or min(node.ct) < -K_MIN:
        return False
    L, _, f = node.formula()
    if f.a >= A_LIMIT or L > terminal_level:
        return False
    return L < terminal_level or node == GonNode.terminal()


def build_aux_graph() -> AuxGraph:
    init, term = GonNode.initial(), GonNode.terminal()
    terminal_level = term.formula()[0]
    nodes = {init}
    edges: dict[GonNode, list[tuple[str, GonNode]]] = {}
    parent: dict[GonNode, tuple[GonNode, str] | None] = {init: None}
    nonzero = []
    queue = deque([init])
    while queue:
        x = queue.popleft()
        edges[x] = []
        if x == term:
            continue
        for label in MOVE_ORDER:
            try:
                y = apply_side_fill(x, label)
            except InadmissibleMove:
                continue
            if not node_admissible(y, terminal_level):
                continue
            edges[x].append((label, y))
            if y not in nodes:
                nodes.add(y)
                parent[y] = (x, label)
                queue.append(y)
                if y.formula()[2].c != 0:
                    nonzero.append(y)
    return AuxGraph(nodes, edges, parent, nonzero)


class NoPathError(AssertionError):
    pass


def find_side_sequence(graph: AuxGraph | None = None) -> list[str]:
    """Shortest move sequence from the initial to the terminal node, BFS tie-breaking."""
    graph = graph or build_aux_graph()
    term = GonNode.terminal()
    if term not in graph.parent:
        raise NoPathError("terminal node unreachable in the move graph")
    path = []
    node = term
    while graph.parent[node] is not None:
        node, label = graph.parent[node]
        path.append(label)
    return path[::-1]


@dataclass(frozen=True)
class PathStep:
    label: str | None
    node: GonNode
    a: int
    c: int
    L: int
    Q: int


def validate_path(labels: Iterable[str], graph: AuxGraph | None = None) -> list[PathStep]:
    """Walk a move sequence from the initial node, checking every node and the endpoint."""
    node = GonNode.initial()
    terminal_level = GonNode.terminal().formula()[0]
    L, Q, f = node.formula()
    steps = [PathStep(None, node, f.a, f.c, L, Q)]
    for label in labels:
        node = apply_side_fill(node, label)
        if graph is not None and node not in graph.nodes:
            raise NoPathError(f"{label} leaves the move graph at {node.as_tuple()}")
        if not node_admissible(node, terminal_level):
            raise NoPathError(f"{label} reaches inadmissible node {node.as_tuple()}")
        L, Q, f = node.formula()
        if f.c != 0:
            raise NoPathError(f"nonzero additive constant at {node.as_tuple()}")
        steps.append(PathStep(label, node, f.a, f.c, L, Q))
    if node != GonNode.terminal():
        raise NoPathError(f"path ends at {node.as_tuple()}, not the terminal node")
    return steps


def growth_bound_holds(steps: list[PathStep], k: int) -> bool:
    """f(n) + 5 >= e(n + 1) at every node of the path for this k."""
    for s in steps:
        n = 24 * k * k + s.L * k + s.Q
        if n < 3:
            return False
        root = 48 * k + s.L  # sqrt(96n + a)
        if 6 * n - root + s.c + 5 < e_of_n(n + 1):
            return False
    return True


# -- concrete ordering ---------------------------------------------------------


@dataclass(frozen=True)
class OrderingEntry:
    index: int
    point: TriPoint
    edges_added: int
    cumulative_edges: int


def _asset_path() -> Path:
    override = os.environ.get(ASSET_ENV)
    if override:
        return Path(override) / ASSET_NAME
    return Path(str(resources.files("isop") / "data" / ASSET_NAME))


def load_first55(path: Path | None = None) -> list[OrderingEntry]:
    path = path or _asset_path()
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise AssetError(f"cannot read ordering asset {path}: {exc}") from exc
    entries = []
    total = 0
    try:
        for i, line in enumerate(lines, 1):
            rec = json.loads(line)
            if rec["index"] != i:
                raise AssetError(f"asset index {rec['index']} out of sequence at line {i}")
            total += rec["edges_added"]
            entries.append(OrderingEntry(i, (rec["a"], rec["b"]), rec["edges_added"], total))
    except (ValueError, KeyError, TypeError) as exc:
        raise AssetError(f"corrupt ordering asset {path}: {exc}") from exc
    if len(entries) != 55:
        raise AssetError(f"ordering asset has {len(entries)} entries, expected 55")
    return entries


def side_fill_row(h: tuple[int, ...], label: str) -> list[TriPoint]:
    """Points added when side `label` of the hull with support h is pushed out by one line."""
    j = side_index(label)
    grown = list(h)
    grown[j] += 1
    pts = [p for p in points_in_support(tuple(grown)) if evaluate(FUNCTIONALS[j], p) == grown[j]]
    return sorted(pts)


def ordering_stream(n_max: int, first55: list[OrderingEntry] | None = None,
                    moves: list[str] | None = None) -> Iterator[OrderingEntry]:
    if n_max < 1:
        raise UsageError(f"n_max must be positive, got {n_max}")
    first55 = first55 if first55 is not None else load_first55()
    for e in first55[:n_max]:
        yield e
    if n_max <= len(first55):
        return
    moves = moves if moves is not None else find_side_sequence()
    pts = {e.point for e in first55}
    h = support(pts)
    if points_in_support(h) != frozenset(pts):
        raise AssetError("first 55 points are not a 12-gon")
    index, total = len(first55), first55[-1].cumulative_edges
    k = K_MIN
    node = GonNode.initial()
    while True:
        for label in moves:
            before = vertex_count(node.params_at(k))
            node = apply_side_fill(node, label)
            row = side_fill_row(h, label)
            if len(row) != vertex_count(node.params_at(k)) - before:
                raise AssertionError(f"row size mismatch for {label} at k={k}")
            h = tuple(x + (i == side_index(label)) for i, x in enumerate(h))
            for p in row:
                added = count_neighbors_in(p, pts, TRI_SPEC)
                pts.add(p)
                index += 1
                total += added
                yield OrderingEntry(index, p, added, total)
                if index >= n_max:
                    return
        if node != GonNode.terminal():
            raise AssertionError("move sequence does not end at the terminal node")
        node = GonNode.initial()
        k += 1


@dataclass
class NestedReport:
    n_max: int
    passed: bool
    first_bad_index: int | None
    message: str = ""

    def to_json(self) -> dict:
        return {"check": "nested", "verdict": "PASS" if self.passed else "FAIL",
                "n_max": self.n_max, "first_bad_index": self.first_bad_index,
                "message": self.message}


def verify_nested(n_max: int, entries: list[OrderingEntry] | None = None,
                  checkpoint: int = 500) -> NestedReport:
    """Recount the induced edges of every prefix independently of the stream's bookkeeping."""
    if n_max < 3:
        return NestedReport(n_max, True, None, "vacuous")
    entries = entries if entries is not None else list(ordering_stream(n_max))
    if len(entries) < n_max:
        return NestedReport(n_max, False, len(entries) + 1, "ordering too short")
    S: set[TriPoint] = set()
    edges = 0
    for e in entries[:n_max]:
        n = e.index
        if e.point in S:
            return NestedReport(n_max, False, n, f"repeated point {e.point}")
        gained = count_neighbors_in(e.point, S, TRI_SPEC)
        S.add(e.point)
        edges += gained
        if n % checkpoint == 0 or n == n_max:
            if induced_edge_count(S, TRI_SPEC) != edges:
                return NestedReport(n_max, False, n, "incremental count disagrees with recount")
        if edges != max_edges(n):
            return NestedReport(n_max, False, n, f"prefix has {edges} edges, optimum {max_edges(n)}")
        if n > 56 and gained not in (5, 6):
            return NestedReport(n_max, False, n, f"step adds {gained} edges")
    return NestedReport(n_max, True, None)


def generate_first55(size: int = 55) -> list[OrderingEntry]:
    """Backtracking search for an ordering whose every prefix is optimal."""
    prefix: list[TriPoint] = [(0, 0)]
    S = {(0, 0)}
    gains = [0]

    def grow(E: int) -> bool:
        n = len(prefix)
        if n == size:
            return True
        target = max_edges(n + 1) - E
        cands = sorted({q for p in prefix for q in _nbrs(p)} - S)
        for p in cands:
            c = count_neighbors_in(p, S, TRI_SPEC)
            if c != target:
                continue
            prefix.append(p)
            S.add(p)
            gains.append(c)
            if grow(E + c):
                return True
            prefix.pop()
            S.discard(p)
            gains.pop()
        return False

    if not grow(0):
        raise AssertionError("no nested ordering found")
    out, total = [], 0
    for i, (p, g) in enumerate(zip(prefix, gains), 1):
        total += g
        out.append(OrderingEntry(i, p, g, total))
    return out


def _nbrs(p: TriPoint) -> list[TriPoint]:
    return [(p[0] + da, p[1] + db) for da, db in TRI_SPEC.generators]


def write_first55(entries: list[OrderingEntry], path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for e in entries:
            fh.write(json.dumps({"index": e.index, "a": e.point[0], "b": e.point[1],
                                 "edges_added": e.edges_added}) + "\n")


def hull_params_of(points: Iterable[TriPoint]) -> TwelveGonParams:
    return params_from_hull(frozenset(points))

