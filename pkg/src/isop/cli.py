"""Command-line entry point: `isop <subcommand> [flags]`.

Exit codes: 0 success, 1 verification failure or runtime error, 2 usage error.
Every failure also writes a one-line JSON record to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .lattice import UsageError, edge_boundary, induced_edge_count
from .oracle import Budget, BudgetExceeded, max_induced_edges
from .polygon import angle_condition_holds, boundary_stats, hull, params_from_hull, vertex_count
from .trilattice import TRI_SPEC, special_n, table_rows

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageExit(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D401 - argparse hook
        raise _UsageExit(f"{self.prog}: {message}")


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    n_max: int | None = None
    k: int | None = None
    d: int | None = None
    budget_sets: int = Budget().max_sets
    threads: int = 1
    format: str = "json"
    out: Path | None = None
    target: str | None = None
    points: str | None = None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="isop", description="Edge-isoperimetric tools for the 12-neighbour triangular lattice.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, formats=("json",), **flags):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--out", type=Path)
        for flag, kw in flags.items():
            sp.add_argument(f"--{flag.replace('_', '-')}", **kw)
        return sp

    add("table", "closed-form optimum and increments", ("csv", "json"),
        n_max={"type": _positive, "default": 55}, n={"type": _positive, "help": "single row"})
    add("solve", "exact optimum by exhaustive search", ("json",),
        n={"type": _positive, "required": True},
        d={"type": int, "help": "use G_d instead of the triangular lattice"},
        budget_sets={"type": _positive, "default": Budget().max_sets},
        threads={"type": _positive, "default": 1})
    add("order", "nested ordering prefix", ("jsonl", "csv", "json"),
        n={"type": _positive, "default": 55})
    vp = sub.add_parser("verify", help="re-run a computer-assisted check")
    vp.add_argument("target", choices=("base-cases", "inductive", "nested"))
    vp.add_argument("--format", choices=("json",), default="json")
    vp.add_argument("--out", type=Path)
    vp.add_argument("--threads", type=_positive, default=1)
    vp.add_argument("--n-max", type=_positive, default=2167)
    add("sequence", "side-fill move sequence from the move graph", ("json",))
    hp = add("hull", "hull of a point list (or of an ordering prefix)", ("json", "svg"),
             n={"type": _positive}, k={"type": _positive, "help": "use n = 24k^2 - 24k + 7"})
    hp.add_argument("points", nargs="?", help="JSON file with [[a, b], ...]; '-' reads stdin")
    add("counterexample", "finite checks on G_d", ("json",),
        n_max={"type": _positive, "default": 8}, d={"type": int, "default": 2},
        k={"type": _positive, "default": 4},
        budget_sets={"type": _positive, "default": Budget().max_sets},
        threads={"type": _positive, "default": 1})
    add("render", "SVG of an ordering prefix", ("svg",),
        n={"type": _positive, "default": 55}, k={"type": _positive})
    return p


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    fields = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__ and v is not None}
    return RunConfig(**fields)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        cfg.out.write_text(text, encoding="utf-8")


def _table(cfg: RunConfig) -> int:
    top = cfg.n if cfg.n is not None else cfg.n_max
    if top < 3:
        raise UsageError("the closed form starts at n = 3")
    rows = table_rows(top, top) if cfg.n is not None else table_rows(top)
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "e", "delta"])
        for n, e, delta in rows:
            w.writerow([n, e, "" if delta is None else delta])
        _emit(buf.getvalue(), cfg)
    else:
        _emit(_json({"rows": [{"n": n, "e": e, "delta": d} for n, e, d in rows]}), cfg)
    return EXIT_OK


def _solve(cfg: RunConfig) -> int:
    if cfg.d is None:
        g = TRI_SPEC
    else:
        from .counterexample import counterexample_spec

        g = counterexample_spec(cfg.d)
    res = max_induced_edges(g, cfg.n, Budget(max_sets=cfg.budget_sets), cfg.threads)
    _emit(_json(res.to_json()), cfg)
    return EXIT_OK


def _order(cfg: RunConfig) -> int:
    from .sequencer import ordering_stream

    entries = list(ordering_stream(cfg.n))
    recs = [{"index": e.index, "a": e.point[0], "b": e.point[1], "edges_added": e.edges_added,
             "cumulative_edges": e.cumulative_edges} for e in entries]
    if cfg.format == "jsonl":
        _emit("".join(json.dumps(r) + "\n" for r in recs), cfg)
    elif cfg.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(recs[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(recs)
        _emit(buf.getvalue(), cfg)
    else:
        _emit(_json({"entries": recs}), cfg)
    return EXIT_OK


def _verify(cfg: RunConfig) -> int:
    if cfg.target == "base-cases":
        from .verifier import verify_base_cases

        report = verify_base_cases().to_json()
    elif cfg.target == "inductive":
        from .verifier import verify_inductive_cases

        report = verify_inductive_cases(threads=cfg.threads).to_json()
    else:
        from .sequencer import verify_nested

        report = verify_nested(cfg.n_max).to_json()
    _emit(_json(report), cfg)
    if report["verdict"] != "PASS":
        _error("verification failed", check=report["check"])
        return EXIT_FAIL
    return EXIT_OK


def _sequence(cfg: RunConfig) -> int:
    from .sequencer import build_aux_graph, find_side_sequence, validate_path

    graph = build_aux_graph()
    moves = find_side_sequence(graph)
    steps = validate_path(moves, graph)
    report = {
        "nodes": graph.node_count,
        "edges": graph.edge_count,
        "nonzero_constant_nodes": [n.as_tuple() for n in graph.nonzero_constant],
        "length": len(moves),
        "moves": moves,
        "steps": [{"side": s.label, "offsets": list(s.node.as_tuple()), "a": s.a, "c": s.c,
                   "L": s.L, "Q": s.Q} for s in steps],
    }
    _emit(_json(report), cfg)
    return EXIT_OK


def _read_points(source: str) -> frozenset:
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
        pts = frozenset((int(a), int(b)) for a, b in data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"expected a JSON list of [a, b] pairs: {exc}") from exc
    if not pts:
        raise UsageError("empty point list")
    return pts


def _hull(cfg: RunConfig) -> int:
    if cfg.points is not None:
        pts = _read_points(cfg.points)
    elif cfg.n is not None or cfg.k is not None:
        from .sequencer import ordering_stream

        n = cfg.n if cfg.n is not None else special_n(cfg.k)
        pts = frozenset(e.point for e in ordering_stream(n))
    else:
        raise UsageError("hull needs a point file, --n or --k")
    h = hull(pts)
    if cfg.format == "svg":
        from .render import svg_document

        _emit(svg_document(sorted(h.points)), cfg)
        return EXIT_OK
    params = params_from_hull(h)
    formula = boundary_stats(params).boundary if angle_condition_holds(params) else None
    report = {"n": len(pts), "input_is_hull": len(h) == len(pts), "hull_size": len(h),
              "hull_points": [list(p) for p in sorted(h.points)],
              "u": list(params.u), "t": list(params.t), "b_u": params.b_u, "b_t": params.b_t,
              "hull_boundary_formula": formula,
              "hull_vertex_count": vertex_count(params),
              "hull_boundary": edge_boundary(h.points, TRI_SPEC),
              "input_boundary": edge_boundary(pts, TRI_SPEC),
              "input_edges": induced_edge_count(pts, TRI_SPEC)}
    _emit(_json(report), cfg)
    return EXIT_OK


def _counterexample(cfg: RunConfig) -> int:
    from .counterexample import cube_report, nesting_dag

    dag = nesting_dag(cfg.n_max, Budget(max_sets=cfg.budget_sets), cfg.threads)
    report = {"d": cfg.d, "cubes": [cube_report(cfg.d, k).to_json() for k in range(1, cfg.k + 1)],
              "nesting": dag.to_json()}
    _emit(_json(report), cfg)
    if not dag.complete:
        _error("oracle budget exceeded; nesting report is partial")
        return EXIT_FAIL
    return EXIT_OK


def _render(cfg: RunConfig) -> int:
    from .render import RenderConfig, render_svg, svg_document
    from .sequencer import ordering_stream

    n = special_n(cfg.k) if cfg.k is not None else cfg.n
    pts = [e.point for e in ordering_stream(n)]
    rc = RenderConfig(labels=n <= 60)
    if cfg.out is None:
        sys.stdout.write(svg_document(pts, rc))
    else:
        render_svg(pts, cfg.out, rc)
    return EXIT_OK


HANDLERS = {
    "table": _table, "solve": _solve, "order": _order, "verify": _verify,
    "sequence": _sequence, "hull": _hull, "counterexample": _counterexample, "render": _render,
}


def _error(message: str, **extra) -> None:
    sys.stderr.write(json.dumps({"error": message, **extra}) + "\n")


def run(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except _UsageExit as exc:
        _error(exc.message, kind="usage")
        return EXIT_USAGE
    try:
        return HANDLERS[cfg.command](cfg)
    except UsageError as exc:
        _error(str(exc), kind="usage")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        _error(str(exc), kind="budget", sets_explored=exc.sets_explored,
               best_lower_bound=exc.best_lower_bound)
        return EXIT_FAIL
    except (OSError, RuntimeError, AssertionError) as exc:
        _error(str(exc), kind=type(exc).__name__)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
