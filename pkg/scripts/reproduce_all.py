"""Write every computed artifact to one directory via the CLI.

    python3 scripts/reproduce_all.py --out results/ [--threads 4]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from isop.cli import run

JOBS = [
    ("table.csv", ["table", "--format", "csv"]),
    ("solve_n10.json", ["solve", "--n", "10"]),
    ("base_cases.json", ["verify", "base-cases"]),
    ("inductive.json", ["verify", "inductive"]),
    ("nested.json", ["verify", "nested"]),
    ("sequence.json", ["sequence"]),
    ("order_55.csv", ["order", "--n", "55", "--format", "csv"]),
    ("hull_k3.json", ["hull", "--k", "3"]),
    ("counterexample.json", ["counterexample", "--n-max", "10"]),
    ("order_55.svg", ["render", "--n", "55"]),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    status = 0
    for name, argv in JOBS:
        if argv[0] == "verify" and argv[1] == "inductive":
            argv = argv + ["--threads", str(args.threads)]
        start = time.perf_counter()
        code = run(argv + ["--out", str(args.out / name)])
        print(f"{name:24s} exit {code}  {time.perf_counter() - start:6.2f}s", flush=True)
        status = status or code
    return status


if __name__ == "__main__":
    sys.exit(main())
