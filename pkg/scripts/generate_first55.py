"""Regenerate the shipped first-55 ordering asset."""

import argparse
from pathlib import Path

from isop.polygon import TwelveGonParams, params_from_hull
from isop.sequencer import generate_first55, verify_nested, write_first55

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "isop" / "data" / "first55.jsonl"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = ap.parse_args()
    entries = generate_first55()
    report = verify_nested(55, entries)
    if not report.passed:
        raise SystemExit(f"generated ordering fails: {report}")
    final = params_from_hull({e.point for e in entries})
    if final != TwelveGonParams.regular(2, 1):
        raise SystemExit(f"final set is not the (2, 1) 12-gon: {final}")
    write_first55(entries, args.out)
    print(f"wrote {len(entries)} entries to {args.out}")


if __name__ == "__main__":
    main()
