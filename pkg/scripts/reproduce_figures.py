"""Regenerate the error curves behind every report preset.

    python3 scripts/reproduce_figures.py --out results/

Writes one CSV per preset (same columns as ``voigtft report``) and prints the
max-abs-diff summary of each curve.
"""
import argparse
import sys
import time
from pathlib import Path

from voigtft.cli import PRESETS, RunConfig, emit, print_summary, preset_rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--out", default="results", help="output directory")
    parser.add_argument("--only", nargs="*", choices=PRESETS, default=list(PRESETS))
    args = parser.parse_args(argv)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name in args.only:
        t0 = time.perf_counter()
        cols, rows, summary = preset_rows(name)
        emit(cols, rows, RunConfig(command="report", out=str(out / f"{name}.csv")), summary)
        print(f"# {name}: {len(rows)} rows in {time.perf_counter() - t0:.2f} s")
        print_summary(summary, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
