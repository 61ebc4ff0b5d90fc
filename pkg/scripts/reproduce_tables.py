"""Reproduce the value tables: formula, checked construction and exact solver.

    python scripts/reproduce_tables.py [--out DIR] [--budget N] [--parallel]

Writes one CSV per family into DIR (default ``results/``) and prints each
table. Solver columns cover the orders the exact search handles in seconds;
larger orders are checked at the construction level only.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from locrainbow.cli import main as cli_main

# (file stem, reproduce flags)
RUNS = [
    ("cycles_exact", ["--cycles", "3..18", "--exact"]),
    ("cycles_construct", ["--cycles", "3..200", "--construct-only"]),
    ("rvc_cycles_exact", ["--rvc-cycles", "3..16", "--exact"]),
    ("complete_exact", ["--complete", "3..9", "--exact"]),
    ("n2_exact", ["--n2", "4..12", "--exact"]),
    ("n2_construct", ["--n2", "4..100", "--construct-only"]),
    ("n3_exact", ["--n3", "5..12", "--exact"]),
    ("n3_construct", ["--n3", "5..100", "--construct-only"]),
]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("results"))
    parser.add_argument("--budget", type=int, default=5_000_000)
    parser.add_argument("--parallel", action="store_true")
    args = parser.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for stem, flags in RUNS:
        print(f"== {stem}")
        extra = ["--budget", str(args.budget)] + (["--parallel"] if args.parallel else [])
        code = cli_main(["reproduce", *flags, *extra, "--csv", str(args.out / f"{stem}.csv")])
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
