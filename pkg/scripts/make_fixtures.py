"""Regenerate the stored small-cycle certificates with the exact solver.

    python scripts/make_fixtures.py [--out DIR]

Each C_n, 3 <= n <= 15, is solved exactly; the first certificate in canonical
search order is written. Fails if a solved value disagrees with the formula.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from locrainbow.certificates import dumps_certificate
from locrainbow.coloring import check_locating_rainbow
from locrainbow.formulas import rvcl_cycle_formula
from locrainbow.graph import cycle
from locrainbow.solver import solve_rvcl

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "locrainbow" / "data" / "v1"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = parser.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for n in range(3, 16):
        g = cycle(n)
        report = solve_rvcl(g)
        if report.value != rvcl_cycle_formula(n):
            print(f"C_{n}: solver {report.value} != formula {rvcl_cycle_formula(n)}", file=sys.stderr)
            return 1
        assert check_locating_rainbow(g, report.certificate)
        path = args.out / f"cycle_{n:02d}.json"
        path.write_text(dumps_certificate(g, report.certificate, family="cycle"), encoding="utf-8")
        print(f"C_{n}: k={report.value} -> {path.name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
