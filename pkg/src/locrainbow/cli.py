"""Command line: gen, check, solve, construct, reproduce.

Exit codes: 0 success/agreement, 1 check failure or disagreement, 2 input
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import graph as gr
from .certificates import dumps_certificate, load_certificate
from .coloring import Coloring, check_locating_rainbow, rainbow_codes
from .constructions import construct
from .errors import BudgetExceededError, CertificateError, InvalidOrderError, NotConnectedError, OutOfRangeError, ParseError
from .formulas import rvc_cycle_formula, rvcl_complete, rvcl_cycle_formula, rvcl_n2_formula, rvcl_n3_formula
from .solver import SolveOptions, solve_rvc, solve_rvcl

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

GENERATORS = {
    "cycle": gr.cycle,
    "complete": gr.complete,
    "n2": gr.regular_n2,
    "n3": gr.regular_n3,
}

INPUT_ERRORS = (ParseError, CertificateError, InvalidOrderError, OutOfRangeError, NotConnectedError, OSError, ValueError)


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_graph(path: str) -> gr.Graph:
    return gr.from_edge_list(_read(path))


def _positive_int(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return val


def parse_range(text: str) -> range:
    """'3..11' (inclusive) or a single '7'."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A..B") from None


# -- gen -----------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.family == "file":
        g = _load_graph(args.arg)
    else:
        try:
            n = int(args.arg)
        except ValueError:
            raise InputError(f"order must be an integer, got {args.arg!r}") from None
        g = GENERATORS[args.family](n)
    sys.stdout.write(gr.to_edge_list(g))
    return EXIT_OK


# -- check ---------------------------------------------------------------------


def format_code_table(g: gr.Graph, c: Coloring) -> str:
    codes = rainbow_codes(g, c)
    width = max(len(f"v_{g.n}"), 4)
    lines = [f"{'v':<{width}}  color  code"]
    for v, code in enumerate(codes, start=1):
        lines.append(f"{f'v_{v}':<{width}}  {c(v):>5}  ({', '.join(map(str, code))})")
    return "\n".join(lines)


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    c = load_certificate(_read(args.certificate), g)
    verdict = check_locating_rainbow(g, c)
    if args.codes and c.is_surjective():
        print(format_code_table(g, c))
    if verdict:
        print(f"OK k={c.k}")
        return EXIT_OK
    print(verdict.describe())
    return EXIT_FAIL


# -- solve ---------------------------------------------------------------------


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    opts = SolveOptions(node_budget=args.budget, parallel=args.parallel, k_max=args.k_max, workers=args.workers)
    try:
        report = (solve_rvc if args.rvc else solve_rvcl)(g, opts)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.json:
        sys.stdout.write(dumps_certificate(g, report.certificate, family=args.family, report=report))
        return EXIT_OK
    label = "rvc" if args.rvc else "rvcl"
    print(f"{label} = {report.value}")
    print(f"lower bound {report.lower_bound} ({report.lower_bound_source}), {report.nodes} nodes, {report.elapsed * 1000:.1f} ms")
    print("colors " + " ".join(map(str, report.certificate.colors)))
    return EXIT_OK


# -- construct -----------------------------------------------------------------


def cmd_construct(args) -> int:
    c = construct(args.family, args.n)
    g = GENERATORS[args.family](args.n)
    sys.stdout.write(dumps_certificate(g, c, family=args.family))
    return EXIT_OK


# -- reproduce -----------------------------------------------------------------

CSV_COLUMNS = ["family", "n", "formula", "construction_k", "solver", "agree"]


@dataclass
class Row:
    family: str
    n: int
    formula: int
    construction_k: str = ""
    solver: str = ""
    agree: bool = True

    def as_list(self) -> list[str]:
        return [self.family, str(self.n), str(self.formula), self.construction_k, self.solver, "yes" if self.agree else "NO"]


def _family_spec(family: str):
    """(graph builder, formula, construction or None, solver)"""
    if family == "cycle":
        return gr.cycle, rvcl_cycle_formula, lambda n: construct("cycle", n), solve_rvcl
    if family == "cycle-rvc":
        return gr.cycle, rvc_cycle_formula, None, solve_rvc
    if family == "complete":
        return gr.complete, rvcl_complete, lambda n: Coloring(tuple(range(1, n + 1)), n), solve_rvcl
    if family == "n2":
        return gr.regular_n2, rvcl_n2_formula, lambda n: construct("n2", n), solve_rvcl
    if family == "n3":
        return gr.regular_n3, rvcl_n3_formula, lambda n: construct("n3", n), solve_rvcl
    raise ValueError(family)


def reproduce_row(family: str, n: int, exact: bool, opts: SolveOptions) -> Row:
    build, formula, make, solve = _family_spec(family)
    g = build(n)
    row = Row(family, n, formula(n))
    if make is not None:
        c = make(n)
        if check_locating_rainbow(g, c) and c.k == row.formula:
            row.construction_k = str(c.k)
        else:
            row.construction_k = f"FAIL({c.k})"
            row.agree = False
    if exact:
        try:
            report = solve(g, opts)
        except BudgetExceededError:
            row.solver = "budget"
        else:
            row.solver = str(report.value)
            row.agree = row.agree and report.value == row.formula
    return row


def render_table(rows: list[Row]) -> str:
    table = [CSV_COLUMNS] + [r.as_list() for r in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(CSV_COLUMNS))]
    out = []
    for j, line in enumerate(table):
        out.append("  ".join(cell.rjust(w) if i else cell.ljust(w) for i, (cell, w) in enumerate(zip(line, widths))))
        if j == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out)


def render_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(r.as_list() for r in rows)
    return buf.getvalue()


DEFAULT_RANGES = {
    "complete": range(3, 9),
    "cycle": range(3, 41),
    "n2": range(4, 41, 2),
    "n3": range(5, 51),
}


def cmd_reproduce(args) -> int:
    requested = {
        "complete": args.complete,
        "cycle": args.cycles,
        "cycle-rvc": args.rvc_cycles,
        "n2": args.n2,
        "n3": args.n3,
    }
    if not any(requested.values()):
        requested.update(DEFAULT_RANGES)
    exact = args.exact and not args.construct_only
    opts = SolveOptions(node_budget=args.budget, parallel=args.parallel)
    rows = []
    for family in sorted(requested):
        ns = requested[family]
        if not ns:
            continue
        for n in ns:
            if family == "n2" and n % 2:
                continue
            try:
                rows.append(reproduce_row(family, n, exact, opts))
            except (InvalidOrderError, OutOfRangeError) as exc:
                raise InputError(f"{family} n={n}: {exc}") from None
    if args.csv == "-":
        sys.stdout.write(render_csv(rows))
    else:
        print(render_table(rows))
        if args.csv:
            Path(args.csv).write_text(render_csv(rows), encoding="utf-8")
    bad = [r for r in rows if not r.agree]
    print(f"{len(rows) - len(bad)}/{len(rows)} rows agree", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


# -- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="locrainbow", description="Locating rainbow colorings of graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit an edge list for a graph family")
    p.add_argument("family", choices=[*GENERATORS, "file"])
    p.add_argument("arg", help="order n, or a path for 'file'")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="verify a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--codes", action="store_true", help="print the rainbow code table")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="compute rvcl (or rvc) exactly")
    p.add_argument("graph")
    p.add_argument("--rvc", action="store_true", help="rainbow vertex connection number instead")
    p.add_argument("--budget", type=_positive_int, help="node budget")
    p.add_argument("--k-max", type=_positive_int, dest="k_max")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--workers", type=_positive_int)
    p.add_argument("--json", action="store_true", help="print the certificate with a report object")
    p.add_argument("--family", help="family tag for the JSON certificate")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("construct", help="emit a construction certificate")
    p.add_argument("family", choices=["cycle", "n2", "n3"])
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("reproduce", help="tabulate formula vs construction vs solver")
    p.add_argument("--cycles", type=parse_range)
    p.add_argument("--rvc-cycles", type=parse_range, dest="rvc_cycles")
    p.add_argument("--complete", type=parse_range)
    p.add_argument("--n2", type=parse_range)
    p.add_argument("--n3", type=parse_range)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="also run the exact solver")
    mode.add_argument("--construct-only", action="store_true", dest="construct_only")
    p.add_argument("--budget", type=_positive_int, default=5_000_000, help="solver node budget per instance")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--csv", help="write CSV to this path ('-' for stdout instead of the table)")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, *INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
