"""Command-line front end.

Fillings are given as a file path, ``-`` for stdin, or inline with ``/``
separating rows (top row first), e.g. ``mahonian stats "3 / 4 1 2 / 3 3 3"``.

Exit codes: 0 success, 1 violations found, 2 usage, parse or budget error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .bijections import BIJECTIONS, BijectionTrace
from .filling import Filling, FillingError, is_rectangle, parse_any, serialize, to_document, validate_partition
from .operators import OperatorError, TraceStep, phi, range_swap, rho, row_swap
from .poly import DEFAULT_BUDGET, VARS, BudgetExceeded, class_poly, macdonald_poly
from .stats import STATISTICS, stat_bundle
from . import verify as V

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2

CLASS_THEOREMS = ("T1", "T2", "invq", "transpose-maj")
SUITES = ("phi", "gamma", "theta")
THEOREMS = CLASS_THEOREMS + SUITES + V.LEMMA_SUITES + ("macdonald",)


class UsageError(Exception):
    pass


# -- input / output helpers --------------------------------------------------


def read_filling(source: str) -> Filling:
    if source == "-":
        text = sys.stdin.read()
    elif os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = "\n".join(part.strip() for part in source.split("/"))
    return parse_any(text)


def parse_shape(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as exc:
        raise UsageError(f"bad shape {text!r}") from exc
    try:
        validate_partition(parts)
    except FillingError as exc:
        raise UsageError(str(exc)) from exc
    return parts


def parse_weights(text: str) -> dict[str, str]:
    weights = {}
    for item in text.split(","):
        stat, _, var = item.partition("=")
        stat, var = stat.strip(), var.strip()
        if stat not in STATISTICS or var not in VARS:
            raise UsageError(f"bad weight {item!r}; expected stat=var with stat in {sorted(STATISTICS)} and var in {VARS}")
        weights[stat] = var
    return weights


class Printer:
    def __init__(self, bottom_up: bool):
        self.bottom_up = bottom_up

    def lines(self, f: Filling) -> list[str]:
        out = serialize(f).splitlines()
        return out[::-1] if self.bottom_up else out

    def rows(self, f: Filling) -> list[list[int]]:
        rows = to_document(f)["rows_top_to_bottom"]
        return rows[::-1] if self.bottom_up else rows

    def step_text(self, n: int, step: TraceStep) -> str:
        head = f"step {n}: {step.op}"
        if step.column is not None:
            head += f" col={step.column}"
        if step.rows:
            head += " rows=" + ",".join(f"[{lo},{hi}]" for lo, hi in step.rows)
        for k, v in sorted(step.params.items()):
            head += f" {k}={v}"
        return "\n".join([head] + ["  " + line for line in self.lines(step.after)])

    def step_doc(self, step: TraceStep) -> dict:
        doc = step.to_dict()
        doc["before"] = self.rows(step.before)
        doc["after"] = self.rows(step.after)
        return doc


def emit(args, text: str, doc: dict) -> None:
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(text)


# -- subcommands -------------------------------------------------------------


def cmd_stats(args, out: Printer) -> int:
    sigma = read_filling(args.filling)
    bundle = stat_bundle(sigma)
    emit(args, str(bundle), bundle.as_dict())
    return EXIT_OK


def cmd_apply(args, out: Printer) -> int:
    sigma = read_filling(args.filling)
    i = args.col
    steps: list[TraceStep] = []
    info: dict = {"op": args.op, "col": i}
    if args.op == "t":
        if args.row is not None:
            result = row_swap(sigma, i, args.row)
            lo = hi = args.row
        elif args.from_row is not None and args.to_row is not None:
            result = range_swap(sigma, i, args.from_row, args.to_row)
            lo, hi = args.from_row, args.to_row
        else:
            raise UsageError("--op t needs --row r or --from r --to s")
        info["rows"] = [lo, hi]
        steps.append(TraceStep("t", i, ((lo, hi),), sigma, result))
    elif args.op == "rho":
        flip = rho(sigma, i, args.row)
        result = flip.filling
        info.update(start_row=flip.start_row, end_row=flip.end_row, identity=flip.identity)
        if flip.undefined:
            info["undefined"] = True
        rows = () if flip.identity else ((flip.end_row, flip.start_row),)
        steps.append(TraceStep("rho", i, rows, sigma, result))
    else:
        result = phi(sigma, i, steps)
        info["components"] = [list(r) for r in steps[-1].rows]
    lines = []
    if args.op == "rho":
        if flip.identity:
            lines.append("identity" + (" (no differing row at or below the start)" if flip.undefined else ""))
        else:
            lines.append(f"start row: {flip.start_row}")
            lines.append(f"end row: {flip.end_row}")
    elif args.op == "phi":
        swapped = ",".join(f"[{lo},{hi}]" for lo, hi in steps[-1].rows) or "none"
        lines.append(f"swapped rows: {swapped}")
    if args.trace:
        lines.extend(out.step_text(n, s) for n, s in enumerate(steps, start=1))
    lines.extend(out.lines(result))
    doc = dict(info, result=out.rows(result))
    if args.trace:
        doc["trace"] = [out.step_doc(s) for s in steps]
    emit(args, "\n".join(lines), doc)
    return EXIT_OK


def cmd_bijection(args, out: Printer) -> int:
    sigma = read_filling(args.filling)
    trace = BijectionTrace(args.command, sigma) if args.trace else None
    result = BIJECTIONS[args.command](sigma, trace)
    lines = []
    if trace is not None:
        lines.extend(out.step_text(n, s) for n, s in enumerate(trace.steps, start=1))
        lines.append("result:")
    lines.extend(out.lines(result))
    doc = {"bijection": args.command, "input": out.rows(sigma), "result": out.rows(result)}
    if trace is not None:
        doc["trace"] = [out.step_doc(s) for s in trace.steps]
    emit(args, "\n".join(lines), doc)
    return EXIT_OK


def cmd_class_poly(args, out: Printer) -> int:
    sigma = read_filling(args.filling)
    weights = parse_weights(args.weights)
    poly = class_poly(sigma, weights, args.budget)
    emit(args, str(poly), {"weights": weights, "polynomial": str(poly)})
    return EXIT_OK


def cmd_macdonald(args, out: Printer) -> int:
    shape = parse_shape(args.shape)
    poly = macdonald_poly(shape, args.vars, args.stat, args.budget)
    doc = {
        "shape": list(shape),
        "vars": args.vars,
        "stat": args.stat,
        "terms": [{"content": list(c), "polynomial": str(poly.terms[c])} for c in sorted(poly.terms, reverse=True)],
    }
    emit(args, str(poly), doc)
    return EXIT_OK


def _class_table_text(sigma: Filling, out: Printer, budget: int) -> tuple[str, list[dict]]:
    rows = V.class_table(sigma, budget)
    lines = ["class members:"]
    docs = []
    for f, m, i, q in rows:
        lines.append(f"  {' / '.join(out.lines(f))}  maj={m} inv={i} quinv={q}")
        docs.append({"filling": out.rows(f), "maj": m, "inv": i, "quinv": q})
    return "\n".join(lines), docs


def run_verify(args) -> V.VerificationReport:
    name = args.theorem
    budget = args.budget
    if name in CLASS_THEOREMS:
        if args.filling is not None:
            return V.CLASS_CHECKS[name](read_filling(args.filling), budget)
        shapes = [parse_shape(s) for s in args.shape] if args.shape else None
        # the symmetry is only claimed for rectangles, so a default T2 sweep stays on them
        rect = args.rectangles_only or (name == "T2" and shapes is None)
        return V.sweep(args.max_size, args.max_entry, [name], args.workers, budget, rect, shapes=shapes)
    if name in SUITES:
        return V.check_suite(name, _verify_shapes(args, name), args.max_entry, args.workers, budget)
    if name in V.LEMMA_SUITES:
        if name in ("tables", "block-partition"):
            return V.check_lemma_suites(name, max_value=args.max_value, budget=budget)
        shapes = [parse_shape(s) for s in args.shape] if args.shape else None
        return V.check_lemma_suites(name, shapes, args.max_entry, workers=args.workers, budget=budget)
    if name == "macdonald":
        shapes = [parse_shape(s) for s in args.shape] if args.shape else [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2, 1)]
        return V.check_macdonald_shapes(shapes, args.vars, args.workers, budget)
    raise UsageError(f"unknown theorem {name!r}")


def _verify_shapes(args, kind: str) -> list[tuple[int, ...]]:
    if args.shape:
        return [parse_shape(s) for s in args.shape]
    shapes = [s for s in V.small_shapes(args.max_size) if s]
    if kind == "theta" or args.rectangles_only:
        shapes = [s for s in shapes if is_rectangle(s)]
    return shapes


def cmd_verify(args, out: Printer) -> int:
    report = run_verify(args)
    table_text, table_doc = "", None
    if args.theorem in ("T1", "T2") and args.filling is not None:
        table_text, table_doc = _class_table_text(read_filling(args.filling), out, args.budget)
    doc = report.to_dict()
    if table_doc is not None:
        doc["class_members"] = table_doc
    text = report.to_text() + ("\n" + table_text if table_text else "")
    emit(args, text, doc)
    print(f"elapsed: {report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


COMMANDS = {
    "stats": cmd_stats,
    "apply": cmd_apply,
    "gamma": cmd_bijection,
    "theta": cmd_bijection,
    "varphi": cmd_bijection,
    "class-poly": cmd_class_poly,
    "macdonald": cmd_macdonald,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--bottom-up", action="store_true", help="print rows bottom row first")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum fillings to enumerate")

    parser = argparse.ArgumentParser(prog="mahonian", description="Statistics, bijections and checks on Young diagram fillings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="print maj, inv, quinv, des and Ndes")
    p.add_argument("filling")

    p = sub.add_parser("apply", parents=[common], help="apply t, rho or phi on columns i, i+1")
    p.add_argument("filling")
    p.add_argument("--op", choices=("t", "rho", "phi"), required=True)
    p.add_argument("--col", type=int, required=True)
    p.add_argument("--row", type=int)
    p.add_argument("--from", dest="from_row", type=int)
    p.add_argument("--to", dest="to_row", type=int)
    p.add_argument("--trace", action="store_true")

    for name in ("gamma", "theta", "varphi"):
        p = sub.add_parser(name, parents=[common], help=f"apply the bijection {name}")
        p.add_argument("filling")
        p.add_argument("--trace", action="store_true")

    p = sub.add_parser("class-poly", parents=[common], help="generating polynomial of the row class")
    p.add_argument("filling")
    p.add_argument("--weights", default="maj=q,inv=t", help="comma list of stat=var, e.g. maj=q,inv=t,quinv=u")

    p = sub.add_parser("macdonald", parents=[common], help="finite-alphabet Macdonald polynomial")
    p.add_argument("--shape", required=True, help="comma separated parts, e.g. 3,2,1")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--stat", choices=("inv", "quinv"), default="inv")

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive check")
    p.add_argument("filling", nargs="?", help="class representative for T1, T2, invq, transpose-maj")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--max-entry", type=int, default=3)
    p.add_argument("--max-value", type=int, help="value range for tables and block-partition")
    p.add_argument("--shape", action="append", help="restrict to this shape (repeatable)")
    p.add_argument("--vars", type=int, default=3, help="alphabet size for macdonald")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--rectangles-only", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Printer(args.bottom_up)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, FillingError, OperatorError, BudgetExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
