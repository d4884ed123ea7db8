"""Command-line front door: build tables, run the pipeline, hunt counterexamples.

Exit codes: 0 success, 2 user error (bad dataset, bad flags, malformed
conjecture form), 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .conjectures import (
    render_equality,
    render_run,
    run_to_json,
    write_on_the_wall,
)
from .datasets import resolve_builtin
from .graphs import GraphError
from .parsing import ConjectureParseError, parse_conjecture_form
from .refine import ENUMERATOR_VERTEX_LIMIT, enumerate_connected_graphs, red_burton
from .rationals import format_rational
from .table import (
    GRAPH_DOMAIN,
    Hypothesis,
    KnowledgeTable,
    TableError,
    load_table,
    save_table,
    table_to_csv,
)

DATA_DIR_ENV = "TIGHTBOUNDS_DATA_DIR"


class UserError(Exception):
    """Anything the caller can fix; reported on stderr with exit code 2."""


def data_dir() -> Path:
    return Path(os.environ.get(DATA_DIR_ENV, "."))


def resolve_dataset(name: str) -> KnowledgeTable:
    """A builtin name, or a path to a saved table CSV."""
    try:
        builtin = resolve_builtin(name)
    except TableError as exc:
        raise UserError(str(exc)) from exc
    if builtin is not None:
        return builtin
    path = Path(name)
    if not path.is_file():
        path = data_dir() / name
    if not path.is_file():
        raise UserError(f"dataset not found: {name}")
    try:
        return load_table(path)
    except TableError as exc:
        raise UserError(str(exc)) from exc


def parse_hypotheses(spec: str | None, table: KnowledgeTable) -> list[Hypothesis] | None:
    """';'-separated conjunctions of ','-separated property names."""
    if spec is None:
        return None
    hypotheses = []
    for chunk in spec.split(";"):
        names = [name.strip() for name in chunk.split(",") if name.strip()]
        if not names:
            raise UserError(f"empty hypothesis in {spec!r}")
        h = Hypothesis(names)
        try:
            h.validate(table)
        except TableError as exc:
            raise UserError(str(exc)) from exc
        hypotheses.append(h)
    return hypotheses


def cmd_conjecture(args: argparse.Namespace) -> int:
    table = resolve_dataset(args.dataset)
    targets = [t.strip() for t in args.targets.split(",") if t.strip()]
    if not targets:
        raise UserError("at least one target is required")
    for target in targets:
        try:
            table.numeric_index(target)
        except TableError as exc:
            raise UserError(str(exc)) from exc
    hypotheses = parse_hypotheses(args.hypotheses, table)
    try:
        run = write_on_the_wall(
            table,
            targets,
            hypotheses=hypotheses,
            use_dalmatian=not args.no_dalmatian,
            limit=args.limit,
        )
    except ValueError as exc:
        raise UserError(str(exc)) from exc
    if args.direction != "both":
        kept = tuple(c for c in run.conjectures if c.direction == args.direction)
        run = type(run)(table=run.table, conjectures=kept, equalities=run.equalities)
    if args.format == "json":
        print(run_to_json(run))
    else:
        print(render_run(run))
        if args.equalities and run.equalities:
            print()
            print("Equalities:")
            for e in run.equalities:
                print(render_equality(e, table.boolean_columns, table.domain))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    table = resolve_dataset(args.dataset)
    sys.stdout.write(table_to_csv(table))
    return 0


def cmd_refute(args: argparse.Namespace) -> int:
    table = resolve_dataset(args.dataset)
    if table.domain != GRAPH_DOMAIN:
        raise UserError("refute operates on graph datasets")
    try:
        conjecture = parse_conjecture_form(args.form, table)
    except ConjectureParseError as exc:
        raise UserError(str(exc)) from exc
    max_n = args.max_n
    if not 1 <= max_n <= ENUMERATOR_VERTEX_LIMIT:
        raise UserError(f"--max-n must be in 1..{ENUMERATOR_VERTEX_LIMIT}")
    new_table, report = red_burton(table, conjecture, enumerate_connected_graphs(max_n))
    if report is None:
        print(f"none found up to n={max_n}")
        return 0
    print(
        f"counterexample: {report.witness_id} on {report.order} vertices "
        f"({conjecture.target} = {format_rational(report.lhs)}, "
        f"bound = {format_rational(report.rhs)})"
    )
    out = args.output or str(data_dir() / f"{Path(args.dataset).stem}-refined.csv")
    save_table(new_table, out)
    print(f"updated dataset: {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tightbounds",
        description="Exact affine-bound conjecturing over invariant tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("conjecture", help="run the conjecturing pipeline")
    p.add_argument("--dataset", required=True, help="builtin name or table CSV path")
    p.add_argument("--targets", required=True, help="comma-separated target invariants")
    p.add_argument("--hypotheses", help="';'-separated conjunctions, e.g. 'connected;tree'")
    p.add_argument("--no-dalmatian", action="store_true", help="skip the sharpness filter")
    p.add_argument("--limit", type=int, help="keep only the top k conjectures")
    p.add_argument("--direction", choices=["both", "upper", "lower"], default="both")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--equalities", action="store_true", help="also print detected equalities")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("table", help="print a dataset's knowledge table as CSV")
    p.add_argument("--dataset", required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("refute", help="search for the smallest counterexample")
    p.add_argument("--dataset", required=True)
    p.add_argument(
        "--form",
        required=True,
        help="conjecture text, e.g. 'If G is connected, then "
        "independence_number(G) >= n_minus_matching_number(G)'",
    )
    p.add_argument("--max-n", type=int, default=ENUMERATOR_VERTEX_LIMIT)
    p.add_argument("--output", help="path for the updated dataset CSV")
    p.set_defaults(func=cmd_refute)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return int(exc.code or 0) and 2
    try:
        return args.func(args)
    except UserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TableError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal invariant violations
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
