"""Command-line interface.

Exit codes: 0 success / prime / found, 1 not prime / exhausted / no witness,
2 usage or parameter error, 3 search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .errors import PrimeLabelError
from .families import FAMILY_PARAMS, build
from .graph import verify_labeling
from .io import GraphDocument, export_dot, parse_json, serialize_json
from .labelings import label_instance
from .search import SearchBudget, Status, backtracking_search, brute_force_search, pillai_witness

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

_FAMILY_HELP = ", ".join(f"{name} {' '.join(p)}" for name, p in FAMILY_PARAMS.items())


class _UsageError(Exception):
    pass


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _print_report(payload: dict, summary: str) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))
    print(summary)


def _read_doc(path: str) -> GraphDocument:
    try:
        return parse_json(Path(path).read_text())
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _instance_from_args(family: str, params: Sequence[str]):
    try:
        values = [int(p) for p in params]
    except ValueError:
        raise _UsageError(f"family parameters must be integers, got {' '.join(params)}") from None
    return build(family, *values)


def cmd_build(args) -> int:
    inst = _instance_from_args(args.family, args.params)
    _emit(serialize_json(inst), args.out)
    return EXIT_OK


def cmd_label(args) -> int:
    inst = _instance_from_args(args.family, args.params)
    labeling = label_instance(inst)
    report = verify_labeling(inst.graph, labeling)
    if args.out:
        Path(args.out).write_text(serialize_json(inst, labeling))
    _print_report({"family": str(inst.family), **report.to_dict()}, f"{inst.family}: {report.summary()}")
    return EXIT_OK if report.is_prime else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    doc = _read_doc(args.file)
    if doc.labeling is None:
        raise _UsageError(f"{args.file} carries no labeling")
    report = verify_labeling(doc.graph, doc.labeling)
    _print_report(report.to_dict(), report.summary())
    return EXIT_OK if report.is_prime else EXIT_NEGATIVE


def cmd_search(args) -> int:
    doc = _read_doc(args.file)
    g = doc.graph
    if args.brute:
        outcome = brute_force_search(g)
    else:
        budget = SearchBudget(args.budget_nodes, args.budget_secs)
        outcome = backtracking_search(
            g, budget, break_symmetry=args.break_symmetry, threads=args.threads
        )
    if outcome.found and args.out:
        Path(args.out).write_text(serialize_json(doc.with_labeling(outcome.labeling)))
    _print_report(
        outcome.to_dict(),
        f"{outcome.status.value} after {outcome.nodes_explored} nodes in {outcome.elapsed:.3f}s",
    )
    return {
        Status.FOUND: EXIT_OK,
        Status.EXHAUSTED: EXIT_NEGATIVE,
        Status.BUDGET_EXCEEDED: EXIT_BUDGET,
    }[outcome.status]


def cmd_export(args) -> int:
    doc = _read_doc(args.file)
    text = export_dot(doc) if args.format == "dot" else serialize_json(doc)
    _emit(text, args.out)
    return EXIT_OK


def cmd_pillai(args) -> int:
    start = pillai_witness(args.k, args.limit)
    window = None if start is None else [start, start + args.k - 1]
    _print_report(
        {"k": args.k, "limit": args.limit, "start": start, "window": window},
        f"k={args.k}: " + (f"witness window starts at {start}" if start else f"no witness up to {args.limit}"),
    )
    return EXIT_OK if start is not None else EXIT_NEGATIVE


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primelabel", description="Prime vertex labelings of graph families.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p):
        p.add_argument("family", choices=sorted(FAMILY_PARAMS), help=f"one of: {_FAMILY_HELP}")
        p.add_argument("params", nargs="*", help="family parameters, positional")

    p = sub.add_parser("build", help="build a family instance and write its document")
    family_args(p)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("label", help="apply the closed-form labeling and verify it")
    family_args(p)
    p.add_argument("--out", help="write the labeled document here")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="verify the labeling stored in a document")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search for a prime labeling of a document's graph")
    p.add_argument("file")
    p.add_argument("--budget-nodes", type=_nonneg_int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--brute", action="store_true", help="enumerate all permutations (<= 10 vertices)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--break-symmetry", action="store_true",
                   help="place interchangeable labels in increasing order only")
    p.add_argument("--out", help="write the labeled document here when found")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export", help="convert a document")
    p.add_argument("file")
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("pillai", help="find k consecutive integers none coprime to all others")
    p.add_argument("k", type=int)
    p.add_argument("limit", type=int)
    p.set_defaults(func=cmd_pillai)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (PrimeLabelError, _UsageError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
