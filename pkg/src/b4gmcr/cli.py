"""Command-line entry point.

Exit codes: 0 success, 1 parse or validation error, 2 usage error,
3 oracle discrepancy.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import cases
from .errors import ModelError, ParseError
from .model import validate_model
from .modelfile import parse_mapping, parse_model
from .oracle import DEFAULT_BOUND, oracle_check
from .reachability import MovePolicy, PolicyKind, Reachability, export_graph
from .render import render_comparison, render_reach, render_report, render_states
from .stability import analyze, compare_reports

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_ORACLE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path, policy=None):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        model = parse_model(text)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    if policy is not None:
        kind = PolicyKind(policy)
        adjacency = model.policy.adjacency if kind is PolicyKind.EXPLICIT else {}
        model = model.with_policy(MovePolicy(kind, adjacency))
    return model


def _valid(path, policy=None):
    model = _load(path, policy)
    diags = validate_model(model)
    if diags:
        raise InputError("\n".join(f"{path}: {d}" for d in diags))
    return model


def cmd_validate(args):
    _valid(args.file)
    print("ok")


def cmd_states(args):
    sys.stdout.write(render_states(_valid(args.file)))


def cmd_reach(args):
    model = _valid(args.file, args.policy)
    if args.dm is not None and args.dm not in model.dm_ids:
        raise InputError(f"unknown DM {args.dm}")
    sys.stdout.write(render_reach(model, Reachability(model), args.dm))


def cmd_analyze(args):
    model = _valid(args.file, args.policy)
    sys.stdout.write(render_report(analyze(model, workers=args.jobs), args.format))


def cmd_compare(args):
    a, b = _valid(args.file_a), _valid(args.file_b)
    try:
        mapping = parse_mapping(Path(args.map).read_text())
    except OSError as exc:
        raise InputError(f"{args.map}: {exc.strerror}") from None
    cmp = compare_reports(analyze(a), analyze(b), mapping)
    sys.stdout.write(render_comparison(cmp, args.format))


def cmd_export(args):
    model = _valid(args.file, args.policy)
    if args.dm is not None and args.dm not in model.dm_ids:
        raise InputError(f"unknown DM {args.dm}")
    sys.stdout.write(export_graph(model, args.dm))


def cmd_case(args):
    text = cases.case_file(args.id)
    if args.emit_file:
        Path(args.emit_file).write_text(text)
        print(args.emit_file)
    else:
        sys.stdout.write(text)


def cmd_oracle(args):
    model = _valid(args.file, args.policy)
    found = oracle_check(model, bound=args.bound)
    for d in found:
        print(d)
    if found:
        return EXIT_ORACLE
    print(f"ok: {len(model.space)} states, no discrepancies")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="b4gmcr", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def policy_flag(sp):
        sp.add_argument("--policy", choices=[k.value for k in PolicyKind],
                        help="override the file's move policy")

    sp = sub.add_parser("validate", help="check a model file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("states", help="list states")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_states)

    sp = sub.add_parser("reach", help="print reachable lists")
    sp.add_argument("file")
    sp.add_argument("--dm", type=int)
    policy_flag(sp)
    sp.set_defaults(func=cmd_reach)

    sp = sub.add_parser("analyze", help="stability analysis")
    sp.add_argument("file")
    sp.add_argument("--format", choices=["table", "csv"], default="table")
    sp.add_argument("--jobs", type=int, default=1, help="worker threads")
    policy_flag(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("compare", help="compare equilibria of two models")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.add_argument("--map", required=True, help="file of 's<a> -> s<b>' lines")
    sp.add_argument("--format", choices=["table", "csv"], default="table")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("export", help="write the move graph")
    sp.add_argument("file")
    sp.add_argument("--dot", action="store_true", required=True)
    sp.add_argument("--dm", type=int)
    policy_flag(sp)
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("case", help="print a built-in case file")
    sp.add_argument("id", choices=cases.CASE_IDS)
    sp.add_argument("--emit-file", nargs="?", const="", metavar="PATH",
                    help="write to PATH (default <id>.gmcr) instead of stdout")
    sp.set_defaults(func=cmd_case)

    sp = sub.add_parser("oracle", help="cross-check analyze by brute force")
    sp.add_argument("file")
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    policy_flag(sp)
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "case" and args.emit_file == "":
        args.emit_file = f"{args.id}.gmcr"
    try:
        return args.func(args) or EXIT_OK
    except InputError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except (ModelError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
