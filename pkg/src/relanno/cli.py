"""Headless command-line front end.

Subcommands: validate, stats, convert, demo. Input defaults to standard
input and output to standard output (copy/paste friendly); --input and
--output switch to files. Exit codes: 0 success, 1 validation errors
found, 2 usage error, 3 I/O or parse error. Error text goes to standard
error only.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Optional

from . import errors, metrics, serialization
from .demo import build_demo_session

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_IO = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relanno",
        description="Relation-triplet annotation toolkit: validate, report, convert.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an exported session; findings one per line")
    _io_arguments(p)

    p = sub.add_parser("stats", help="report per-sentence density statistics")
    _io_arguments(p)
    p.add_argument(
        "--report-format",
        choices=["json", "table"],
        default="json",
        help="report rendering (default: json)",
    )

    p = sub.add_parser("convert", help="re-serialize a session as canonical JSON or brat standoff")
    _io_arguments(p)
    p.add_argument(
        "--format",
        choices=["json", "brat"],
        required=True,
        help="target format; brat requires --output and writes PATH.txt and PATH.ann",
    )

    p = sub.add_parser("demo", help="write the bundled fully-annotated demo session export")
    p.add_argument("--output", metavar="PATH", help="output file (default: standard output)")
    return parser


def _io_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="PATH", help="input file (default: standard input)")
    p.add_argument("--output", metavar="PATH", help="output file (default: standard output)")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already written usage/help; fold its codes into ours
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "stats":
            return _cmd_stats(args)
        if args.command == "convert":
            return _cmd_convert(args)
        if args.command == "demo":
            return _cmd_demo(args)
        raise AssertionError(f"unhandled command {args.command!r}")
    except (errors.ParseError, errors.SchemaError, errors.SpanMismatch) as exc:
        print(f"relanno: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"relanno: {exc}", file=sys.stderr)
        return EXIT_IO


def _cmd_validate(args) -> int:
    session = serialization.import_session(_read_input(args.input))
    findings = metrics.validate_session(session)
    _write_output(args.output, "".join(f"{finding}\n" for finding in findings))
    has_errors = any(f.severity == metrics.ERROR for f in findings)
    return EXIT_INVALID if has_errors else EXIT_OK


def _cmd_stats(args) -> int:
    session = serialization.import_session(_read_input(args.input))
    stats = metrics.corpus_stats(session)
    fields = dataclasses.asdict(stats)
    if args.report_format == "json":
        rendered = json.dumps(fields, indent=2) + "\n"
    else:
        width = max(len(name) for name in fields)
        rendered = "".join(f"{name:<{width}}  {value}\n" for name, value in fields.items())
    _write_output(args.output, rendered)
    return EXIT_OK


def _cmd_convert(args) -> int:
    session = serialization.import_session(_read_input(args.input))
    try:
        if args.format == "json":
            _write_output(args.output, serialization.export(session))
            return EXIT_OK
        if args.output is None:
            print(
                "relanno: --format brat writes a .txt/.ann pair and requires --output",
                file=sys.stderr,
            )
            return EXIT_USAGE
        doc_text, ann_text = serialization.export_brat(session)
        base = args.output
        for suffix in (".ann", ".txt"):
            if base.endswith(suffix):
                base = base[: -len(suffix)]
        _write_file(base + ".txt", doc_text)
        _write_file(base + ".ann", ann_text)
        return EXIT_OK
    except errors.InvalidSession as exc:
        for finding in exc.findings:
            print(str(finding), file=sys.stderr)
        return EXIT_INVALID


def _cmd_demo(args) -> int:
    _write_output(args.output, serialization.export(build_demo_session()))
    return EXIT_OK


def _read_input(path: Optional[str]) -> str:
    if path is None:
        return sys.stdin.buffer.read().decode("utf-8")
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.buffer.write(text.encode("utf-8"))
        sys.stdout.buffer.flush()
    else:
        _write_file(path, text)


def _write_file(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


if __name__ == "__main__":
    sys.exit(main())
