"""Command-line front end.

Exit status: 0 on success, 1 when the library reports a domain error, 2 on
usage or input parse errors.
"""

from __future__ import annotations

import argparse
import sys
from importlib.metadata import PackageNotFoundError, version

from .docs import dumps, loads
from .errors import BialgebraError, ParseError
from .operations import markov_states, run_operation
from .registry import get_example, load_examples, run_example
from .render import render, render_lines

# group -> action -> (names of positional file inputs or None for a single problem file)
COMMANDS = {
    "bimatrix": {"add": ("A", "B"), "mul": ("A", "B"), "det": ("A",), "charpoly": ("A",),
                 "eigen": ("A",), "diag": ("A",), "jordan": ("A",), "minpoly": ("A",)},
    "bispace": {"gram-schmidt": None, "project": None, "complement": None, "pseudo-ip": None},
    "bicode": {"build": None, "encode": None, "syndrome": None, "enumerate": None, "dual": None,
               "decode": None},
    "markov": {"step": None, "iterate": None, "steady": None},
    "leontief": {"closed": None, "open": None, "classify": None},
    "neutro": {"mul": ("A", "B"), "charpoly": ("A",), "eigen": ("A",)},
    "fuzzy": {"compose": ("P", "Q")},
}

# command-line options copied into the problem document when given
OVERRIDES = {"message": "message", "word": "word", "steps": "steps", "budget": "budget",
             "best_of": "best_of", "primitive": "primitive", "superdiagonal": "superdiagonal"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(f"usage: {message}")


def _read(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as f:
                text = f.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, path)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "doc"), default="text",
                        help="human-readable text (default) or the JSON document")
    parser = _Parser(prog="linbialg", description="Exact bimatrix, bicode and bimodel computations.")
    parser.add_argument("--version", action="store_true", help="print the version and exit")
    groups = parser.add_subparsers(dest="group", parser_class=_Parser)
    for group, actions in COMMANDS.items():
        gp = groups.add_parser(group, help=f"{group} operations")
        sub = gp.add_subparsers(dest="action", required=True, parser_class=_Parser)
        for action, inputs in actions.items():
            ap = sub.add_parser(action, parents=[common])
            for name in inputs or ("problem",):
                ap.add_argument(name, help="JSON document path, '-' for stdin")
            if group == "bicode":
                ap.add_argument("--message", help="message biword, e.g. 101|0110")
                ap.add_argument("--word", help="received biword, e.g. 111111|11111111")
                ap.add_argument("--best-of", action="store_true", dest="best_of",
                                help="try every basis of the policy and keep the closest result")
            if group == "markov":
                ap.add_argument("--steps", type=int)
                ap.add_argument("--budget", type=int, help="refuse iterations longer than this")
            if (group, action) == ("bispace", "gram-schmidt"):
                ap.add_argument("--primitive", action="store_true", help="rescale to coprime integers")
            if (group, action) == ("bimatrix", "jordan"):
                ap.add_argument("--superdiagonal", action="store_true")
    ex = groups.add_parser("examples", help="replay pinned worked examples")
    exs = ex.add_subparsers(dest="action", required=True, parser_class=_Parser)
    run = exs.add_parser("run", parents=[common])
    run.add_argument("id", nargs="?")
    run.add_argument("--all", action="store_true")
    exs.add_parser("list", parents=[common])
    return parser


def _problem(args, inputs) -> dict:
    if inputs:
        return {name: _read(getattr(args, name)) for name in inputs}
    doc = _read(args.problem)
    if not isinstance(doc, dict):
        raise ParseError(f"{args.problem}: expected a JSON object")
    for attr, key in OVERRIDES.items():
        val = getattr(args, attr, None)
        if val not in (None, False):
            doc[key] = val
    return doc


def _emit(out, fmt: str, stream):
    stream.write((dumps(out) if fmt == "doc" else render(out)) + "\n")


def _examples(args, stream) -> int:
    if args.action == "list":
        ids = list(load_examples())
        _emit({"examples": ids}, args.format, stream)
        return 0
    if args.all == bool(args.id):
        raise ParseError("usage: give exactly one of an example id or --all")
    examples = list(load_examples().values()) if args.all else [get_example(args.id)]
    failed = 0
    docs = []
    for ex in examples:
        res = run_example(ex)
        failed += not res.ok
        if args.format == "doc":
            docs.append({"id": ex.id, "operation": ex.operation, "output": res.output, "match": res.ok,
                         "mismatches": [k for k, _, _ in res.mismatches]})
            continue
        stream.write(f"example {ex.id} ({ex.operation})\n")
        for line in render_lines(res.output):
            stream.write("  " + line + "\n")
        if ex.note:
            stream.write(f"  note: {ex.note}\n")
        if res.ok:
            stream.write("MATCH\n")
        else:
            stream.write("MISMATCH " + ", ".join(k for k, _, _ in res.mismatches) + "\n")
    if args.format == "doc":
        stream.write(dumps(docs if args.all else docs[0]) + "\n")
    elif args.all:
        stream.write(f"{len(examples) - failed}/{len(examples)} examples match\n")
    return 1 if failed else 0


def _dispatch(args, stream) -> int:
    if args.group == "examples":
        return _examples(args, stream)
    doc = _problem(args, COMMANDS[args.group][args.action])
    if (args.group, args.action) == ("markov", "iterate") and args.format == "text":
        for state in markov_states(doc):
            stream.write(render(state) + "\n")
            stream.flush()
        return 0
    out = run_operation(f"{args.group}.{args.action}", doc)
    _emit(out, args.format, stream)
    return 0


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.version:
            try:
                stdout.write(f"linbialg {version('linbialg')}\n")
            except PackageNotFoundError:
                stdout.write("linbialg (not installed)\n")
            return 0
        if not args.group:
            parser.print_help(stdout)
            return 2
        return _dispatch(args, stdout)
    except ParseError as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except BialgebraError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    except ZeroDivisionError as exc:
        stderr.write(f"error: ZeroDivisionError: {exc}\n")
        return 1
    except (ValueError, TypeError) as exc:  # malformed values that got past the document parser
        stderr.write(f"error: invalid input: {exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())
