"""Pinned worked examples shipped as JSON fixtures, one file per example id.

A fixture names an operation from :mod:`linbialg.operations`, its input
document and the expected values of some output keys.  An expected value of
the form ``"@input.<key>"`` refers to that key of the input (used for fixed
points); dotted keys reach into nested output documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .docs import from_doc
from .errors import ParseError
from .operations import run_operation


@dataclass(frozen=True)
class Example:
    id: str
    operation: str
    input: dict
    expected: dict
    note: str = ""


def _sort_key(example_id: str):
    return tuple(int(p) if p.isdigit() else p for p in example_id.replace("-", ".").split("."))


def _fixture_files():
    root = resources.files("linbialg") / "fixtures"
    return sorted((f for f in root.iterdir() if f.name.endswith(".json")), key=lambda f: _sort_key(f.name[:-5]))


def load_examples() -> dict[str, Example]:
    out = {}
    for f in _fixture_files():
        data = json.loads(f.read_text(encoding="utf-8"))
        ex = Example(data["id"], data["operation"], data["input"], data["expected"], data.get("note", ""))
        out[ex.id] = ex
    return out


def example_ids() -> list[str]:
    return list(load_examples())


def get_example(example_id: str) -> Example:
    examples = load_examples()
    if example_id not in examples:
        raise ParseError(f"no example {example_id!r}; known: {', '.join(examples)}")
    return examples[example_id]


def _lookup(doc, path: str):
    for part in path.split("."):
        if not isinstance(doc, dict) or part not in doc:
            return None
        doc = doc[part]
    return doc


def _same(want, got) -> bool:
    if isinstance(want, dict) and "type" in want and isinstance(got, dict):
        try:
            return from_doc(want) == from_doc(got)
        except ParseError:
            return False
    return want == got


@dataclass(frozen=True)
class ExampleResult:
    example: Example
    output: dict
    mismatches: tuple

    @property
    def ok(self) -> bool:
        return not self.mismatches


def run_example(example: Example | str) -> ExampleResult:
    if isinstance(example, str):
        example = get_example(example)
    output = run_operation(example.operation, example.input)
    bad = []
    for key, want in example.expected.items():
        if isinstance(want, str) and want.startswith("@input."):
            want = example.input[want[len("@input."):]]
        got = _lookup(output, key)
        if not _same(want, got):
            bad.append((key, want, got))
    return ExampleResult(example, output, tuple(bad))
