"""JSON documents for matrices, bimatrices, vectors and polynomials.

Scalars are written as strings in the literal grammar of their kind
(``"-3/4"``, ``"2+3I"``, ``"0.25"``, ``"I"``); JSON integers are accepted on
input.  ``dumps`` sorts keys, so a document serializes to the same bytes
every time.
"""

from __future__ import annotations

import json
from typing import Any

from .bimatrix import Bimatrix, Bipolynomial, Bivector
from .errors import ParseError
from .matrix import Matrix
from .poly import Poly
from .scalars import RATIONAL, ScalarKind, kind_from_name


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _kind(doc: dict, default: ScalarKind = RATIONAL) -> ScalarKind:
    name = doc.get("scalar_kind")
    return default if name is None else kind_from_name(name)


def _scalar(kind: ScalarKind, x):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"scalar {x!r} must be an integer or a string literal")
    if isinstance(x, int):
        return kind.coerce(x)
    if isinstance(x, str):
        return kind.parse(x)
    raise ParseError(f"bad scalar {x!r}")


def _rows(kind, rows, ncols=None) -> Matrix:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ParseError("matrix rows must be a list of lists")
    if len({len(r) for r in rows}) > 1:
        raise ParseError("matrix rows have different lengths")
    return Matrix([[_scalar(kind, x) for x in r] for r in rows], kind, ncols)


def _fmt_rows(m: Matrix) -> list[list[str]]:
    return [[m.kind.format(x) for x in r] for r in m.rows]


def vector_doc(v, kind: ScalarKind) -> list[str]:
    return [kind.format(x) for x in v]


def vector_from_doc(items, kind: ScalarKind) -> tuple:
    if not isinstance(items, list):
        raise ParseError("vector must be a list")
    return tuple(_scalar(kind, x) for x in items)


def matrix_doc(m: Matrix) -> dict:
    return {"type": "matrix", "scalar_kind": m.kind.name, "shape": [m.nrows, m.ncols], "rows": _fmt_rows(m)}


def matrix_from_doc(doc: dict, kind: ScalarKind | None = None) -> Matrix:
    kind = kind or _kind(doc)
    shape = doc.get("shape")
    return _rows(kind, doc["rows"], shape[1] if shape else None)


def bimatrix_doc(b: Bimatrix) -> dict:
    return {"type": "bimatrix", "scalar_kind": b.kind.name,
            "shapes": [list(b.first.shape), list(b.second.shape)],
            "first": _fmt_rows(b.first), "second": _fmt_rows(b.second)}


def bimatrix_from_doc(doc: dict, kind: ScalarKind | None = None) -> Bimatrix:
    kind = kind or _kind(doc)
    shapes = doc.get("shapes") or [None, None]
    try:
        return Bimatrix(_rows(kind, doc["first"], shapes[0] and shapes[0][1]),
                        _rows(kind, doc["second"], shapes[1] and shapes[1][1]))
    except KeyError as exc:
        raise ParseError(f"bimatrix document lacks {exc}") from None


def bivector_doc(v: Bivector) -> dict:
    return {"type": "bivector", "scalar_kind": v.kind.name,
            "first": vector_doc(v.first, v.kind), "second": vector_doc(v.second, v.kind)}


def bivector_from_doc(doc: dict, kind: ScalarKind | None = None) -> Bivector:
    kind = kind or _kind(doc)
    return Bivector(vector_from_doc(doc["first"], kind), vector_from_doc(doc["second"], kind), kind)


def poly_doc(p: Poly) -> dict:
    return {"type": "polynomial", "scalar_kind": p.kind.name,
            "coeffs": vector_doc(p.coeffs, p.kind), "text": str(p)}


def poly_from_doc(doc: dict, kind: ScalarKind | None = None) -> Poly:
    kind = kind or _kind(doc)
    return Poly(vector_from_doc(doc["coeffs"], kind), kind)


def bipoly_doc(b: Bipolynomial) -> dict:
    return {"type": "bipolynomial", "first": poly_doc(b.first), "second": poly_doc(b.second)}


def bipoly_from_doc(doc: dict) -> Bipolynomial:
    return Bipolynomial(poly_from_doc(doc["first"]), poly_from_doc(doc["second"]))


_LOADERS = {"matrix": matrix_from_doc, "bimatrix": bimatrix_from_doc, "bivector": bivector_from_doc,
            "polynomial": poly_from_doc, "bipolynomial": bipoly_from_doc}


def to_doc(value) -> dict:
    if isinstance(value, Matrix):
        return matrix_doc(value)
    if isinstance(value, Bimatrix):
        return bimatrix_doc(value)
    if isinstance(value, Bivector):
        return bivector_doc(value)
    if isinstance(value, Poly):
        return poly_doc(value)
    if isinstance(value, Bipolynomial):
        return bipoly_doc(value)
    raise TypeError(f"no document form for {type(value).__name__}")


def from_doc(doc: dict):
    if not isinstance(doc, dict) or doc.get("type") not in _LOADERS:
        raise ParseError(f"untyped or unknown document: {str(doc)[:60]}")
    try:
        return _LOADERS[doc["type"]](doc)
    except KeyError as exc:
        raise ParseError(f"{doc['type']} document lacks {exc}") from None
