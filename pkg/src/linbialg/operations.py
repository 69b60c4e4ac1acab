"""Document-level entry points: one library call per operation name.

Each operation takes a parsed JSON input (a dict) and returns a JSON-ready
output dict.  The command line and the example registry both dispatch
through :data:`OPERATIONS`, so neither carries computation of its own.
"""

from __future__ import annotations

from typing import Callable

from . import bicode as bc
from . import bimatrix as bm
from . import bispace as bs
from . import models as md
from . import neutro as nt
from .bimatrix import Bimatrix, Bivector
from .docs import (bimatrix_doc, bimatrix_from_doc, bipoly_doc, bivector_doc, bivector_from_doc,
                   matrix_doc, matrix_from_doc, poly_doc, vector_doc, vector_from_doc)
from .errors import ParseError
from .scalars import FUZZY, NEUTROSOPHIC, RATIONAL, kind_from_name


def _need(doc: dict, key: str):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"input lacks {key!r}")
    return doc[key]


def _bimatrix(doc, key="A", kind=None) -> Bimatrix:
    return bimatrix_from_doc(_need(doc, key), kind)


def _fmt(kind, x) -> str:
    return kind.format(x)


# -- bimatrix ----------------------------------------------------------------

def op_bimatrix_add(doc):
    return {"result": bimatrix_doc(bm.bimatrix_arith(_bimatrix(doc, "A"), _bimatrix(doc, "B"), "+"))}


def op_bimatrix_mul(doc):
    return {"result": bimatrix_doc(bm.bimatrix_arith(_bimatrix(doc, "A"), _bimatrix(doc, "B"), "*"))}


def op_bimatrix_det(doc):
    a = _bimatrix(doc)
    d1, d2 = bm.determinant(a)
    return {"determinant": [_fmt(a.kind, d1), _fmt(a.kind, d2)]}


def op_bimatrix_charpoly(doc):
    return {"charpoly": bipoly_doc(bm.char_bipolynomial(_bimatrix(doc)))}


def _eigen_component(ce: bm.ComponentEigen, kind) -> dict:
    return {"charpoly": poly_doc(ce.charpoly),
            "values": [_fmt(kind, v) for v in ce.values],
            "spaces": [{"value": _fmt(kind, s.value), "algebraic": s.multiplicity,
                        "basis": [vector_doc(v, kind) for v in s.basis]} for s in ce.spaces],
            "unsplit_factor": poly_doc(ce.cofactor)}


def op_bimatrix_eigen(doc):
    a = _bimatrix(doc)
    e = bm.eigen_bivalues(a)
    return {"status": e.status, "first": _eigen_component(e.first, a.kind),
            "second": _eigen_component(e.second, a.kind)}


def op_bimatrix_diag(doc):
    a = _bimatrix(doc)
    p, d = bm.bidiagonalize(a)
    return {"P": bimatrix_doc(p), "D": bimatrix_doc(d), "AP_equals_PD": (a @ p) == (p @ d)}


def op_bimatrix_jordan(doc):
    a = _bimatrix(doc)
    jf = bm.jordan_biform(a, superdiagonal=bool(doc.get("superdiagonal", False)))
    return {"form": bimatrix_doc(jf.form), "blocks": jf.report()}


def op_bimatrix_minpoly(doc):
    a = _bimatrix(doc)
    mp = bm.minimal_bipolynomial(a)
    return {"minpoly": bipoly_doc(mp), "charpoly": bipoly_doc(bm.char_bipolynomial(a))}


# -- bispace -----------------------------------------------------------------

def _space(doc):
    kind = kind_from_name(doc.get("scalar_kind", "rational"))
    ip = bs.InnerBiproduct.parse(_need(doc, "inner"), kind)
    return ip, kind


def _bivectors(doc, key, kind):
    return [bivector_from_doc(v, kind) for v in _need(doc, key)]


def op_bispace_gram_schmidt(doc):
    ip, kind = _space(doc)
    out = bs.gram_schmidt_biorthogonalize(ip, _bivectors(doc, "vectors", kind), bool(doc.get("primitive")))
    return {"vectors": [bivector_doc(v) for v in out]}


def op_bispace_project(doc):
    ip, kind = _space(doc)
    beta = bivector_from_doc(_need(doc, "beta"), kind)
    alpha = bs.best_biapproximation(ip, _bivectors(doc, "basis", kind), beta)
    return {"approximation": bivector_doc(alpha)}


def op_bispace_complement(doc):
    ip, kind = _space(doc)
    n1, n2 = _need(doc, "ambient")
    basis = bs.Bibasis([vector_from_doc(v, kind) for v in doc.get("first", [])],
                       [vector_from_doc(v, kind) for v in doc.get("second", [])])
    if "vectors" in doc:
        basis = bs.Bibasis.from_bivectors(_bivectors(doc, "vectors", kind))
    comp = bs.biorthogonal_bicomplement(ip, basis, (n1, n2))
    return {"first": [vector_doc(v, kind) for v in comp.first],
            "second": [vector_doc(v, kind) for v in comp.second],
            "dimensions": [len(comp.first), len(comp.second)]}


def op_bispace_pseudo_ip(doc):
    ip, kind = _space(doc)
    u = bivector_from_doc(_need(doc, "u"), kind)
    v = bivector_from_doc(doc["v"], kind) if "v" in doc else u
    a, b = bs.inner_biproduct(ip, u, v)
    return {"value": [_fmt(kind, a), _fmt(kind, b)], "relation": bs.is_biorthogonal(ip, u, v)}


# -- bicode ------------------------------------------------------------------

def load_bicode(doc) -> bc.Bicode:
    q = int(_need(doc, "q"))
    kind = kind_from_name(f"gf:{q}")
    if "parity" in doc:
        return bc.bicode_from_parity(bimatrix_from_doc(doc["parity"], kind), q)
    if "generator" in doc:
        return bc.bicode_from_generator(bimatrix_from_doc(doc["generator"], kind), q)
    if "generator_poly" in doc:
        g = doc["generator_poly"]
        return bc.cyclic_bicode((g["g1"], g["g2"]), (int(g["n1"]), int(g["n2"])), q)
    raise ParseError("code document needs 'parity', 'generator' or 'generator_poly'")


def _component_strings(vectors, q) -> list[str]:
    return [bc.format_word(v, q) for v in vectors]


def _code_doc(c: bc.Bicode) -> dict:
    out = {"q": c.q, "params": [list(p) for p in c.params],
           "generator": bimatrix_doc(c.G), "parity": bimatrix_doc(c.H)}
    if c.check is not None:
        out["check"] = bipoly_doc(c.check)
    return out


def op_bicode_build(doc):
    c = load_bicode(doc)
    ok = all((g @ h.T).is_zero() for g, h in zip(c.G.components(), c.H.components()))
    return dict(_code_doc(c), GHt_zero=ok)


def op_bicode_dual(doc):
    return _code_doc(bc.dual_bicode(load_bicode(doc)))


def op_bicode_encode(doc):
    c = load_bicode(doc)
    msg = bc.parse_biword(_need(doc, "message"), c.q)
    return {"codeword": bc.format_biword(bc.encode(c, msg))}


def op_bicode_syndrome(doc):
    c = load_bicode(doc)
    (s1, s2), ok = bc.syndrome(c, _need(doc, "word"))
    return {"syndrome": [bc.format_word(s1, c.q), bc.format_word(s2, c.q)], "is_codeword": ok}


def op_bicode_enumerate(doc):
    c = load_bicode(doc)
    w1, w2 = bc.enumerate_bicode(c)
    return {"first": _component_strings(w1, c.q), "second": _component_strings(w2, c.q),
            "counts": [len(w1), len(w2)]}


def _policy(doc, q):
    given = doc.get("bases")
    if not given:
        return None

    def parse(bases):
        if bases is None:
            return None
        return [[bc.parse_word(w, q) for w in basis] for basis in bases]

    return bc.explicit_bases(parse(given.get("first")), parse(given.get("second")))


def op_bicode_decode(doc):
    c = load_bicode(doc)
    report = bc.pseudo_decode(c, _need(doc, "word"), _policy(doc, c.q), bool(doc.get("best_of")))
    out = report.to_doc()
    out["syndrome_zero"] = bc.is_codeword(c, report.result)
    return out


# -- models ------------------------------------------------------------------

def _transition(doc):
    return md.TransitionBimatrix(_bimatrix(doc, "P", RATIONAL), doc.get("mode", md.STRICT))


def op_markov_step(doc):
    t = _transition(doc)
    return {"state": bivector_doc(md.markov_step(t, bivector_from_doc(_need(doc, "x0"), RATIONAL)))}


def markov_states(doc):
    """Yield the state documents x0, x1, ... lazily so callers can stream them."""
    t = _transition(doc)
    x = bivector_from_doc(_need(doc, "x0"), RATIONAL)
    n = int(_need(doc, "steps"))
    if n < 0:
        raise ParseError("steps must be non-negative")
    budget = doc.get("budget")
    if budget is not None and n > int(budget):
        md.markov_iterate(t, x, n, int(budget))
    return (bivector_doc(s) for s in md.markov_trajectory(t, x, n))


def op_markov_iterate(doc):
    return {"trajectory": list(markov_states(doc))}


def op_markov_steady(doc):
    s1, s2 = md.stationary_bivector(_transition(doc))
    return {"first": [vector_doc(v, RATIONAL) for v in s1], "second": [vector_doc(v, RATIONAL) for v in s2]}


def _rational_components(doc, key):
    m = _need(doc, key)
    if m.get("type") == "bimatrix":
        return list(bimatrix_from_doc(m, RATIONAL).components())
    return [matrix_from_doc(m, RATIONAL)]


def _closed_doc(s: md.ClosedSolution) -> dict:
    return {"basis": [vector_doc(v, RATIONAL) for v in s.basis], "unique_positive": s.unique_positive,
            "exponent": s.exponent, "warning": s.warning}


def op_leontief_closed(doc):
    sols = [_closed_doc(md.leontief_closed_solve(m)) for m in _rational_components(doc, "A")]
    return sols[0] if len(sols) == 1 else {"first": sols[0], "second": sols[1]}


def _open_doc(s: md.OpenSolution) -> dict:
    return {"x": vector_doc(s.x, RATIONAL), "inverse": matrix_doc(s.inverse), "productive": s.productive,
            "row_sums_below_one": s.row_sums_below_one, "col_sums_below_one": s.col_sums_below_one}


def op_leontief_open(doc):
    mats = _rational_components(doc, "C")
    d = _need(doc, "d")
    if len(mats) == 1:
        return _open_doc(md.leontief_open_solve(mats[0], vector_from_doc(d, RATIONAL)))
    dv = bivector_from_doc(d, RATIONAL)
    return {"first": _open_doc(md.leontief_open_solve(mats[0], dv.first)),
            "second": _open_doc(md.leontief_open_solve(mats[1], dv.second))}


def op_leontief_classify(doc):
    c = _bimatrix(doc, "c", NEUTROSOPHIC)
    d = bivector_from_doc(doc["d"], NEUTROSOPHIC) if "d" in doc else None
    r = md.neutro_leontief_classify(c, d)

    def comp(x: md.ComponentClass):
        out = {"label": x.label}
        if x.inverse is not None:
            out["inverse"] = matrix_doc(x.inverse)
        if x.production is not None:
            out["production"] = vector_doc(x.production, NEUTROSOPHIC)
        return out

    return {"classification": list(r.pair), "label": r.label, "first": comp(r.first), "second": comp(r.second)}


# -- neutrosophic and fuzzy --------------------------------------------------

def _nmatrix(doc, key):
    return matrix_from_doc(_need(doc, key), NEUTROSOPHIC)


def op_neutro_mul(doc):
    return {"result": matrix_doc(nt.neutro_matmul(_nmatrix(doc, "A"), _nmatrix(doc, "B")))}


def op_neutro_charpoly(doc):
    a = _nmatrix(doc, "A")
    return {"charpoly": poly_doc(nt.neutro_char_poly(a)), "determinant": NEUTROSOPHIC.format(nt.neutro_det(a))}


def op_neutro_eigen(doc):
    a = _nmatrix(doc, "A")
    e = nt.neutro_eigenvalues(a)
    return {"status": e.status,
            "values": [NEUTROSOPHIC.format(v) for v in e.all_values],
            "classical": [NEUTROSOPHIC.format(v) for v in e.classical],
            "rootless_splits": list(e.rootless),
            "split_roots": [vector_doc(r, RATIONAL) for r in e.split_roots],
            "residuals_zero": all(nt.eigen_residual(a, v) == 0 for v in e.all_values)}


def op_fuzzy_compose(doc):
    p = matrix_from_doc(_need(doc, "P"), FUZZY)
    q = matrix_from_doc(_need(doc, "Q"), FUZZY)
    return {"result": matrix_doc(nt.fuzzy_compose(p, q))}


OPERATIONS: dict[str, Callable[[dict], dict]] = {
    "bimatrix.add": op_bimatrix_add,
    "bimatrix.mul": op_bimatrix_mul,
    "bimatrix.det": op_bimatrix_det,
    "bimatrix.charpoly": op_bimatrix_charpoly,
    "bimatrix.eigen": op_bimatrix_eigen,
    "bimatrix.diag": op_bimatrix_diag,
    "bimatrix.jordan": op_bimatrix_jordan,
    "bimatrix.minpoly": op_bimatrix_minpoly,
    "bispace.gram-schmidt": op_bispace_gram_schmidt,
    "bispace.project": op_bispace_project,
    "bispace.complement": op_bispace_complement,
    "bispace.pseudo-ip": op_bispace_pseudo_ip,
    "bicode.build": op_bicode_build,
    "bicode.encode": op_bicode_encode,
    "bicode.syndrome": op_bicode_syndrome,
    "bicode.enumerate": op_bicode_enumerate,
    "bicode.dual": op_bicode_dual,
    "bicode.decode": op_bicode_decode,
    "markov.step": op_markov_step,
    "markov.iterate": op_markov_iterate,
    "markov.steady": op_markov_steady,
    "leontief.closed": op_leontief_closed,
    "leontief.open": op_leontief_open,
    "leontief.classify": op_leontief_classify,
    "neutro.mul": op_neutro_mul,
    "neutro.charpoly": op_neutro_charpoly,
    "neutro.eigen": op_neutro_eigen,
    "fuzzy.compose": op_fuzzy_compose,
}


def run_operation(name: str, doc: dict) -> dict:
    try:
        fn = OPERATIONS[name]
    except KeyError:
        raise ParseError(f"unknown operation {name!r}") from None
    return fn(doc)
