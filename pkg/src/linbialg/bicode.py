"""Linear bicodes over a prime field GF(q) and the pseudo-projection decoder.

A bicode is a pair of linear codes ``C1 ∪ C2`` handled jointly.  Each component
carries a generator matrix ``G`` (k x n, full row rank) and a parity-check
matrix ``H`` ((n-k) x n, full row rank) with ``G H^T = 0``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .bimatrix import Bimatrix, Bipolynomial, Bivector
from .bispace import GFWeightedDot, pseudo_best_approximation
from .errors import (DecoderExhausted, EnumerationTooLarge, GeneratorDoesNotDivide, ParseError,
                     RankDeficientParity, ScalarKindMismatch, ShapeMismatch)
from .matrix import Matrix
from .poly import Poly, poly_divides
from .scalars import ScalarKind, _PrimeField, gf

DEFAULT_MAX_ENUM = 2 ** 20


def max_enumeration() -> int:
    raw = os.environ.get("BIALG_MAX_ENUM")
    return int(raw) if raw else DEFAULT_MAX_ENUM


def _field(q: int) -> ScalarKind:
    return gf(q)


def _ints(v) -> tuple[int, ...]:
    return tuple(int(x) for x in v)


def _in_standard_form(h: Matrix) -> bool:
    r, n = h.shape
    return all(h.rows[i][n - r + j] == (1 if i == j else 0) for i in range(r) for j in range(r))


def _generator_from_parity(h: Matrix, component: int) -> Matrix:
    r, n = h.shape
    if h.rank() != r:
        raise RankDeficientParity(f"parity matrix of component {component} has rank {h.rank()} < {r}")
    k = n - r
    kind = h.kind
    if _in_standard_form(h):
        # H = (A | I)  ->  G = (I | -A^T)
        rows = []
        for i in range(k):
            rows.append(tuple(kind.one if j == i else kind.zero for j in range(k))
                        + tuple(-h.rows[t][i] for t in range(r)))
        return Matrix(rows, kind, n)
    return _canonical_rows(h.nullspace(), kind, n)


def _canonical_rows(vectors, kind, n) -> Matrix:
    if not vectors:
        return Matrix((), kind, n)
    red, pivots = Matrix(vectors, kind, n).rref()
    return Matrix(red.rows[:len(pivots)], kind, n)


def _parity_from_generator(g: Matrix, component: int) -> Matrix:
    k, n = g.shape
    if g.rank() != k:
        raise RankDeficientParity(f"generator matrix of component {component} has rank {g.rank()} < {k}")
    kind = g.kind
    if all(g.rows[i][j] == (1 if i == j else 0) for i in range(k) for j in range(k)):
        # G = (I | B)  ->  H = (-B^T | I)
        r = n - k
        rows = [tuple(-g.rows[i][k + t] for i in range(k))
                + tuple(kind.one if j == t else kind.zero for j in range(r)) for t in range(r)]
        return Matrix(rows, kind, n)
    return _canonical_rows(g.nullspace(), kind, n)


@dataclass(frozen=True)
class Bicode:
    q: int
    G: Bimatrix
    H: Bimatrix
    check: Bipolynomial | None = None

    def __post_init__(self):
        if not isinstance(self.G.kind, _PrimeField) or self.G.kind.p != self.q:
            raise ScalarKindMismatch(f"bicode matrices must be over GF({self.q})")
        for i, (g, h) in enumerate(zip(self.G.components(), self.H.components()), start=1):
            if g.ncols != h.ncols:
                raise ShapeMismatch(f"component {i}: G has {g.ncols} columns, H has {h.ncols}")

    @property
    def kind(self) -> ScalarKind:
        return self.G.kind

    @property
    def params(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return tuple((g.ncols, g.nrows) for g in self.G.components())

    @property
    def lengths(self) -> tuple[int, int]:
        return self.G.first.ncols, self.G.second.ncols

    def encode(self, message) -> Bivector:
        return encode(self, message)

    def syndrome(self, word):
        return syndrome(self, word)

    def is_codeword(self, word) -> bool:
        return syndrome(self, word)[1]

    def enumerate(self):
        return enumerate_bicode(self)

    def dual(self) -> "Bicode":
        return dual_bicode(self)


def bicode_from_parity(H: Bimatrix, q: int | None = None) -> Bicode:
    q = H.kind.p if q is None and isinstance(H.kind, _PrimeField) else q
    if q is None:
        raise ScalarKindMismatch("parity bimatrix must be over a prime field")
    kind = _field(q)
    h1, h2 = (Matrix(m.rows, kind, m.ncols) for m in H.components())
    g = Bimatrix(_generator_from_parity(h1, 1), _generator_from_parity(h2, 2))
    return Bicode(q, g, Bimatrix(h1, h2))


def bicode_from_generator(G: Bimatrix, q: int | None = None) -> Bicode:
    q = G.kind.p if q is None and isinstance(G.kind, _PrimeField) else q
    if q is None:
        raise ScalarKindMismatch("generator bimatrix must be over a prime field")
    kind = _field(q)
    g1, g2 = (Matrix(m.rows, kind, m.ncols) for m in G.components())
    h = Bimatrix(_parity_from_generator(g1, 1), _parity_from_generator(g2, 2))
    return Bicode(q, Bimatrix(g1, g2), h)


def _cyclic_component(g: Poly, n: int, component: int):
    kind = g.kind
    xn1 = Poly([-1] + [0] * (n - 1) + [1], kind)
    if g.is_zero() or g.degree > n or not poly_divides(g, xn1):
        raise GeneratorDoesNotDivide(f"g{component} = {g} does not divide x^{n} - 1")
    k = n - g.degree
    h = xn1 // g
    gc = list(g.coeffs)
    G = Matrix([[0] * i + gc + [0] * (n - len(gc) - i) for i in range(k)], kind, n)
    rev = list(reversed(list(h.coeffs) + [0] * (k + 1 - len(h.coeffs))))
    r = n - k
    H = Matrix([[0] * (r - 1 - t) + rev + [0] * t for t in range(r)], kind, n)
    return G, H, h


def cyclic_bicode(g, n: tuple[int, int], q: int = 2) -> Bicode:
    """Cyclic bicode from a generator bipolynomial.

    ``g`` is a :class:`Bipolynomial` or a pair of coefficient lists (low
    degree first).  Rows of ``G`` are ``x^i g``; rows of ``H`` are shifts of the
    reversed check polynomial ``h = (x^n - 1) / g``.
    """
    kind = _field(q)
    polys = (g.first, g.second) if isinstance(g, Bipolynomial) else g
    polys = [Poly(p.coeffs if isinstance(p, Poly) else p, kind) for p in polys]
    G1, H1, h1 = _cyclic_component(polys[0], n[0], 1)
    G2, H2, h2 = _cyclic_component(polys[1], n[1], 2)
    return Bicode(q, Bimatrix(G1, G2), Bimatrix(H1, H2), Bipolynomial(h1, h2))


def repetition_bicode(n1: int, n2: int, q: int = 2) -> Bicode:
    kind = _field(q)

    def parity(n):
        return Matrix([[1] + [(-1 if j == i else 0) for j in range(n - 1)] for i in range(n - 1)], kind, n)

    return bicode_from_parity(Bimatrix(parity(n1), parity(n2)), q)


def parity_check_bicode(n1: int, n2: int, q: int = 2) -> Bicode:
    kind = _field(q)
    return bicode_from_parity(Bimatrix(Matrix([[1] * n1], kind, n1), Matrix([[1] * n2], kind, n2)), q)


def _as_biword(C: Bicode, word) -> Bivector:
    if isinstance(word, str):
        word = parse_biword(word, C.q)
    if isinstance(word, Bivector):
        first, second = word.first, word.second
    else:
        first, second = word
    w = Bivector(first, second, C.kind)
    if w.shape != C.lengths:
        raise ShapeMismatch(f"word of shape {w.shape} for a bicode of lengths {C.lengths}")
    return w


def encode(C: Bicode, message) -> Bivector:
    """``a1 G1 ∪ a2 G2``."""
    if isinstance(message, Bivector):
        message = (message.first, message.second)
    out = []
    for a, g in zip(message, C.G.components()):
        a = tuple(C.kind.coerce(x) for x in a)
        if len(a) != g.nrows:
            raise ShapeMismatch(f"message of length {len(a)} for a code of dimension {g.nrows}")
        out.append(g.T.apply(a) if g.nrows else (C.kind.zero,) * g.ncols)
    return Bivector(out[0], out[1], C.kind)


def syndrome(C: Bicode, word) -> tuple[tuple[tuple, tuple], bool]:
    w = _as_biword(C, word)
    s1 = C.H.first.apply(w.first) if C.H.first.nrows else ()
    s2 = C.H.second.apply(w.second) if C.H.second.nrows else ()
    ok = all(x == 0 for x in s1) and all(x == 0 for x in s2)
    return (s1, s2), ok


def is_codeword(C: Bicode, word) -> bool:
    return syndrome(C, word)[1]


def _component_words(g: Matrix, q: int, cap: int) -> list[tuple]:
    k, n = g.shape
    if q ** k > cap:
        raise EnumerationTooLarge(f"{q}^{k} codewords exceed the enumeration cap {cap}")
    kind = g.kind
    gt = g.T
    words = set()
    for msg in itertools.product(range(q), repeat=k):
        words.add(gt.apply(tuple(kind.coerce(m) for m in msg)) if k else (kind.zero,) * n)
    return sorted(words, key=_ints)


def enumerate_bicode(C: Bicode, cap: int | None = None) -> tuple[list[tuple], list[tuple]]:
    """All codewords of each component, sorted lexicographically."""
    cap = max_enumeration() if cap is None else cap
    return (_component_words(C.G.first, C.q, cap), _component_words(C.G.second, C.q, cap))


def dual_bicode(C: Bicode) -> Bicode:
    return Bicode(C.q, C.H, C.G)


def hamming_bidistance(x, y) -> tuple[int, int, int]:
    xs = (x.first, x.second) if isinstance(x, Bivector) else x
    ys = (y.first, y.second) if isinstance(y, Bivector) else y
    ds = []
    for a, b in zip(xs, ys):
        if len(a) != len(b):
            raise ShapeMismatch(f"words of length {len(a)} and {len(b)}")
        ds.append(sum(1 for u, v in zip(a, b) if u != v))
    return ds[0], ds[1], ds[0] + ds[1]


# ---------------------------------------------------------------------------
# word literals

def format_word(v, q) -> str:
    vals = _ints(v)
    if q <= 10:
        return "".join(str(x) for x in vals)
    return ",".join(str(x) for x in vals)


def format_biword(w: Bivector) -> str:
    q = w.kind.p
    return f"{format_word(w.first, q)}|{format_word(w.second, q)}"


def parse_word(text: str, q: int) -> tuple[int, ...]:
    text = text.strip().strip("()")
    parts = text.split(",") if "," in text else list(text)
    try:
        vals = tuple(int(p) for p in parts if p.strip())
    except ValueError as exc:
        raise ParseError(f"bad word literal {text!r}") from exc
    if any(not 0 <= v < q for v in vals):
        raise ParseError(f"word {text!r} has symbols outside 0..{q - 1}")
    return vals


def parse_biword(text: str, q: int = 2) -> Bivector:
    if text.count("|") != 1:
        raise ParseError(f"biword {text!r} needs exactly one '|' separator")
    a, b = text.split("|")
    return Bivector(parse_word(a, q), parse_word(b, q), gf(q))


# ---------------------------------------------------------------------------
# decoder

BasisPolicy = Callable[[int, Matrix], list[list[tuple]]]


def default_basis_policy(component: int, g: Matrix) -> list[list[tuple]]:
    """Basis 0 is the rows of ``g``; basis j replaces row (j-1 mod k) by its sum
    with the next row (cyclically), cumulatively, for at most 4k bases."""
    rows = [tuple(r) for r in g.rows]
    k = len(rows)
    bases = [list(rows)]
    if k < 2:
        return bases
    cur = list(rows)
    for j in range(1, 4 * k):
        r = (j - 1) % k
        cur = list(cur)
        cur[r] = tuple(a + b for a, b in zip(cur[r], cur[(r + 1) % k]))
        bases.append(cur)
    return bases


def explicit_bases(first=None, second=None, fallback: BasisPolicy = default_basis_policy) -> BasisPolicy:
    """A policy that uses the given list of bases for a component, if any.

    ``first`` / ``second`` are lists of bases; each basis is a list of vectors.
    """
    given = {1: first, 2: second}

    def policy(component: int, g: Matrix):
        bases = given[component]
        if bases is None:
            return fallback(component, g)
        kind = g.kind
        return [[tuple(kind.coerce(x) for x in vec) for vec in basis] for basis in bases]

    return policy


@dataclass(frozen=True)
class DecodeReport:
    case: int
    bases_tried: tuple[int, int]
    result: Bivector
    distance: tuple[int, int, int]
    paths: tuple[str, str] = field(default=("accepted", "accepted"))

    def to_doc(self) -> dict:
        return {"case": self.case, "bases_tried": list(self.bases_tried),
                "result": format_biword(self.result), "distance": list(self.distance),
                "paths": list(self.paths)}


def _decode_component(C, component, beta, g, h, policy, best_of):
    kind = C.kind
    ip = GFWeightedDot(C.q)
    bases = policy(component, g)
    best, tried = None, 0
    for basis in bases:
        tried += 1
        cand = pseudo_best_approximation(ip, basis, beta, kind)
        if cand is None:
            continue
        if h.nrows and any(x != 0 for x in h.apply(cand)):
            continue
        if not best_of:
            return cand, tried
        key = (sum(1 for a, b in zip(cand, beta) if a != b), _ints(cand))
        if best is None or key < best[0]:
            best = (key, cand)
    if best is None:
        raise DecoderExhausted(f"component {component}: every one of {tried} bases gave no codeword")
    return best[1], tried


def pseudo_decode(C: Bicode, beta, policy: BasisPolicy | None = None, best_of: bool = False) -> DecodeReport:
    """Decode a received biword by pseudo best biapproximation.

    A component already in its code is accepted unchanged.  Otherwise the
    sum ``sum <beta_i, c> c`` is taken over successive bases supplied by
    ``policy`` until it is a nonzero codeword.  With ``best_of`` every basis is
    tried and the candidate closest to ``beta_i`` (ties: lexicographically
    smallest) wins.
    """
    policy = policy or default_basis_policy
    w = _as_biword(C, beta)
    out, tried, paths = [], [], []
    in_code = []
    for comp, (b, g, h) in enumerate(zip((w.first, w.second), C.G.components(), C.H.components()), 1):
        ok = not h.nrows or all(x == 0 for x in h.apply(b))
        in_code.append(ok)
        if ok:
            out.append(b)
            tried.append(0)
            paths.append("accepted")
        else:
            cand, t = _decode_component(C, comp, b, g, h, policy, best_of)
            out.append(cand)
            tried.append(t)
            paths.append("projected")
    case = {(True, True): 0, (True, False): 1, (False, True): 2, (False, False): 3}[tuple(in_code)]
    result = Bivector(out[0], out[1], C.kind)
    return DecodeReport(case, tuple(tried), result, hamming_bidistance(w, result), tuple(paths))


def words_from_strings(words: Sequence[str]) -> list[tuple[int, ...]]:
    return [tuple(int(c) for c in w) for w in words]
