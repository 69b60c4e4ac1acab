"""Neutrosophic matrices over Q(I) and fuzzy neutrosophic max-min composition.

Everything over Q(I) goes through the ring isomorphism
``a + bI -> (a, a + b)``: a neutrosophic matrix ``A`` splits into the rational
matrices ``A0`` (I -> 0) and ``A1`` (I -> 1), the rational computation runs on
each, and the results are recombined.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import NotSquare, ScalarKindMismatch, ShapeMismatch
from .matrix import Matrix, split_matrix
from .poly import Poly, roots_in_field
from .scalars import FUZZY, NEUTROSOPHIC, Neutro, fuzzy_max, fuzzy_min


def _neutro(m) -> Matrix:
    if isinstance(m, Matrix):
        if m.kind is NEUTROSOPHIC:
            return m
        return Matrix(m.rows, NEUTROSOPHIC, m.ncols)
    return Matrix(m, NEUTROSOPHIC)


def neutro_matmul(a, b) -> Matrix:
    return _neutro(a) @ _neutro(b)


def neutro_det(a) -> Neutro:
    return _neutro(a).det()


def neutro_char_poly(a) -> Poly:
    """``det(A - xI)``: leading coefficient ``(-1)^n``."""
    m = _neutro(a)
    if not m.is_square:
        raise NotSquare(f"characteristic polynomial of a {m.shape} matrix")
    monic = m.charpoly()
    return -monic if m.nrows % 2 else monic


def _root_multiset(m: Matrix) -> tuple[list, bool]:
    roots, rest = roots_in_field(m.charpoly())
    return [r for r, k in roots for _ in range(k)], rest.degree == 0


@dataclass(frozen=True)
class NeutroEigenvalue:
    value: Neutro
    classical: bool

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class NeutroEigenAnalysis:
    """Neutrosophic characteristic values of a square matrix over Q(I).

    ``values`` holds every ``unsplit(r0, r1)`` with ``r0`` a rational
    eigenvalue of ``A0`` and ``r1`` one of ``A1``; those also produced by the
    root pairing (equal roots first, then the rest in ascending order) are
    flagged classical.  ``rootless`` names the split components (0 or 1)
    without a rational eigenvalue.
    """

    values: tuple
    rootless: tuple
    split_roots: tuple

    @property
    def classical(self) -> tuple:
        return tuple(v.value for v in self.values if v.classical)

    @property
    def all_values(self) -> tuple:
        return tuple(v.value for v in self.values)

    @property
    def status(self) -> str:
        return "none in Q(I)" if not self.values else "found"


def _classical_pairs(r0: list, r1: list) -> list[tuple]:
    c0, c1 = Counter(r0), Counter(r1)
    common = c0 & c1
    pairs = [(r, r) for r in sorted(common.elements())]
    rest0 = sorted((c0 - common).elements())
    rest1 = sorted((c1 - common).elements())
    pairs.extend(zip(rest0, rest1))
    return pairs


def _order(x: Neutro):
    return (x.real, x.indet)


def neutro_eigenvalues(a) -> NeutroEigenAnalysis:
    m = _neutro(a)
    if not m.is_square:
        raise NotSquare(f"eigenvalues of a {m.shape} matrix")
    a0, a1 = split_matrix(m)
    r0, _ = _root_multiset(a0)
    r1, _ = _root_multiset(a1)
    classical = {Neutro.unsplit(u, v) for u, v in _classical_pairs(r0, r1)}
    full = {Neutro.unsplit(u, v) for u in set(r0) for v in set(r1)}
    values = tuple(NeutroEigenvalue(x, x in classical) for x in sorted(full, key=_order))
    rootless = tuple(i for i, rs in enumerate((r0, r1)) if not rs)
    return NeutroEigenAnalysis(values, rootless, (tuple(sorted(set(r0))), tuple(sorted(set(r1)))))


def eigen_residual(a, value) -> Neutro:
    """``det(A - value * Id)``; zero exactly when ``value`` is an eigenvalue."""
    m = _neutro(a)
    lam = NEUTROSOPHIC.coerce(value)
    return (m - Matrix.identity(m.nrows, NEUTROSOPHIC).scale(lam)).det()


def _fuzzy(m) -> Matrix:
    if isinstance(m, Matrix):
        if m.kind is not FUZZY:
            raise ScalarKindMismatch(f"fuzzy composition of a {m.kind.name} matrix")
        return m
    return Matrix(m, FUZZY)


def fuzzy_compose(p, q) -> Matrix:
    """Max-min composition ``r_ij = max_k min(p_ik, q_kj)`` on [0, 1] ∪ {I}."""
    p, q = _fuzzy(p), _fuzzy(q)
    if p.ncols != q.nrows:
        raise ShapeMismatch(f"cannot compose {p.shape} with {q.shape}")
    zero = FUZZY.zero
    out = []
    for row in p.rows:
        new = []
        for j in range(q.ncols):
            acc = None
            for k, x in enumerate(row):
                v = fuzzy_min(x, q.rows[k][j])
                acc = v if acc is None else fuzzy_max(acc, v)
            new.append(zero if acc is None else acc)
        out.append(new)
    return Matrix(out, FUZZY, q.ncols)
