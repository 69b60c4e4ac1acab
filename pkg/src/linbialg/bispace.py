"""Inner biproducts, Gram-Schmidt biorthogonalization and projections.

Components are coefficient vectors.  A polynomial component of degree at most
``d`` is the vector of its ``d + 1`` coefficients, low degree first, and its L2
inner product on ``[a, b]`` is evaluated through the exact moments
``<x^i, x^j> = (b^(i+j+1) - a^(i+j+1)) / (i+j+1)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bimatrix import Bivector
from .errors import (BasisNotBiorthogonal, LinearlyDependentInput, ParseError, ScalarKindMismatch,
                     ShapeMismatch, UnsupportedComponentFamily, ZeroNormEncountered)
from .matrix import Matrix, normalize_vector
from .scalars import RATIONAL, ScalarKind, _PrimeField, gf


class InnerProduct:
    """A symmetric bilinear form on coefficient vectors."""

    pseudo = False

    def gram_entry(self, i: int, j: int, kind):
        raise NotImplementedError

    def __call__(self, u, v, kind: ScalarKind = RATIONAL):
        if len(u) != len(v):
            raise ShapeMismatch(f"vectors of length {len(u)} and {len(v)}")
        acc = kind.zero
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b != 0:
                    g = self.gram_entry(i, j, kind)
                    if g != 0:
                        acc = acc + a * g * b
        return acc


@dataclass(frozen=True)
class Dot(InnerProduct):
    def gram_entry(self, i, j, kind):
        return kind.one if i == j else kind.zero

    def __call__(self, u, v, kind=RATIONAL):
        if len(u) != len(v):
            raise ShapeMismatch(f"vectors of length {len(u)} and {len(v)}")
        acc = kind.zero
        for a, b in zip(u, v):
            acc = acc + a * b
        return acc

    def __str__(self):
        return "dot"


@dataclass(frozen=True)
class WeightedDot(InnerProduct):
    weights: tuple

    def __post_init__(self):
        ws = tuple(Fraction(w) for w in self.weights)
        if any(w <= 0 for w in ws):
            raise ValueError("weights of a rational inner product must be positive")
        object.__setattr__(self, "weights", ws)

    def gram_entry(self, i, j, kind):
        if i >= len(self.weights):
            raise ShapeMismatch(f"no weight for coordinate {i}")
        return kind.coerce(self.weights[i]) if i == j else kind.zero

    def __str__(self):
        return "wdot:" + ",".join(RATIONAL.format(w) for w in self.weights)


@functools.lru_cache(maxsize=1024)
def _moment(a: Fraction, b: Fraction, k: int) -> Fraction:
    """Integral of x^(k-1) over [a, b]."""
    return (b ** k - a ** k) / k


@dataclass(frozen=True)
class PolyL2(InnerProduct):
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not self.a < self.b:
            raise ValueError("L2 interval needs a < b")

    def gram_entry(self, i, j, kind):
        return kind.coerce(_moment(self.a, self.b, i + j + 1))

    def __str__(self):
        return f"l2:{RATIONAL.format(self.a)},{RATIONAL.format(self.b)}"


@dataclass(frozen=True)
class GFWeightedDot(InnerProduct):
    """Weighted dot product over GF(p); ``<v, v> = 0`` may hold for ``v != 0``."""

    p: int
    weights: tuple = ()

    pseudo = True

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) % self.p for w in self.weights))

    def gram_entry(self, i, j, kind):
        if i != j:
            return kind.zero
        if not self.weights:
            return kind.one
        if i >= len(self.weights):
            raise ShapeMismatch(f"no weight for coordinate {i}")
        return kind.coerce(self.weights[i])

    def __str__(self):
        return "gfdot:" + ",".join(str(w) for w in self.weights) if self.weights else "gfdot"


def parse_ip(text: str, kind: ScalarKind = RATIONAL) -> InnerProduct:
    name, _, args = text.strip().partition(":")
    vals = [x for x in args.split(",") if x.strip()] if args else []
    try:
        if name == "dot":
            return Dot()
        if name == "wdot":
            return WeightedDot(tuple(Fraction(v) for v in vals))
        if name == "l2":
            a, b = (Fraction(v) for v in vals)
            return PolyL2(a, b)
        if name == "gfdot":
            if not isinstance(kind, _PrimeField):
                raise ParseError("gfdot needs a gf:<p> scalar kind")
            return GFWeightedDot(kind.p, tuple(int(v) for v in vals))
    except ParseError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad inner product descriptor {text!r}: {exc}") from exc
    raise ParseError(f"unknown inner product descriptor {text!r}")


@dataclass(frozen=True)
class InnerBiproduct:
    first: InnerProduct
    second: InnerProduct
    kind: ScalarKind = RATIONAL

    def __post_init__(self):
        for ip in (self.first, self.second):
            if not isinstance(ip, InnerProduct):
                raise UnsupportedComponentFamily(f"{ip!r} is not an inner product descriptor")
            if isinstance(ip, GFWeightedDot) and self.kind is not gf(ip.p):
                raise ScalarKindMismatch(f"gfdot over GF({ip.p}) with {self.kind.name} scalars")
            if isinstance(ip, (WeightedDot, PolyL2)) and self.kind is not RATIONAL:
                raise ScalarKindMismatch(f"{ip} needs rational scalars")

    @classmethod
    def parse(cls, texts, kind=RATIONAL) -> "InnerBiproduct":
        t1, t2 = texts
        return cls(parse_ip(t1, kind), parse_ip(t2, kind), kind)

    @property
    def pseudo(self) -> bool:
        return self.kind is not RATIONAL

    def components(self):
        return self.first, self.second

    def __call__(self, u: Bivector, v: Bivector) -> tuple:
        return (self.first(u.first, v.first, self.kind), self.second(u.second, v.second, self.kind))

    def describe(self) -> list[str]:
        return [str(self.first), str(self.second)]


def inner_biproduct(ip: InnerBiproduct, u: Bivector, v: Bivector) -> tuple:
    if u.shape != v.shape:
        raise ShapeMismatch(f"bivector shapes {u.shape} and {v.shape}")
    return ip(u, v)


def binorm_squared(ip: InnerBiproduct, v: Bivector) -> tuple:
    if ip.pseudo:
        raise ScalarKindMismatch("binorms need a positive definite (rational) inner biproduct")
    return ip(v, v)


def is_biorthogonal(ip: InnerBiproduct, u: Bivector, v: Bivector) -> str:
    d1, d2 = inner_biproduct(ip, u, v)
    zeros = (d1 == 0) + (d2 == 0)
    return ("neither", "semi-biorthogonal", "biorthogonal")[zeros]


@dataclass(frozen=True)
class Bibasis:
    """Two independent lists of component vectors (their lengths may differ)."""

    first: tuple
    second: tuple

    def components(self):
        return self.first, self.second

    @classmethod
    def from_bivectors(cls, vs: Sequence[Bivector]) -> "Bibasis":
        return cls(tuple(v.first for v in vs), tuple(v.second for v in vs))


def _combine(kind, coeffs, vectors, n):
    out = [kind.zero] * n
    for c, v in zip(coeffs, vectors):
        if c != 0:
            out = [o + c * x for o, x in zip(out, v)]
    return tuple(out)


def _gram_schmidt(ip: InnerProduct, vectors, kind, component: int) -> list[tuple]:
    out, norms = [], []
    for idx, beta in enumerate(vectors):
        alpha = tuple(beta)
        for prev, nrm in zip(out, norms):
            c = ip(beta, prev, kind) / nrm
            if c != 0:
                alpha = tuple(a - c * p for a, p in zip(alpha, prev))
        if all(x == 0 for x in alpha):
            raise LinearlyDependentInput(idx, component)
        nrm = ip(alpha, alpha, kind)
        if nrm == 0:
            raise ZeroNormEncountered(f"nonzero vector of zero norm in component {component}")
        out.append(alpha)
        norms.append(nrm)
    return out


def gram_schmidt_biorthogonalize(ip: InnerBiproduct, vs: Sequence[Bivector],
                                 primitive: bool = False) -> list[Bivector]:
    """Biorthogonal bivectors spanning the same prefixes as ``vs``.

    The output is not normalized.  With ``primitive=True`` each component is
    rescaled to coprime integers instead (square roots are not available).
    """
    if ip.pseudo:
        raise ScalarKindMismatch("Gram-Schmidt is only offered over the rationals")
    vs = list(vs)
    if not vs:
        return []
    shape = vs[0].shape
    if any(v.shape != shape for v in vs):
        raise ShapeMismatch("bivector set is not shape-homogeneous")
    c1 = _gram_schmidt(ip.first, [v.first for v in vs], ip.kind, 1)
    c2 = _gram_schmidt(ip.second, [v.second for v in vs], ip.kind, 2)
    if primitive:
        c1 = [normalize_vector(v, ip.kind) for v in c1]
        c2 = [normalize_vector(v, ip.kind) for v in c2]
    return [Bivector(a, b, ip.kind) for a, b in zip(c1, c2)]


def _project(ip: InnerProduct, basis, beta, kind, component):
    norms = []
    for i, w in enumerate(basis):
        nrm = ip(w, w, kind)
        if nrm == 0:
            raise BasisNotBiorthogonal(f"basis vector {i} of component {component} has zero norm")
        norms.append(nrm)
        for j in range(i):
            if ip(w, basis[j], kind) != 0:
                raise BasisNotBiorthogonal(
                    f"basis vectors {j} and {i} of component {component} are not orthogonal")
    coeffs = [ip(beta, w, kind) / n for w, n in zip(basis, norms)]
    return _combine(kind, coeffs, basis, len(beta))


def best_biapproximation(ip: InnerBiproduct, W, beta: Bivector) -> Bivector:
    """Orthogonal projection of ``beta`` onto the span of a biorthogonal basis ``W``."""
    if ip.pseudo:
        raise ScalarKindMismatch("best biapproximation needs the rationals; see pseudo_best_approximation")
    basis = W if isinstance(W, Bibasis) else Bibasis.from_bivectors(W)
    a1 = _project(ip.first, basis.first, beta.first, ip.kind, 1)
    a2 = _project(ip.second, basis.second, beta.second, ip.kind, 2)
    return Bivector(a1, a2, ip.kind)


def _complement(ip: InnerProduct, vectors, n, kind, component) -> list[tuple]:
    for v in vectors:
        if len(v) != n:
            raise ShapeMismatch(f"vector of length {len(v)} in a {n}-dimensional component {component}")
    rows = [[sum((s[i] * ip.gram_entry(i, j, kind) for i in range(n) if s[i] != 0), kind.zero)
             for j in range(n)] for s in vectors]
    return Matrix(rows, kind, n).nullspace()


def biorthogonal_bicomplement(ip: InnerBiproduct, S, ambient: tuple[int, int]) -> Bibasis:
    """Basis of ``{v : <v, s> = (0, 0) for all s in S}`` in each component."""
    basis = S if isinstance(S, Bibasis) else Bibasis.from_bivectors(S)
    n1, n2 = ambient
    if n1 < 0 or n2 < 0:
        raise UnsupportedComponentFamily("ambient dimensions must be finite and non-negative")
    return Bibasis(tuple(_complement(ip.first, basis.first, n1, ip.kind, 1)),
                   tuple(_complement(ip.second, basis.second, n2, ip.kind, 2)))


def pseudo_best_approximation(ip: InnerProduct, basis, beta, kind: ScalarKind):
    """``sum <beta, c> c`` over the given basis in GF(p)^n.

    Returns ``None`` when the sum is the zero vector: no approximation exists
    for this basis and the caller decides whether to try another one.
    """
    beta = tuple(kind.coerce(x) for x in beta)
    vecs = [tuple(kind.coerce(x) for x in c) for c in basis]
    for c in vecs:
        if len(c) != len(beta):
            raise ShapeMismatch(f"basis vector of length {len(c)} for a word of length {len(beta)}")
    coeffs = [ip(beta, c, kind) for c in vecs]
    out = _combine(kind, coeffs, vecs, len(beta))
    return None if all(x == 0 for x in out) else out
