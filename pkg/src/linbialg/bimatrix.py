"""Bimatrices ``A1 ∪ A2`` and their componentwise algebra.

A bimatrix is an ordered pair of matrices over one scalar kind; the shapes may
differ.  Every operation acts on the two components independently, so the
functions here are thin pairings of :mod:`linbialg.matrix` routines plus the
bookkeeping that only makes sense for pairs (semi characteristic bivalues,
Jordan block reports, bialgebra classification).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (CharPolyDoesNotSplit, NotBidiagonalizable, NotSquare, ScalarKindMismatch,
                     ShapeMismatch, UnknownFamily)
from .matrix import Matrix, evaluate_at_matrix
from .poly import Poly, roots_in_field
from .scalars import RATIONAL, GFElement, ScalarKind


@dataclass(frozen=True)
class Bivector:
    first: tuple
    second: tuple
    kind: ScalarKind = RATIONAL

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(self.kind.coerce(x) for x in self.first))
        object.__setattr__(self, "second", tuple(self.kind.coerce(x) for x in self.second))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.first), len(self.second)

    def components(self) -> tuple[tuple, tuple]:
        return self.first, self.second

    def _check(self, other: "Bivector"):
        if other.kind is not self.kind:
            raise ScalarKindMismatch(f"{self.kind.name} vs {other.kind.name}")
        if other.shape != self.shape:
            raise ShapeMismatch(f"bivector shapes {self.shape} and {other.shape}")

    def __add__(self, other):
        self._check(other)
        return Bivector(tuple(a + b for a, b in zip(self.first, other.first)),
                        tuple(a + b for a, b in zip(self.second, other.second)), self.kind)

    def __sub__(self, other):
        self._check(other)
        return Bivector(tuple(a - b for a, b in zip(self.first, other.first)),
                        tuple(a - b for a, b in zip(self.second, other.second)), self.kind)

    def scale(self, c1, c2=None) -> "Bivector":
        c2 = c1 if c2 is None else c2
        return Bivector(tuple(c1 * a for a in self.first), tuple(c2 * a for a in self.second), self.kind)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.first) and all(x == 0 for x in self.second)

    @classmethod
    def zeros(cls, n1: int, n2: int, kind=RATIONAL):
        return cls((0,) * n1, (0,) * n2, kind)


@dataclass(frozen=True)
class Bipolynomial:
    first: Poly
    second: Poly

    def __str__(self):
        return f"({self.first}) ∪ ({self.second})"


@dataclass(frozen=True)
class Bimatrix:
    first: Matrix
    second: Matrix

    def __post_init__(self):
        if self.first.kind is not self.second.kind:
            raise ScalarKindMismatch(
                f"components over {self.first.kind.name} and {self.second.kind.name}")

    @classmethod
    def of(cls, rows1, rows2, kind=RATIONAL) -> "Bimatrix":
        return cls(Matrix(rows1, kind), Matrix(rows2, kind))

    @classmethod
    def identity(cls, n1: int, n2: int, kind=RATIONAL) -> "Bimatrix":
        return cls(Matrix.identity(n1, kind), Matrix.identity(n2, kind))

    @classmethod
    def zeros(cls, shape1, shape2, kind=RATIONAL) -> "Bimatrix":
        return cls(Matrix.zeros(*shape1, kind), Matrix.zeros(*shape2, kind))

    @property
    def kind(self) -> ScalarKind:
        return self.first.kind

    @property
    def shapes(self):
        return self.first.shape, self.second.shape

    def components(self) -> tuple[Matrix, Matrix]:
        return self.first, self.second

    @property
    def is_square(self) -> bool:
        return self.first.is_square and self.second.is_square and self.first.shape == self.second.shape

    @property
    def is_mixed_square(self) -> bool:
        return self.first.is_square and self.second.is_square and self.first.shape != self.second.shape

    @property
    def is_mixed_rectangular(self) -> bool:
        return not (self.first.is_square and self.second.is_square) and self.first.shape != self.second.shape

    def _pair(self, f) -> "Bimatrix":
        return Bimatrix(f(self.first), f(self.second))

    def __add__(self, other: "Bimatrix"):
        return Bimatrix(self.first + other.first, self.second + other.second)

    def __sub__(self, other: "Bimatrix"):
        return Bimatrix(self.first - other.first, self.second - other.second)

    def __neg__(self):
        return self._pair(lambda m: -m)

    def __matmul__(self, other: "Bimatrix"):
        return Bimatrix(self.first @ other.first, self.second @ other.second)

    def scale(self, c1, c2=None) -> "Bimatrix":
        return Bimatrix(self.first.scale(c1), self.second.scale(c1 if c2 is None else c2))

    @property
    def T(self) -> "Bimatrix":
        return self._pair(lambda m: m.T)

    def apply(self, v: Bivector) -> Bivector:
        if v.kind is not self.kind:
            raise ScalarKindMismatch(f"{self.kind.name} bimatrix on a {v.kind.name} bivector")
        return Bivector(self.first.apply(v.first), self.second.apply(v.second), self.kind)

    def is_zero(self) -> bool:
        return self.first.is_zero() and self.second.is_zero()

    def block(self) -> Matrix:
        """The single block-diagonal matrix ``[A1 0; 0 A2]``."""
        (m1, n1), (m2, n2) = self.shapes
        z = self.kind.zero
        rows = [r + (z,) * n2 for r in self.first.rows] + [(z,) * n1 + r for r in self.second.rows]
        return Matrix(rows, self.kind, n1 + n2)

    def det(self):
        return self.first.det(), self.second.det()

    def charpoly(self) -> Bipolynomial:
        return char_bipolynomial(self)


def bimatrix_arith(a: Bimatrix, b, op: str) -> Bimatrix:
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×", "@"):
        return a @ b
    if op == "scalar":
        return a.scale(b)
    raise ValueError(f"unknown bimatrix operation {op!r}")


def apply(a: Bimatrix, v: Bivector) -> Bivector:
    return a.apply(v)


def determinant(a: Bimatrix):
    return a.det()


def char_bipolynomial(a: Bimatrix) -> Bipolynomial:
    return Bipolynomial(a.first.charpoly(), a.second.charpoly())


def bitransformation_dimension(source: tuple[int, int], target: tuple[int, int]) -> int:
    """Free entries of a bitransformation between spaces of the given bidimensions."""
    (m, n), (m1, n1) = source, target
    return m * m1 + n * n1


def same_bidimension(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    """Same total dimension (the component split may differ)."""
    return sum(d1) == sum(d2)


def identical_bidimension(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    return tuple(d1) == tuple(d2)


# ---------------------------------------------------------------------------
# eigen analysis

def _order_key(x):
    return x.value if isinstance(x, GFElement) else x


@dataclass(frozen=True)
class Eigenspace:
    value: object
    multiplicity: int
    basis: tuple

    @property
    def geometric(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class ComponentEigen:
    charpoly: Poly
    spaces: tuple
    cofactor: Poly  # part of the characteristic polynomial without roots in the field

    @property
    def values(self) -> tuple:
        """Roots repeated by algebraic multiplicity, ascending."""
        return tuple(s.value for s in self.spaces for _ in range(s.multiplicity))

    @property
    def has_roots(self) -> bool:
        return bool(self.spaces)

    @property
    def splits(self) -> bool:
        return self.cofactor.degree == 0


@dataclass(frozen=True)
class EigenBipair:
    bivalue: tuple
    bivectors: tuple


@dataclass(frozen=True)
class EigenBivalues:
    first: ComponentEigen
    second: ComponentEigen

    @property
    def status(self) -> str:
        """``"full"``, ``"semi"`` (roots in exactly one component) or ``"none"``."""
        n = self.first.has_roots + self.second.has_roots
        return ("none", "semi", "full")[n]

    @property
    def values(self) -> tuple[tuple, tuple]:
        return self.first.values, self.second.values

    def pairs(self) -> list[EigenBipair]:
        return [EigenBipair((s1.value, s2.value), (s1.basis, s2.basis))
                for s1 in self.first.spaces for s2 in self.second.spaces]


def component_eigen(m: Matrix) -> ComponentEigen:
    if not m.is_square:
        raise NotSquare(f"{m.nrows}x{m.ncols} component is not square")
    cp = m.charpoly()
    roots, cofactor = roots_in_field(cp)
    n = m.nrows
    spaces = []
    for value, mult in roots:
        shifted = m - Matrix.identity(n, m.kind).scale(value)
        spaces.append(Eigenspace(value, mult, tuple(shifted.nullspace())))
    return ComponentEigen(cp, tuple(spaces), cofactor)


def eigen_bivalues(a: Bimatrix) -> EigenBivalues:
    return EigenBivalues(component_eigen(a.first), component_eigen(a.second))


def _diagonalize(m: Matrix, component: int) -> tuple[Matrix, Matrix]:
    eig = component_eigen(m)
    for s in eig.spaces:
        if s.geometric < s.multiplicity:
            raise NotBidiagonalizable(component, s.value, s.geometric, s.multiplicity)
    cols, diag = [], []
    for s in eig.spaces:
        for v in s.basis:
            cols.append(v)
            diag.append(s.value)
    if len(cols) < m.nrows:
        raise NotBidiagonalizable(component, None, len(cols), m.nrows)
    return Matrix.from_columns(cols, m.kind), Matrix.diag(diag, m.kind)


def bidiagonalize(a: Bimatrix) -> tuple[Bimatrix, Bimatrix]:
    """``(P, D)`` with ``Ai Pi = Pi Di``; eigenvalues ascend along each diagonal."""
    p1, d1 = _diagonalize(a.first, 1)
    p2, d2 = _diagonalize(a.second, 2)
    return Bimatrix(p1, p2), Bimatrix(d1, d2)


def minimal_polynomial(m: Matrix) -> Poly:
    """Monic generator of ``{p : p(M) = 0}`` from the first linear relation among I, M, M^2, ..."""
    if not m.is_square:
        raise NotSquare(f"{m.nrows}x{m.ncols} matrix is not square")
    n = m.nrows
    power = Matrix.identity(n, m.kind)
    flats = []
    for k in range(n + 1):
        flats.append(power.entries())
        rel = Matrix.from_columns(flats, m.kind, nrows=n * n).nullspace()
        if rel:
            coeffs = rel[0]
            lead = coeffs[-1]
            return Poly([c / lead for c in coeffs], m.kind)
        power = power @ m
    raise AssertionError("Cayley-Hamilton guarantees a relation by degree n")


def minimal_bipolynomial(a: Bimatrix) -> Bipolynomial:
    return Bipolynomial(minimal_polynomial(a.first), minimal_polynomial(a.second))


def cayley_hamilton_residual(a: Bimatrix) -> Bimatrix:
    cp = char_bipolynomial(a)
    return Bimatrix(evaluate_at_matrix(cp.first, a.first), evaluate_at_matrix(cp.second, a.second))


# ---------------------------------------------------------------------------
# Jordan biform

@dataclass(frozen=True)
class JordanBlock:
    value: object
    size: int

    def __str__(self):
        v = self.value
        text = str(v) if not isinstance(v, Fraction) or v.denominator != 1 else str(v.numerator)
        return f"J({text})[{self.size}]"


def jordan_blocks(m: Matrix, component: int = 1) -> list[JordanBlock]:
    """Block sizes from the rank sequence ``rank((M - c I)^k)``.

    Blocks are listed by eigenvalue descending, then size descending.
    """
    eig = component_eigen(m)
    if not eig.splits:
        raise CharPolyDoesNotSplit(component, eig.cofactor)
    n = m.nrows
    eye = Matrix.identity(n, m.kind)
    blocks = []
    for s in eig.spaces:
        shifted = m - eye.scale(s.value)
        ranks = [n]
        power = eye
        while ranks[-1] > n - s.multiplicity:
            power = power @ shifted
            ranks.append(power.rank())
        at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
        for size in range(len(at_least) - 1, 0, -1):
            blocks.extend([JordanBlock(s.value, size)] * (at_least[size - 1] - at_least[size]))
    blocks.sort(key=lambda b: (_order_key(b.value), b.size), reverse=True)
    return blocks


def jordan_matrix(blocks, kind=RATIONAL, superdiagonal: bool = False) -> Matrix:
    n = sum(b.size for b in blocks)
    rows = [[kind.zero] * n for _ in range(n)]
    at = 0
    for b in blocks:
        for i in range(b.size):
            rows[at + i][at + i] = kind.coerce(b.value)
            if i:
                if superdiagonal:
                    rows[at + i - 1][at + i] = kind.one
                else:
                    rows[at + i][at + i - 1] = kind.one
        at += b.size
    return Matrix(rows, kind, n)


@dataclass(frozen=True)
class JordanBiform:
    form: Bimatrix
    blocks: tuple  # (blocks of the first component, blocks of the second)

    def report(self) -> str:
        return " ∪ ".join(", ".join(str(b) for b in bs) for bs in self.blocks)


def jordan_biform(a: Bimatrix, superdiagonal: bool = False) -> JordanBiform:
    """Componentwise Jordan form; the 1s sit below the diagonal unless ``superdiagonal``."""
    b1 = jordan_blocks(a.first, 1)
    b2 = jordan_blocks(a.second, 2)
    form = Bimatrix(jordan_matrix(b1, a.kind, superdiagonal), jordan_matrix(b2, a.kind, superdiagonal))
    return JordanBiform(form, (tuple(b1), tuple(b2)))


# ---------------------------------------------------------------------------
# bialgebra classification

def _product_closed(family: str) -> bool:
    name, _, args = family.partition(":")
    name = name.strip().lower()
    try:
        nums = [int(x) for x in args.split(",")] if args else []
    except ValueError:
        raise UnknownFamily(f"bad parameters in {family!r}") from None
    if name == "row" and len(nums) == 1:
        return True
    if name == "square" and len(nums) == 1:
        return True
    if name == "rect" and len(nums) == 2:
        return nums[0] == nums[1]
    if name == "poly" and len(nums) == 1:
        return nums[0] == 0
    if name == "poly" and not nums:
        return True
    raise UnknownFamily(f"unsupported component family {family!r}")


def validate_linear_bialgebra(descriptor) -> str:
    """Classify a pair of concrete component families.

    Families: ``row:n`` (F^n, coordinatewise product), ``square:n``,
    ``rect:m,n``, ``poly:d`` (degree at most d) and ``poly`` (all polynomials).
    """
    first, second = descriptor
    closed = _product_closed(first) + _product_closed(second)
    return ("bivector space", "semi linear bialgebra", "linear bialgebra")[closed]
