"""Immutable dense matrices over a scalar kind.

Elimination-based methods (``rref``, ``rank``, ``nullspace``, ``inverse``) need
a field: rationals or GF(p).  ``det``, ``charpoly`` and ``inverse`` also accept
neutrosophic matrices, which are split into the two rational matrices obtained
from ``I -> 0`` and ``I -> 1`` and recombined afterwards.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NotSquare, ScalarKindMismatch, ShapeMismatch
from .poly import Poly
from .scalars import NEUTROSOPHIC, RATIONAL, Neutro, ScalarKind


class Matrix:
    __slots__ = ("kind", "rows", "nrows", "ncols")

    def __init__(self, rows, kind: ScalarKind = RATIONAL, ncols: int | None = None):
        data = tuple(tuple(kind.coerce(x) for x in row) for row in rows)
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise ShapeMismatch("ragged rows")
        self.kind = kind
        self.rows = data
        self.nrows = len(data)
        self.ncols = widths.pop() if widths else (ncols or 0)

    @classmethod
    def _raw(cls, rows, kind, ncols=None):
        m = object.__new__(cls)
        m.kind = kind
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = len(rows[0]) if rows else (ncols or 0)
        return m

    @classmethod
    def identity(cls, n: int, kind=RATIONAL):
        z, o = kind.zero, kind.one
        return cls._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), kind)

    @classmethod
    def zeros(cls, m: int, n: int, kind=RATIONAL):
        z = kind.zero
        return cls._raw(tuple((z,) * n for _ in range(m)), kind, n)

    @classmethod
    def diag(cls, values, kind=RATIONAL):
        values = [kind.coerce(v) for v in values]
        n = len(values)
        z = kind.zero
        return cls._raw(tuple(tuple(values[i] if i == j else z for j in range(n)) for i in range(n)), kind)

    @classmethod
    def from_columns(cls, cols, kind=RATIONAL, nrows: int | None = None):
        cols = list(cols)
        if not cols:
            return cls._raw(tuple(() for _ in range(nrows or 0)), kind, 0)
        return cls(list(zip(*cols)), kind)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self.rows)) if self.rows and self.ncols else
                           tuple(() for _ in range(self.ncols)), self.kind, self.nrows)

    def entries(self) -> list:
        return [x for r in self.rows for x in r]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.kind is other.kind and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.kind.name, self.shape, self.rows))

    def __repr__(self):
        return f"Matrix({[[self.kind.format(x) for x in r] for r in self.rows]}, {self.kind.name})"

    def _same(self, other: "Matrix"):
        if other.kind is not self.kind:
            raise ScalarKindMismatch(f"{self.kind.name} vs {other.kind.name}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
                           self.kind, self.ncols)

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.kind, self.ncols)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.kind.coerce(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.kind, self.ncols)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._same(other)
            if self.ncols != other.nrows:
                raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
            z = self.kind.zero
            cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = z
                    for a, b in zip(r, c):
                        if a != 0 and b != 0:
                            acc = acc + a * b
                    row.append(acc)
                out.append(tuple(row))
            return Matrix._raw(tuple(out), self.kind, other.ncols)
        return NotImplemented

    def apply(self, v) -> tuple:
        """Matrix-vector product with ``v`` a sequence of scalars."""
        if len(v) != self.ncols:
            raise ShapeMismatch(f"vector of length {len(v)} for a {self.shape} matrix")
        v = [self.kind.coerce(x) for x in v]
        z = self.kind.zero
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, v):
                acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, k: int) -> "Matrix":
        self._need_square()
        result = Matrix.identity(self.nrows, self.kind)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def _need_square(self):
        if not self.is_square:
            raise NotSquare(f"{self.nrows}x{self.ncols} matrix is not square")

    def _need_field(self, what):
        if not self.kind.is_field:
            raise ScalarKindMismatch(f"{what} needs field scalars, not {self.kind.name}")

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        self._need_field("rref")
        m = [list(r) for r in self.rows]
        pivots = []
        pr = 0
        for c in range(self.ncols):
            piv = next((i for i in range(pr, self.nrows) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[pr], m[piv] = m[piv], m[pr]
            inv = 1 / m[pr][c]
            m[pr] = [x * inv for x in m[pr]]
            for i in range(self.nrows):
                if i != pr and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[pr])]
            pivots.append(c)
            pr += 1
            if pr == self.nrows:
                break
        return Matrix._raw(tuple(tuple(r) for r in m), self.kind, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[tuple]:
        """Basis of ``{v : self v = 0}``.

        One basis vector per free column (free variable set to 1, the others
        to 0).  Over Q each vector is rescaled to coprime integers whose first
        nonzero entry is positive; over GF(p) the first nonzero entry is 1.
        """
        r, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        z, o = self.kind.zero, self.kind.one
        basis = []
        for f in free:
            v = [z] * self.ncols
            v[f] = o
            for row, pc in enumerate(pivots):
                v[pc] = -r.rows[row][f]
            basis.append(normalize_vector(v, self.kind))
        return basis

    def det(self):
        self._need_square()
        if self.kind is NEUTROSOPHIC:
            a0, a1 = split_matrix(self)
            return Neutro.unsplit(a0.det(), a1.det())
        self._need_field("det")
        return _bareiss_det([list(r) for r in self.rows], self.kind)

    def inverse(self) -> "Matrix":
        self._need_square()
        if self.kind is NEUTROSOPHIC:
            a0, a1 = split_matrix(self)
            return unsplit_matrix(a0.inverse(), a1.inverse())
        n = self.nrows
        aug = Matrix._raw(tuple(r + e for r, e in zip(self.rows, Matrix.identity(n, self.kind).rows)),
                          self.kind)
        r, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix._raw(tuple(row[n:] for row in r.rows), self.kind)

    def charpoly(self) -> Poly:
        """Monic ``det(xI - A)``, computed division-free (Berkowitz)."""
        self._need_square()
        if self.kind is NEUTROSOPHIC:
            a0, a1 = split_matrix(self)
            p0, p1 = a0.charpoly(), a1.charpoly()
            return Poly([Neutro.unsplit(u, v) for u, v in zip(p0.coeffs, p1.coeffs)], NEUTROSOPHIC)
        high_first = _berkowitz([list(r) for r in self.rows], self.kind)
        return Poly(list(reversed(high_first)), self.kind)


def normalize_vector(v, kind) -> tuple:
    v = [kind.coerce(x) for x in v]
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        return tuple(v)
    if kind is RATIONAL:
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        sign = 1 if lead > 0 else -1
        return tuple(Fraction(sign * x // g) for x in ints)
    if kind.is_field:
        inv = 1 / lead
        return tuple(x * inv for x in v)
    return tuple(v)


def _bareiss_det(m, kind):
    n = len(m)
    if n == 0:
        return kind.one
    sign = 1
    prev = kind.one
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return kind.zero
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def _berkowitz(a, kind):
    """Coefficients of det(xI - A), highest degree first."""
    n = len(a)
    if n == 0:
        return [kind.one]
    if n == 1:
        return [kind.one, -a[0][0]]
    top = a[0][0]
    row = a[0][1:]
    col = [a[i][0] for i in range(1, n)]
    sub = [r[1:] for r in a[1:]]
    z = kind.zero
    seq = [kind.one, -top]
    vec = col
    for _ in range(n - 1):
        acc = z
        for r, v in zip(row, vec):
            acc = acc + r * v
        seq.append(-acc)
        vec = [sum((s * v for s, v in zip(srow, vec)), z) for srow in sub]
    inner = _berkowitz(sub, kind)
    out = []
    for i in range(n + 1):
        acc = z
        for j in range(min(i, n - 1) + 1):
            if i - j < len(seq):
                acc = acc + seq[i - j] * inner[j]
        out.append(acc)
    return out


def split_matrix(m: Matrix) -> tuple[Matrix, Matrix]:
    """Rational images of a neutrosophic matrix under ``I -> 0`` and ``I -> 1``."""
    if m.kind is not NEUTROSOPHIC:
        raise ScalarKindMismatch("split needs a neutrosophic matrix")
    lo = tuple(tuple(x.real for x in r) for r in m.rows)
    hi = tuple(tuple(x.real + x.indet for x in r) for r in m.rows)
    return Matrix._raw(lo, RATIONAL, m.ncols), Matrix._raw(hi, RATIONAL, m.ncols)


def unsplit_matrix(lo: Matrix, hi: Matrix) -> Matrix:
    if lo.shape != hi.shape:
        raise ShapeMismatch("split images differ in shape")
    rows = tuple(tuple(Neutro.unsplit(u, v) for u, v in zip(r, s)) for r, s in zip(lo.rows, hi.rows))
    return Matrix._raw(rows, NEUTROSOPHIC, lo.ncols)


def evaluate_at_matrix(p: Poly, m: Matrix) -> Matrix:
    """``p(M)`` by Horner's rule."""
    m._need_square()
    n = m.nrows
    acc = Matrix.zeros(n, n, m.kind)
    eye = Matrix.identity(n, m.kind)
    for c in reversed(p.coeffs):
        acc = acc @ m + eye.scale(m.kind.coerce(c))
    return acc
