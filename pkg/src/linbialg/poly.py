"""Dense univariate polynomials over a scalar kind.

Coefficients are stored low degree first; ``coeffs[i]`` multiplies ``x**i``.
The highest stored coefficient is never zero and the zero polynomial has no
coefficients, so ``degree == len(coeffs) - 1`` (``-1`` for zero).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import ScalarKindMismatch
from .scalars import RATIONAL, ScalarKind, _PrimeField


class Poly:
    __slots__ = ("kind", "coeffs")

    def __init__(self, coeffs=(), kind: ScalarKind = RATIONAL):
        cs = [kind.coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.kind = kind
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, kind=RATIONAL):
        return cls((0, 1), kind)

    @classmethod
    def constant(cls, c, kind=RATIONAL):
        return cls((c,), kind)

    @classmethod
    def from_roots(cls, roots, kind=RATIONAL):
        p = cls((1,), kind)
        for r in roots:
            p = p * cls((-kind.coerce(r), 1), kind)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.kind.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other):
        if isinstance(other, Poly):
            if other.kind is not self.kind:
                raise ScalarKindMismatch(f"{self.kind.name} and {other.kind.name} polynomials")
            return other
        return Poly((other,), self.kind)

    def __add__(self, other):
        o = self._check(other)
        n = max(len(self.coeffs), len(o.coeffs))
        z = self.kind.zero
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = o.coeffs + (z,) * (n - len(o.coeffs))
        return Poly([u + v for u, v in zip(a, b)], self.kind)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.kind)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        o = self._check(other)
        if not self.coeffs or not o.coeffs:
            return Poly((), self.kind)
        out = [self.kind.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.kind)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly((1,), self.kind)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        g = self._check(other)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dg = g.degree
        inv_lead = 1 / g.leading
        quot = [self.kind.zero] * max(len(rem) - dg, 0)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i] * inv_lead
            if c == 0:
                continue
            quot[i - dg] = c
            for j, b in enumerate(g.coeffs):
                rem[i - dg + j] = rem[i - dg + j] - c * b
        return Poly(quot, self.kind), Poly(rem[:dg] if dg > 0 else (), self.kind)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = 1 / self.leading
        return Poly([c * inv for c in self.coeffs], self.kind)

    def __call__(self, x):
        acc = self.kind.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.kind is other.kind and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.kind.name, self.coeffs))

    def __repr__(self):
        return f"Poly({self}, {self.kind.name})"

    def __str__(self):
        return format_poly(self)


def format_poly(p: Poly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    fmt = p.kind.format
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        text = fmt(c)
        compound = any(ch in text[1:] for ch in "+-") or ("I" in text and text not in ("I", "-I"))
        if compound:
            if text.startswith("-"):
                parts.append(("-", f"({fmt(-c)}){mono}"))
            else:
                parts.append(("+", f"({text}){mono}"))
            continue
        neg = text.startswith("-")
        mag = text[1:] if neg else text
        if mono and mag == "1":
            mag = ""
        parts.append(("-" if neg else "+", mag + mono))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_divmod(f: Poly, g: Poly):
    return divmod(f, g)


def poly_divides(g: Poly, f: Poly) -> bool:
    """True iff ``g`` divides ``f`` exactly."""
    return (f % g).is_zero()


# ---------------------------------------------------------------------------
# roots in the base field

def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _integer_coeffs(p: Poly) -> list[int]:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


def _rational_root_candidates(p: Poly) -> list[Fraction]:
    ints = _integer_coeffs(p)
    lead, const = ints[-1], ints[0]
    cands = set()
    for a in _divisors(const):
        for b in _divisors(lead):
            cands.add(Fraction(a, b))
            cands.add(Fraction(-a, b))
    return sorted(cands)


def roots_in_field(p: Poly) -> tuple[list[tuple[object, int]], Poly]:
    """All roots of ``p`` lying in its coefficient field, with multiplicities.

    Returns ``(roots, cofactor)`` where ``roots`` is sorted ascending and
    ``cofactor`` is the monic part of ``p`` left after removing every linear
    factor (degree 0 when ``p`` splits).  Over Q the rational root test is
    applied to the cleared-denominator polynomial with deflation after each
    hit; over GF(p) every residue is tried.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every element as a root")
    kind = p.kind
    rest = p.monic()
    found = []

    def strip(r):
        nonlocal rest
        mult = 0
        lin = Poly((-r, 1), kind)
        while rest.degree > 0:
            q, rem = divmod(rest, lin)
            if not rem.is_zero():
                break
            rest = q
            mult += 1
        if mult:
            found.append((r, mult))

    if kind is RATIONAL:
        strip(Fraction(0))
        while rest.degree > 0:
            hit = next((c for c in _rational_root_candidates(rest) if rest(c) == 0), None)
            if hit is None:
                break
            strip(hit)
        found.sort(key=lambda rm: rm[0])
    elif isinstance(kind, _PrimeField):
        for v in range(kind.p):
            if rest.degree <= 0:
                break
            strip(kind.coerce(v))
        found.sort(key=lambda rm: rm[0].value)
    else:
        raise ScalarKindMismatch(f"root finding needs a field, not {kind.name}")
    return found, rest
