"""Exact scalars: rationals, prime fields, neutrosophic numbers, fuzzy values.

Rationals are :class:`fractions.Fraction`.  Prime-field elements belong to a
class produced by :func:`GF`, so the modulus lives on the class and never on the
element.  Neutrosophic numbers ``a + bI`` obey ``I*I = I``; all of their
multiplicative structure goes through the ring isomorphism

    a + bI  <->  (a, a + b)

which turns Q(I) into two independent copies of Q.

Each scalar family is described by a :class:`ScalarKind`, which knows how to
coerce, parse and format its elements.  Matrices, polynomials and documents
carry a kind rather than inspecting entries.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction

from .errors import GradedIndeterminateUnsupported, NotAUnit, ParseError, ScalarKindMismatch

__all__ = [
    "Fraction", "GF", "GFElement", "Neutro", "Fuzzy", "I",
    "ScalarKind", "RATIONAL", "NEUTROSOPHIC", "FUZZY", "gf", "kind_from_name",
    "rational_arith", "neutro_mul", "neutro_split", "neutro_unsplit",
    "neutro_is_unit", "neutro_inverse", "fuzzy_min", "fuzzy_max", "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def rational_arith(a, b, op: str) -> Fraction:
    a, b = Fraction(a), Fraction(b)
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operator {op!r}")


# ---------------------------------------------------------------------------
# prime fields

class GFElement:
    """Residue modulo ``p``; concrete subclasses are built by :func:`GF`."""

    __slots__ = ("value",)
    p: int = 0

    def __init__(self, value=0):
        if isinstance(value, GFElement):
            if value.p != self.p:
                raise ScalarKindMismatch(f"cannot mix GF({value.p}) and GF({self.p})")
            value = value.value
        elif isinstance(value, Fraction):
            if value.denominator != 1:
                value = value.numerator * pow(value.denominator, -1, self.p)
            else:
                value = value.numerator
        elif not isinstance(value, int):
            raise TypeError(f"cannot build a GF({self.p}) element from {type(value).__name__}")
        self.value = value % self.p

    def _other(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ScalarKindMismatch(f"cannot mix GF({other.p}) and GF({self.p})")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else type(self)(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else type(self)(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else type(self)(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else type(self)(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return type(self)(-self.value)

    def __pos__(self):
        return self

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return type(self)(pow(self.value, -1, self.p))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * type(self)(o).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return type(self)(o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return type(self)(pow(self.value, k, self.p))

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.p})({self.value})"

    def __str__(self):
        return str(self.value)


@functools.lru_cache(maxsize=None)
def GF(p: int) -> type:
    """Element class of the prime field of order ``p``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return type(f"GF{p}", (GFElement,), {"__slots__": (), "p": p})


# ---------------------------------------------------------------------------
# neutrosophic numbers

class Neutro:
    """The neutrosophic number ``real + indet*I`` with ``I*I = I``."""

    __slots__ = ("real", "indet")

    def __init__(self, real=0, indet=0):
        self.real = Fraction(real)
        self.indet = Fraction(indet)

    @classmethod
    def coerce(cls, x) -> "Neutro":
        if isinstance(x, Neutro):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot interpret {type(x).__name__} as a neutrosophic number")

    def split(self) -> tuple[Fraction, Fraction]:
        """Images under ``I -> 0`` and ``I -> 1``."""
        return self.real, self.real + self.indet

    @classmethod
    def unsplit(cls, u, v) -> "Neutro":
        u, v = Fraction(u), Fraction(v)
        return cls(u, v - u)

    def __add__(self, other):
        if not isinstance(other, (Neutro, int, Fraction)):
            return NotImplemented
        o = Neutro.coerce(other)
        return Neutro(self.real + o.real, self.indet + o.indet)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Neutro, int, Fraction)):
            return NotImplemented
        o = Neutro.coerce(other)
        return Neutro(self.real - o.real, self.indet - o.indet)

    def __rsub__(self, other):
        if not isinstance(other, (Neutro, int, Fraction)):
            return NotImplemented
        return Neutro.coerce(other) - self

    def __neg__(self):
        return Neutro(-self.real, -self.indet)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, (Neutro, int, Fraction)):
            return NotImplemented
        o = Neutro.coerce(other)
        a, b, c, d = self.real, self.indet, o.real, o.indet
        return Neutro(a * c, a * d + b * c + b * d)

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        u, v = self.split()
        return u != 0 and v != 0

    def inverse(self) -> "Neutro":
        u, v = self.split()
        if u == 0 or v == 0:
            raise NotAUnit(f"{self} is not invertible in Q(I)")
        return Neutro.unsplit(1 / u, 1 / v)

    def __truediv__(self, other):
        if not isinstance(other, (Neutro, int, Fraction)):
            return NotImplemented
        return self * Neutro.coerce(other).inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (Neutro, int, Fraction)):
            return NotImplemented
        return Neutro.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        u, v = self.split()
        if k < 0:
            return self.inverse() ** (-k)
        return Neutro.unsplit(u ** k, v ** k)

    def __eq__(self, other):
        if isinstance(other, Neutro):
            return self.real == other.real and self.indet == other.indet
        if isinstance(other, (int, Fraction)):
            return self.indet == 0 and self.real == other
        return NotImplemented

    def __hash__(self):
        if self.indet == 0:
            return hash(self.real)
        return hash((self.real, self.indet))

    def __bool__(self):
        return bool(self.real) or bool(self.indet)

    def __repr__(self):
        return f"Neutro({self.real}, {self.indet})"

    def __str__(self):
        return format_neutro(self)


I = Neutro(0, 1)


def neutro_mul(x, y) -> Neutro:
    return Neutro.coerce(x) * Neutro.coerce(y)


def neutro_split(x) -> tuple[Fraction, Fraction]:
    return Neutro.coerce(x).split()


def neutro_unsplit(u, v) -> Neutro:
    return Neutro.unsplit(u, v)


def neutro_is_unit(x) -> bool:
    return Neutro.coerce(x).is_unit()


def neutro_inverse(x) -> Neutro:
    return Neutro.coerce(x).inverse()


def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_neutro(x: Neutro) -> str:
    a, b = x.real, x.indet
    if b == 0:
        return _fmt_frac(a)
    if b == 1:
        ipart = "I"
    elif b == -1:
        ipart = "-I"
    else:
        ipart = _fmt_frac(b) + "I"
    if a == 0:
        return ipart
    sign = "" if ipart.startswith("-") else "+"
    return f"{_fmt_frac(a)}{sign}{ipart}"


_TERM = re.compile(r"[+-]?[^+-]+")


def parse_neutro(text: str) -> Neutro:
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty neutrosophic literal")
    terms = _TERM.findall(s)
    if "".join(terms) != s:
        raise ParseError(f"bad neutrosophic literal {text!r}")
    real = indet = Fraction(0)
    try:
        for term in terms:
            if term.endswith("I"):
                coef = term[:-1]
                if coef in ("", "+"):
                    indet += 1
                elif coef == "-":
                    indet -= 1
                else:
                    indet += Fraction(coef.rstrip("*"))
            else:
                real += Fraction(term)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad neutrosophic literal {text!r}") from exc
    return Neutro(real, indet)


# ---------------------------------------------------------------------------
# fuzzy (integral) neutrosophic values

_SCALE = 10 ** 6


class Fuzzy:
    """A grade in [0, 1], or a graded indeterminate ``n*I`` with n in (0, 1].

    Grades are exact decimals stored as integer millionths.  Only the integral
    set [0, 1] together with the full indeterminate ``I`` can be combined by
    :func:`fuzzy_min` / :func:`fuzzy_max`.
    """

    __slots__ = ("micros", "indeterminate")

    def __init__(self, micros: int, indeterminate: bool = False):
        if not isinstance(micros, int):
            raise TypeError("grades are integer millionths")
        if indeterminate and not 0 < micros <= _SCALE:
            raise ValueError("indeterminate grade must lie in (0, 1]")
        if not indeterminate and not 0 <= micros <= _SCALE:
            raise ValueError("fuzzy grade must lie in [0, 1]")
        self.micros = micros
        self.indeterminate = indeterminate

    @classmethod
    def real(cls, value) -> "Fuzzy":
        q = Fraction(value) if not isinstance(value, str) else Fraction(value)
        scaled = q * _SCALE
        if scaled.denominator != 1:
            raise ValueError(f"{value} needs more than 6 decimal places")
        return cls(int(scaled))

    @property
    def is_I(self) -> bool:
        return self.indeterminate and self.micros == _SCALE

    @property
    def grade(self) -> Fraction:
        return Fraction(self.micros, _SCALE)

    def __eq__(self, other):
        if isinstance(other, Fuzzy):
            return self.micros == other.micros and self.indeterminate == other.indeterminate
        if isinstance(other, (int, Fraction)) and not self.indeterminate:
            return self.grade == other
        return NotImplemented

    def __hash__(self):
        return hash((self.micros, self.indeterminate))

    def __repr__(self):
        return f"Fuzzy({format_fuzzy(self)!r})"

    def __str__(self):
        return format_fuzzy(self)


FUZZY_I = Fuzzy(_SCALE, True)


def _decimal(micros: int) -> str:
    whole, frac = divmod(micros, _SCALE)
    if frac == 0:
        return str(whole)
    return f"{whole}.{frac:06d}".rstrip("0")


def format_fuzzy(x: Fuzzy) -> str:
    if x.indeterminate:
        return "I" if x.micros == _SCALE else _decimal(x.micros) + "I"
    return _decimal(x.micros)


_DECIMAL = re.compile(r"^(0|1|0?\.\d{1,6}|0\.\d{1,6}|1\.0{1,6})$")


def parse_fuzzy(text: str) -> Fuzzy:
    s = text.strip()
    indet = s.endswith("I")
    body = s[:-1] if indet else s
    if indet and body == "":
        return FUZZY_I
    if not _DECIMAL.match(body):
        raise ParseError(f"bad fuzzy literal {text!r}")
    micros = int(Fraction(body) * _SCALE)
    try:
        return Fuzzy(micros, indet)
    except ValueError as exc:
        raise ParseError(f"bad fuzzy literal {text!r}: {exc}") from exc


def _integral(x: Fuzzy) -> Fuzzy:
    if x.indeterminate and x.micros != _SCALE:
        raise GradedIndeterminateUnsupported(
            f"min/max with the graded indeterminate {format_fuzzy(x)} is undefined")
    return x


def fuzzy_min(x: Fuzzy, y: Fuzzy) -> Fuzzy:
    x, y = _integral(x), _integral(y)
    if x.indeterminate and y.indeterminate:
        return FUZZY_I
    if x.indeterminate or y.indeterminate:
        r = y if x.indeterminate else x
        return r if r.micros == 0 else FUZZY_I
    return x if x.micros <= y.micros else y


def fuzzy_max(x: Fuzzy, y: Fuzzy) -> Fuzzy:
    x, y = _integral(x), _integral(y)
    if x.indeterminate and y.indeterminate:
        return FUZZY_I
    if x.indeterminate or y.indeterminate:
        r = y if x.indeterminate else x
        return r if r.micros == _SCALE else FUZZY_I
    return x if x.micros >= y.micros else y


# ---------------------------------------------------------------------------
# scalar kinds

class ScalarKind:
    """Describes one scalar family: coercion, literals, and field structure."""

    name: str = ""
    is_field: bool = True

    def coerce(self, x):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def __repr__(self):
        return f"<scalar kind {self.name}>"


class _Rational(ScalarKind):
    name = "rational"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Neutro) and x.indet == 0:
            return x.real
        raise ScalarKindMismatch(f"{x!r} is not a rational")

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {text!r}") from exc

    def format(self, x):
        return _fmt_frac(x)


class _PrimeField(ScalarKind):
    def __init__(self, p: int):
        self.p = p
        self.cls = GF(p)
        self.name = f"gf:{p}"

    def coerce(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise ScalarKindMismatch(f"GF({x.p}) element in a GF({self.p}) container")
            return x
        if isinstance(x, bool):
            return self.cls(int(x))
        if isinstance(x, (int, Fraction)):
            return self.cls(x)
        if isinstance(x, str):
            return self.parse(x)
        raise ScalarKindMismatch(f"{x!r} is not an element of GF({self.p})")

    def parse(self, text):
        try:
            return self.cls(int(text.strip()))
        except ValueError as exc:
            raise ParseError(f"bad GF({self.p}) literal {text!r}") from exc


class _Neutrosophic(ScalarKind):
    name = "neutrosophic"
    is_field = False

    def coerce(self, x):
        if isinstance(x, str):
            return parse_neutro(x)
        if isinstance(x, bool):
            raise ScalarKindMismatch("booleans are not neutrosophic numbers")
        try:
            return Neutro.coerce(x)
        except TypeError as exc:
            raise ScalarKindMismatch(str(exc)) from exc

    def parse(self, text):
        return parse_neutro(text)

    def format(self, x):
        return format_neutro(x)


class _Fuzzy(ScalarKind):
    name = "fuzzy"
    is_field = False

    def coerce(self, x):
        if isinstance(x, Fuzzy):
            return x
        if isinstance(x, str):
            return parse_fuzzy(x)
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return Fuzzy.real(x)
        if isinstance(x, Neutro) and x == I:
            return FUZZY_I
        raise ScalarKindMismatch(f"{x!r} is not a fuzzy neutrosophic value")

    def parse(self, text):
        return parse_fuzzy(text)

    def format(self, x):
        return format_fuzzy(x)


RATIONAL = _Rational()
NEUTROSOPHIC = _Neutrosophic()
FUZZY = _Fuzzy()


@functools.lru_cache(maxsize=None)
def gf(p: int) -> ScalarKind:
    return _PrimeField(p)


def kind_from_name(name: str) -> ScalarKind:
    if name == "rational":
        return RATIONAL
    if name == "neutrosophic":
        return NEUTROSOPHIC
    if name == "fuzzy":
        return FUZZY
    if name.startswith("gf:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise ParseError(f"bad field name {name!r}") from None
        if not is_prime(p):
            raise ParseError(f"gf modulus {p} is not prime")
        return gf(p)
    raise ParseError(f"unknown scalar_kind {name!r}")
