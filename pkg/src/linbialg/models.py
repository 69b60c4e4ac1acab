"""Markov bichains and Leontief input-output models, exact over Q.

Transition matrices are column-stochastic: ``P[i][j]`` is the probability of
moving from state ``j`` to state ``i`` and states evolve as ``x -> P x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .bimatrix import Bimatrix, Bivector
from .errors import (BothSplitsSingular, InvariantViolation, ParseError, ScalarKindMismatch, ShapeMismatch,
                     SingularSystem)
from .matrix import Matrix, split_matrix
from .scalars import NEUTROSOPHIC, RATIONAL

STRICT = "strict"
SMARANDACHE = "smarandache"


class StepBudgetExceeded(InvariantViolation):
    """An iteration asked for more steps than its budget allows."""


def _col_sums(m: Matrix) -> list[Fraction]:
    return [sum((r[j] for r in m.rows), Fraction(0)) for j in range(m.ncols)]


def _check_transition(m: Matrix, mode: str, component: int):
    if m.kind is not RATIONAL:
        raise ScalarKindMismatch("transition matrices must be rational")
    if not m.is_square:
        raise ShapeMismatch(f"transition matrix of component {component} is {m.shape}")
    sums = _col_sums(m)
    if mode == STRICT:
        if any(x < 0 for r in m.rows for x in r):
            raise InvariantViolation(f"component {component} has a negative transition probability")
        if any(s != 1 for s in sums):
            raise InvariantViolation(f"component {component} has a column not summing to 1")
    elif mode == SMARANDACHE:
        if any(not -1 <= x <= 1 for r in m.rows for x in r):
            raise InvariantViolation(f"component {component} has an entry outside [-1, 1]")
        if any(not -1 <= s <= 1 for s in sums):
            raise InvariantViolation(f"component {component} has a column sum outside [-1, 1]")
    else:
        raise ParseError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class TransitionBimatrix:
    P: Bimatrix
    mode: str = STRICT

    def __post_init__(self):
        for i, m in enumerate(self.P.components(), start=1):
            _check_transition(m, self.mode, i)


def _check_state(v, n, component):
    if len(v) != n:
        raise ShapeMismatch(f"state of length {len(v)} for {n} states in component {component}")
    if any(x < 0 for x in v) or sum(v, Fraction(0)) != 1:
        raise InvariantViolation(f"component {component} state is not a probability vector")


def _state_checked(T: TransitionBimatrix, x: Bivector):
    if x.shape != (T.P.first.nrows, T.P.second.nrows):
        raise ShapeMismatch(f"state shape {x.shape} for transition shapes {T.P.shapes}")
    if T.mode == STRICT:
        _check_state(x.first, T.P.first.nrows, 1)
        _check_state(x.second, T.P.second.nrows, 2)


def markov_step(T: TransitionBimatrix, x: Bivector) -> Bivector:
    _state_checked(T, x)
    y = T.P.apply(x)
    if T.mode == STRICT:
        _state_checked(T, y)
    return y


def markov_trajectory(T: TransitionBimatrix, x: Bivector, n: int) -> Iterator[Bivector]:
    """Yield ``x^(1), ..., x^(n)``."""
    for _ in range(n):
        x = markov_step(T, x)
        yield x


def markov_iterate(T: TransitionBimatrix, x: Bivector, n: int, budget: int | None = None) -> Bivector:
    if n < 0:
        raise InvariantViolation("step count must be non-negative")
    if budget is not None and n > budget:
        raise StepBudgetExceeded(f"{n} steps requested with a budget of {budget}")
    _state_checked(T, x)
    for x in markov_trajectory(T, x, n):
        pass
    return x


def _closed_classes(m: Matrix) -> list[list[int]]:
    """Closed communicating classes of the chain ``j -> i`` when ``m[i][j] > 0``."""
    n = m.nrows
    succ = [[i for i in range(n) if m.rows[i][j] != 0] for j in range(n)]
    reach = []
    for s in range(n):
        seen, stack = {s}, [s]
        while stack:
            for t in succ[stack.pop()]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        reach.append(seen)
    classes, done = [], set()
    for s in range(n):
        if s in done:
            continue
        cls = sorted(t for t in reach[s] if s in reach[t])
        done.update(cls)
        if reach[s] == set(cls):
            classes.append(cls)
    return classes


def _stationary_component(m: Matrix) -> list[tuple]:
    out = []
    n = m.nrows
    for cls in _closed_classes(m):
        sub = Matrix([[m.rows[i][j] - (1 if i == j else 0) for j in cls] for i in cls], RATIONAL)
        (v,) = sub.nullspace()
        total = sum(v, Fraction(0))
        full = [Fraction(0)] * n
        for i, x in zip(cls, v):
            full[i] = x / total
        out.append(tuple(full))
    return out


def stationary_bivector(T: TransitionBimatrix) -> tuple[list[tuple], list[tuple]]:
    """One stationary distribution per closed class, for each component.

    Every stationary distribution of the component is a convex combination
    of the returned vectors.
    """
    if T.mode != STRICT:
        raise InvariantViolation("stationary distributions need a strict transition bimatrix")
    return _stationary_component(T.P.first), _stationary_component(T.P.second)


# ---------------------------------------------------------------------------
# Leontief

@dataclass(frozen=True)
class ClosedSolution:
    basis: tuple
    unique_positive: bool
    exponent: int | None
    warning: str | None


def leontief_closed_solve(A: Matrix) -> ClosedSolution:
    """Price vectors ``p`` with ``A p = p`` for an exchange matrix ``A``.

    When some power ``A^m`` with ``m <= n^2`` is entrywise positive the
    solution is a single positive ray (``exponent`` records the first such
    ``m``).  The bound ``n^2`` over-approximates the primitivity index.
    """
    if A.kind is not RATIONAL or not A.is_square:
        raise ShapeMismatch("exchange matrix must be a square rational matrix")
    if any(x < 0 for r in A.rows for x in r) or any(s != 1 for s in _col_sums(A)):
        raise InvariantViolation("exchange matrix needs nonnegative entries and unit column sums")
    n = A.nrows
    exponent, power = None, A
    for m in range(1, n * n + 1):
        if all(x > 0 for r in power.rows for x in r):
            exponent = m
            break
        power = power @ A
    basis = tuple((Matrix.identity(n) - A).nullspace())
    warning = None
    if exponent is None:
        warning = f"A^m never positive for m <= {n * n}; solution space dimension {len(basis)}"
    return ClosedSolution(basis, exponent is not None, exponent, warning)


@dataclass(frozen=True)
class OpenSolution:
    x: tuple
    inverse: Matrix
    productive: bool
    row_sums_below_one: bool
    col_sums_below_one: bool


def leontief_open_solve(C: Matrix, d) -> OpenSolution:
    """Solve ``(I - C) x = d`` and report productivity of ``C``."""
    if C.kind is not RATIONAL or not C.is_square:
        raise ShapeMismatch("consumption matrix must be a square rational matrix")
    n = C.nrows
    d = tuple(RATIONAL.coerce(v) for v in d)
    if len(d) != n:
        raise ShapeMismatch(f"demand of length {len(d)} for {n} industries")
    m = Matrix.identity(n) - C
    try:
        inv = m.inverse()
    except ZeroDivisionError:
        raise SingularSystem(m.rank(), n) from None
    rows_ok = all(sum(r, Fraction(0)) < 1 for r in C.rows)
    cols_ok = all(s < 1 for s in _col_sums(C))
    productive = all(x >= 0 for r in inv.rows for x in r)
    return OpenSolution(inv.apply(d), inv, productive, rows_ok, cols_ok)


PRODUCTIVE = "productive"
NON_PRODUCTIVE = "non-productive"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class ComponentClass:
    label: str
    inverse: Matrix | None
    production: tuple | None


@dataclass(frozen=True)
class BimodelClassification:
    first: ComponentClass
    second: ComponentClass

    @property
    def pair(self) -> tuple[str, str]:
        return self.first.label, self.second.label

    @property
    def label(self) -> str:
        a, b = self.pair
        return a if a == b else f"quasi-{a}/{b}"


def _invert_or_none(m: Matrix):
    try:
        return m.inverse()
    except ZeroDivisionError:
        return None


def _classify_component(c: Matrix, d, component: int) -> ComponentClass:
    if not c.is_square:
        raise ShapeMismatch(f"consumption matrix of component {component} is {c.shape}")
    c = c if c.kind is NEUTROSOPHIC else Matrix(c.rows, NEUTROSOPHIC, c.ncols)
    m = Matrix.identity(c.nrows, NEUTROSOPHIC) - c
    lo, hi = split_matrix(m)
    inv_lo, inv_hi = _invert_or_none(lo), _invert_or_none(hi)
    if inv_lo is None and inv_hi is None:
        raise BothSplitsSingular(f"I - c{component} is singular under both I -> 0 and I -> 1")
    if inv_lo is None or inv_hi is None:
        return ComponentClass(INDETERMINATE, None, None)
    inv = m.inverse()
    ok_lo = all(x >= 0 for r in inv_lo.rows for x in r)
    ok_hi = all(x >= 0 for r in inv_hi.rows for x in r)
    if ok_lo and ok_hi:
        label = PRODUCTIVE
    elif not ok_lo and not ok_hi:
        label = NON_PRODUCTIVE
    else:
        label = INDETERMINATE
    production = inv.apply(d) if d is not None else None
    return ComponentClass(label, inv, production)


def neutro_leontief_classify(c: Bimatrix, d: Bivector | None = None) -> BimodelClassification:
    """Classify each period of a neutrosophic open bimodel.

    Per component, ``I - c`` is split into its I -> 0 and I -> 1 rational
    matrices.  Both invertible with nonnegative inverses: productive; both
    with a negative entry: non-productive; any other outcome (the splits
    disagree, or exactly one is singular) leaves productivity undetermined.
    """
    ds = (None, None) if d is None else (d.first, d.second)
    return BimodelClassification(_classify_component(c.first, ds[0], 1),
                                 _classify_component(c.second, ds[1], 2))
