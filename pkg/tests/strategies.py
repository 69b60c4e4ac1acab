"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from linbialg import Bimatrix, Bivector, Matrix, Neutro, gf

small_int = st.integers(-4, 4)
rational = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))


def matrices(m, n, elements=small_int, kind=None):
    rows = st.lists(st.lists(elements, min_size=n, max_size=n), min_size=m, max_size=m)
    if kind is None:
        return rows.map(lambda r: Matrix(r, ncols=n))
    return rows.map(lambda r: Matrix(r, kind, ncols=n))


@st.composite
def square_bimatrices(draw, max_n=4, elements=small_int):
    n1 = draw(st.integers(1, max_n))
    n2 = draw(st.integers(1, max_n))
    return Bimatrix(draw(matrices(n1, n1, elements)), draw(matrices(n2, n2, elements)))


@st.composite
def bimatrix_pairs(draw, max_n=4):
    """Two bimatrices of equal shape and a third whose rows match their columns."""
    m1, n1, p1 = (draw(st.integers(1, max_n)) for _ in range(3))
    m2, n2, p2 = (draw(st.integers(1, max_n)) for _ in range(3))
    a = Bimatrix(draw(matrices(m1, n1, rational)), draw(matrices(m2, n2, rational)))
    b = Bimatrix(draw(matrices(m1, n1, rational)), draw(matrices(m2, n2, rational)))
    c = Bimatrix(draw(matrices(n1, p1, rational)), draw(matrices(n2, p2, rational)))
    return a, b, c


neutro = st.builds(Neutro, rational, rational)


@st.composite
def bivector_lists(draw, max_dim=4, max_count=4):
    n1 = draw(st.integers(1, max_dim))
    n2 = draw(st.integers(1, max_dim))
    k = draw(st.integers(1, max_count))
    vec = lambda n: st.lists(small_int, min_size=n, max_size=n)  # noqa: E731
    return [Bivector(draw(vec(n1)), draw(vec(n2))) for _ in range(k)], (n1, n2)


@st.composite
def probability_vectors(draw, n):
    weights = draw(st.lists(st.integers(0, 5), min_size=n, max_size=n).filter(any))
    total = sum(weights)
    return tuple(Fraction(w, total) for w in weights)


@st.composite
def stochastic_matrices(draw, n):
    cols = [draw(probability_vectors(n)) for _ in range(n)]
    return Matrix.from_columns(cols, nrows=n)


@st.composite
def gf2_parity_bimatrices(draw, max_n=7):
    kind = gf(2)
    out = []
    for _ in range(2):
        n = draw(st.integers(2, max_n))
        r = draw(st.integers(1, n - 1))
        rows = draw(st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=r, max_size=r))
        out.append(Matrix(rows, kind, n))
    return Bimatrix(*out)
