import itertools

import pytest
from hypothesis import assume, given, strategies as st

from linbialg import Bimatrix, Bivector, Matrix, gf
from linbialg.bicode import (DecodeReport, bicode_from_generator, bicode_from_parity, cyclic_bicode,
                             default_basis_policy, dual_bicode, encode, enumerate_bicode,
                             format_biword, hamming_bidistance, is_codeword, max_enumeration, parity_check_bicode,
                             parse_biword, pseudo_decode, repetition_bicode, syndrome)
from linbialg.errors import (DecoderExhausted, EnumerationTooLarge, GeneratorDoesNotDivide, ParseError,
                             RankDeficientParity, ShapeMismatch)
from strategies import gf2_parity_bimatrices


def _ints(v):
    return tuple(int(x) for x in v)


def _full_rank(h: Bimatrix) -> bool:
    return all(m.rank() == m.nrows for m in h.components())


@given(gf2_parity_bimatrices())
def test_enumeration_equals_kernel_of_h_and_rowspace_of_g(h):
    if not _full_rank(h):
        with pytest.raises(RankDeficientParity):
            bicode_from_parity(h)
        return
    c = bicode_from_parity(h)
    assert (c.G.first @ c.H.first.T).is_zero() and (c.G.second @ c.H.second.T).is_zero()
    words = enumerate_bicode(c)
    for comp, (g, hm, listed) in enumerate(zip(c.G.components(), c.H.components(), words)):
        n = g.ncols
        kernel = {w for w in itertools.product(range(2), repeat=n)
                  if all(int(x) == 0 for x in hm.apply(w))}
        rowspace = {_ints(g.T.apply(m)) for m in itertools.product(range(2), repeat=g.nrows)}
        assert {_ints(w) for w in listed} == kernel == rowspace
        assert len(listed) == 2 ** (n - hm.nrows)


@given(gf2_parity_bimatrices())
def test_dual_of_dual_is_identity(h):
    assume(_full_rank(h))
    c = bicode_from_parity(h)
    d = dual_bicode(c)
    assert dual_bicode(d) == c
    for code_words, dual_words in zip(enumerate_bicode(c), enumerate_bicode(d)):
        for u in code_words:
            for v in dual_words:
                assert sum(int(a) * int(b) for a, b in zip(u, v)) % 2 == 0


@given(gf2_parity_bimatrices(), st.data())
def test_encoded_messages_have_zero_syndrome(h, data):
    assume(_full_rank(h))
    c = bicode_from_parity(h)
    k1, k2 = (g.nrows for g in c.G.components())
    msg = (data.draw(st.lists(st.integers(0, 1), min_size=k1, max_size=k1)),
           data.draw(st.lists(st.integers(0, 1), min_size=k2, max_size=k2)))
    w = encode(c, msg)
    assert syndrome(c, w)[1]
    assert pseudo_decode(c, w).case == 0


def test_generator_round_trip():
    g = Bimatrix.of([[1, 0, 1, 1], [0, 1, 0, 1]], [[1, 1, 1]], gf(2))
    c = bicode_from_generator(g)
    assert c.params == ((4, 2), (3, 1))
    assert (c.G.first @ c.H.first.T).is_zero()
    assert bicode_from_generator(dual_bicode(c).H).G == c.G


def test_ternary_repetition_and_parity_codes():
    rep = repetition_bicode(3, 4, q=3)
    assert [format_biword(Bivector(a, b, gf(3))) for a, b in zip(*enumerate_bicode(rep))] == [
        "000|0000", "111|1111", "222|2222"]
    par = parity_check_bicode(3, 2)
    assert [len(ws) for ws in enumerate_bicode(par)] == [4, 2]


def test_cyclic_bicode_rejects_non_divisor():
    with pytest.raises(GeneratorDoesNotDivide):
        cyclic_bicode(([1, 1, 1], [1, 1]), (4, 4))


def test_cyclic_bicode_is_cyclic():
    c = cyclic_bicode(([1, 1, 0, 1], [1, 0, 1, 1]), (7, 7))
    for words in enumerate_bicode(c):
        as_set = {_ints(w) for w in words}
        for w in as_set:
            assert w[-1:] + w[:-1] in as_set
    assert c.check.first.degree == 4


def test_enumeration_cap(monkeypatch):
    c = parity_check_bicode(12, 3)
    with pytest.raises(EnumerationTooLarge):
        enumerate_bicode(c, cap=100)
    monkeypatch.setenv("BIALG_MAX_ENUM", "64")
    assert max_enumeration() == 64
    with pytest.raises(EnumerationTooLarge):
        enumerate_bicode(c)


def test_word_literals():
    w = parse_biword("101|0110")
    assert format_biword(w) == "101|0110"
    assert format_biword(parse_biword("1,12,3|0", 13)) == "1,12,3|0"
    for bad in ("101", "1|2|3", "12|0"):
        with pytest.raises(ParseError):
            parse_biword(bad)


def test_syndrome_shape_errors():
    c = parity_check_bicode(3, 2)
    with pytest.raises(ShapeMismatch):
        syndrome(c, "1010|11")
    (s1, s2), ok = syndrome(c, "100|11")
    assert _ints(s1) == (1,) and _ints(s2) == (0,) and not ok


def test_hamming_bidistance():
    assert hamming_bidistance(((1, 0, 1), (1, 1)), ((0, 0, 1), (0, 0))) == (1, 2, 3)


def test_default_policy_shape():
    g = Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]], gf(2))
    bases = default_basis_policy(1, g)
    assert len(bases) == 12 and _ints(bases[1][0]) == (1, 1, 0)


def test_decoder_cases_and_exhaustion():
    c = repetition_bicode(3, 3)
    rep = pseudo_decode(c, "100|111")
    assert isinstance(rep, DecodeReport)
    assert rep.case == 2 and rep.paths == ("projected", "accepted")
    assert format_biword(rep.result) == "111|111" and rep.distance == (2, 0, 2)
    doc = rep.to_doc()
    assert set(doc) == {"case", "bases_tried", "result", "distance", "paths"}
    # <110, 111> = 0, so the only basis yields the zero sum
    with pytest.raises(DecoderExhausted):
        pseudo_decode(c, "110|111")


def test_best_of_prefers_closest_candidate():
    c = parity_check_bicode(4, 2)
    first = pseudo_decode(c, "1000|11")
    best = pseudo_decode(c, "1000|11", best_of=True)
    assert best.distance[0] <= first.distance[0]
    assert is_codeword(c, best.result)
