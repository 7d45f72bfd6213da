import pytest

from qshuffle.dcb import DCBEngine
from qshuffle.errors import LeadingWordMismatch, NotGoodWord
from qshuffle.laurent import LaurentPoly
from qshuffle.pbw import (build_lyndon_table, good_lyndon_words, is_lyndon, lyndon_factorization,
                          run_factorial, standard_factorization)
from qshuffle.roots import build_convex_order, kostant_partitions, mvectors_up_to_degree
from qshuffle.shuffle import ShuffleElement

P = LaurentPoly.parse


@pytest.fixture(scope="module")
def tables():
    return {n: build_lyndon_table(build_convex_order(n)) for n in ["G2", "B3", "C3", "D4", "A5"]}


def test_lyndon_basics():
    assert is_lyndon(b"\x01\x01\x02") and not is_lyndon(b"\x02\x01") and not is_lyndon(b"\x01\x01")
    assert standard_factorization(bytes([1, 1, 2, 1, 2])) == (bytes([1, 1, 2]), bytes([1, 2]))
    assert lyndon_factorization(bytes([1, 2, 1, 1, 2, 1])) == [bytes([1, 2]), bytes([1, 1, 2]), bytes([1])]


def test_g2_good_lyndon_words(tables):
    t = tables["G2"]
    assert [list(w) for w in t.root_words] == [[1], [1, 1, 1, 2], [1, 1, 2], [1, 1, 2, 1, 2], [1, 2], [2]]


def test_a5_good_lyndon_words_are_segments(tables):
    for beta, w in good_lyndon_words(tables["A5"].cartan).items():
        idx = [i + 1 for i, c in enumerate(beta) if c]
        assert list(w) == list(range(idx[0], idx[-1] + 1))


@pytest.mark.parametrize("name", ["G2", "B3", "C3", "D4", "A5"])
def test_table_invariants(tables, name):
    t = tables[name]
    assert t.consistent
    assert sorted(t.root_words) == list(t.root_words)
    for beta, e in t.rootvec.items():
        assert e.weight == beta
        assert e.lead()[0] == t.lyndon[beta]


def test_g2_root_vectors(tables):
    t = tables["G2"]
    c = t.cartan
    assert t.rootvec[(1, 1)] == ShuffleElement.from_word(c, [1, 2])
    assert t.rootvec[(2, 1)] == ShuffleElement.from_word(c, [1, 1, 2], P("q + q^-1"))
    e = t.rootvec[(3, 2)]
    f3 = P("q^3 + 2q + 2q^-1 + q^-3")
    assert e == ShuffleElement(c, {bytes([1, 1, 2, 1, 2]): f3, bytes([1, 1, 1, 2, 2]): f3 * P("q^3 + q^-3")})


def test_run_factorial(tables):
    c = tables["G2"].cartan
    assert run_factorial(c, bytes([1, 1, 2, 2, 2])) == P("q + q^-1") * P("q^6 + 1 + q^-6") * P("q^3 + q^-3")


def test_dual_pbw_examples(tables):
    t = tables["G2"]
    c = t.cartan
    assert t.dual_pbw((1, 0, 0, 0, 0, 0)) == ShuffleElement.letter(c, 1)
    assert t.dual_pbw((2, 0, 0, 0, 0, 0)) == ShuffleElement.from_word(c, [1, 1], P("q + q^-1"))
    assert t.dual_pbw((1, 0, 0, 0, 1, 0)).lead()[0] == bytes([1, 2, 1])


def test_good_words(tables):
    t = tables["G2"]
    assert list(t.good_word((1, 0, 1, 0, 1, 0))) == [1, 2, 1, 1, 2, 1]
    assert list(t.good_word((2, 0, 0, 0, 2, 0))) == [1, 2, 1, 2, 1, 1]
    assert t.mvector_of(bytes([2, 1])) == (1, 0, 0, 0, 0, 1)
    with pytest.raises(NotGoodWord):
        t.mvector_of(bytes([1, 1, 2, 2]))


@pytest.mark.parametrize("name,D", [("G2", 7), ("B3", 5), ("C3", 5), ("D4", 5)])
def test_good_word_bijection(tables, name, D):
    t = tables[name]
    for m in mvectors_up_to_degree(t.order, D):
        assert t.mvector_of(t.good_word(m)) == m


def test_leading_words_distinct_and_good(tables):
    t = tables["G2"]
    for nu in [(3, 2), (4, 2), (2, 3), (5, 2)]:
        ms = kostant_partitions(t.order, nu)
        leads = [t.dual_pbw(m).lead()[0] for m in ms]
        assert len(set(leads)) == len(ms)
        assert leads == [t.good_word(m) for m in ms]


@pytest.mark.parametrize("name,D", [("G2", 7), ("B3", 5), ("C3", 5), ("D4", 5)])
def test_expand_inverts_dual_pbw(tables, name, D):
    t = tables[name]
    for m in mvectors_up_to_degree(t.order, D):
        assert t.expand_on_pbw(t.dual_pbw(m)) == ({m: LaurentPoly(1)} if any(m) else {m: LaurentPoly(1)})


def test_greedy_and_triangular_expansions_agree(tables):
    t = tables["G2"]
    eng = DCBEngine(t)
    c = t.cartan
    x = ShuffleElement.letter(c, 2) * ShuffleElement.letter(c, 1) * ShuffleElement.letter(c, 1)
    assert t.expand_on_pbw(x) == eng.expand_on_pbw(x)
    y = ShuffleElement.from_word(c, [1, 2, 1]) * ShuffleElement.from_word(c, [1, 2, 1])
    assert t.expand_on_pbw(y) == eng.expand_on_pbw(y)


def test_single_pbw_monomial(tables):
    t = tables["G2"]
    c = t.cartan
    x = ShuffleElement.letter(c, 1) * ShuffleElement.letter(c, 2)
    assert x == ShuffleElement(c, {bytes([2, 1]): P("1"), bytes([1, 2]): P("q^3")})
    assert t.expand_on_pbw(x) == {(1, 0, 0, 0, 0, 1): LaurentPoly(1)}


def test_root_vector_squares_divide_exactly(tables):
    for t in tables.values():
        for k in range(t.order.n):
            m = tuple(2 if j == k else 0 for j in range(t.order.n))
            x = t.rootvec[t.order.roots[k]] * t.rootvec[t.order.roots[k]]
            coords = t.expand_on_pbw(x)
            assert set(coords) == {m}
