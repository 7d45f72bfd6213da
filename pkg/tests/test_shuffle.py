from hypothesis import given, settings, strategies as st

from qshuffle.laurent import LaurentPoly
from qshuffle.roots import cartan
from qshuffle.shuffle import ShuffleElement, classical_shuffle_count, format_word, mul, shuffle

P = LaurentPoly.parse
G2 = cartan("G2")
B3 = cartan("B3")


def words(rank, max_len=3):
    return st.lists(st.integers(1, rank), min_size=0, max_size=max_len).map(bytes)


def test_two_letters():
    assert shuffle(G2, [1], [2]) == ShuffleElement(G2, {b"\x01\x02": P("q^3"), b"\x02\x01": P("1")})


def test_square_of_letter():
    x = ShuffleElement.letter(G2, 1)
    assert x * x == ShuffleElement(G2, {b"\x01\x01": P("1 + q^-2")})


@settings(max_examples=40, deadline=None)
@given(words(3), words(3), words(3))
def test_associativity(u, v, w):
    x, y, z = (ShuffleElement.from_word(B3, a) for a in (u, v, w))
    assert (x * y) * z == x * (y * z)


@settings(max_examples=40, deadline=None)
@given(words(2, 4), words(2, 4))
def test_classical_limit(u, v):
    total = sum(shuffle(G2, u, v).specialize_q1().values())
    assert total == classical_shuffle_count(u, v)


@given(words(2, 4))
def test_unit(u):
    x = ShuffleElement.from_word(G2, u)
    assert mul(ShuffleElement.unit(G2), x) == x == mul(x, ShuffleElement.unit(G2))


def test_json_roundtrip():
    x = shuffle(G2, [1, 2], [1])
    assert ShuffleElement.from_json(x.to_json()) == x


def test_lead_and_format():
    x = shuffle(G2, [1], [2])
    assert x.lead()[0] == b"\x02\x01"
    assert format_word(b"\x01\x02\x01") == "w[1,2,1]"
    assert str(ShuffleElement.from_word(G2, [1, 2, 1])) == "w[1,2,1]"


def test_reversal_is_anti_multiplicative_at_q1():
    u, v = ShuffleElement.from_word(G2, [1, 2]), ShuffleElement.from_word(G2, [1])
    assert (u * v).reversed().specialize_q1() == (v.reversed() * u.reversed()).specialize_q1()
