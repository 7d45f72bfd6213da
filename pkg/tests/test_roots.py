import pytest

from qshuffle import golden
from qshuffle.errors import NotReduced, UnsupportedType, WrongLength
from qshuffle.roots import (DEFAULT_WORDS, build_convex_order, cartan, format_mvector, is_convex,
                            kostant_partitions, mvectors_up_to_degree, parse_mvector, word_from_roots)


@pytest.mark.parametrize("name,count", [("A2", 3), ("A5", 15), ("B3", 9), ("C3", 9), ("D4", 12), ("G2", 6)])
def test_number_of_positive_roots(name, count):
    assert len(cartan(name).positive_roots) == count


def test_g2_form():
    c = cartan("G2")
    assert c.form_matrix == ((2, -3), (-3, 6))
    assert c.d == (1, 3)


def test_numbering_of_b_and_c():
    assert cartan("B3").form_matrix[0][0] == 2 and cartan("B3").form_matrix[1][1] == 4
    assert cartan("C3").form_matrix[0][0] == 4 and cartan("C3").form_matrix[1][1] == 2


def test_twist_vanishes_on_simple_roots():
    for name in ["A3", "B3", "C3", "D4", "G2"]:
        c = cartan(name)
        assert all(c.twist(c.simple(i)) == 0 for i in range(c.rank))


@pytest.mark.parametrize("name", sorted(DEFAULT_WORDS))
def test_listed_orders(name):
    o = build_convex_order(name)
    assert list(o.roots) == golden.ROOT_SEQUENCES[name]
    assert is_convex(o)
    assert word_from_roots(o.cartan, o.roots) == o.reduced_word


def test_default_order_for_other_ranks_is_convex():
    for name in ["A3", "B4", "C2", "D5"]:
        assert is_convex(build_convex_order(name))


def test_errors():
    with pytest.raises(WrongLength):
        build_convex_order("G2", reduced_word=(1, 2, 1))
    with pytest.raises(NotReduced):
        build_convex_order("G2", reduced_word=(1, 1, 2, 1, 2, 1))
    with pytest.raises(UnsupportedType):
        cartan("E6")
    with pytest.raises(UnsupportedType):
        cartan("G3")


def test_kostant_counts():
    a5 = build_convex_order("A5")
    nu = (1, 2, 2, 2, 1)
    assert len(kostant_partitions(a5, nu)) == 65
    assert len(kostant_partitions(a5, tuple(2 * x for x in nu))) == 1138
    assert len(kostant_partitions(build_convex_order("C3"), (2, 4, 2))) == 32


def test_mvectors_up_to_degree():
    g2 = build_convex_order("G2")
    assert len(mvectors_up_to_degree(g2, 7)) == 116
    assert len(mvectors_up_to_degree(g2, 1)) == 3


def test_mvector_text():
    assert parse_mvector("1,0, 0,0,1,0") == (1, 0, 0, 0, 1, 0)
    assert format_mvector((1, 0, 2)) == "(1,0,2)"
