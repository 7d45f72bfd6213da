import pytest
from hypothesis import given, settings, strategies as st

from qshuffle.errors import NonDefaultOrder, SegmentTooLong, WrongType
from qshuffle.golden import (A5_M_SEGMENTS, A5_MPRIME_SEGMENTS, A5_MSECOND_SEGMENTS, DRINFELD_M,
                             DRINFELD_MPRIME, DRINFELD_MSECOND, IMAGINARY)
from qshuffle.roots import build_convex_order, mvectors_up_to_degree
from qshuffle.shuffle import ShuffleElement
from qshuffle.typea import (Multisegment, dimension_eval, drinfeld, multisegment_to_mvector,
                            mvector_to_multisegment)

A5 = build_convex_order("A5")


def test_parse_and_format():
    ms = Multisegment.parse(A5_M_SEGMENTS)
    assert ms.segments == ((1, 2), (2, 4), (3, 3), (4, 5))
    assert str(ms) == A5_M_SEGMENTS
    assert Multisegment.parse("[2,4]").segments == ((2, 4),)
    with pytest.raises(ValueError):
        Multisegment.parse("[1,3,2]")
    with pytest.raises(ValueError):
        Multisegment.parse("1,2")


def test_imaginary_labels():
    m, mz, _ = IMAGINARY["A5"]
    assert mvector_to_multisegment(A5, m) == Multisegment.parse(A5_M_SEGMENTS)
    assert mvector_to_multisegment(A5, mz) == Multisegment.parse(A5_MPRIME_SEGMENTS)
    assert mvector_to_multisegment(A5, tuple(2 * x for x in m)) == Multisegment.parse(A5_MSECOND_SEGMENTS)


def test_roundtrip():
    for m in mvectors_up_to_degree(A5, 8):
        assert multisegment_to_mvector(A5, mvector_to_multisegment(A5, m)) == m


def test_drinfeld_examples():
    parse = Multisegment.parse
    assert drinfeld(parse(A5_M_SEGMENTS), 16).as_dict() == DRINFELD_M
    assert drinfeld(parse(A5_MPRIME_SEGMENTS), 16).as_dict() == DRINFELD_MPRIME
    assert drinfeld(parse(A5_MSECOND_SEGMENTS), 16).as_dict() == DRINFELD_MSECOND
    lines = drinfeld(parse(A5_M_SEGMENTS), 16).lines()
    assert lines[0] == "P_1(u) = u - q^-6"
    assert lines[1] == "P_2(u) = (u - q^-3)(u - q^-9)"
    assert drinfeld(parse(A5_MSECOND_SEGMENTS), 16).lines()[0] == "P_1(u) = (u - q^-6)^2"


segs = st.lists(st.tuples(st.integers(1, 5), st.integers(0, 4)).map(lambda t: (t[0], min(5, t[0] + t[1]))),
                min_size=1, max_size=5).map(lambda s: Multisegment(tuple(s)))


@settings(max_examples=50)
@given(segs, segs)
def test_drinfeld_is_additive(a, b):
    assert drinfeld(a + b, 16) == drinfeld(a, 16) + drinfeld(b, 16)


def test_segment_too_long():
    with pytest.raises(SegmentTooLong):
        drinfeld(Multisegment.parse("[1,2,3]"), 3)


def test_type_checks():
    with pytest.raises(WrongType):
        mvector_to_multisegment(build_convex_order("G2"), (1, 0, 0, 0, 0, 0))
    other = build_convex_order("A2", reduced_word=(2, 1, 2))
    with pytest.raises(NonDefaultOrder):
        mvector_to_multisegment(other, (1, 0, 0))


def test_dimension_multiplies():
    a5 = build_convex_order("A5").cartan
    x = ShuffleElement.from_word(a5, [1, 2])
    y = ShuffleElement.from_word(a5, [3, 2])
    assert dimension_eval(x * y) == dimension_eval(x) * dimension_eval(y) * 6
    assert dimension_eval(ShuffleElement.from_word(a5, [1, 2, 3])) == 1
