import random

import pytest

from qshuffle.evaluate import product_coefficient, product_coefficients
from qshuffle.pbw import build_lyndon_table
from qshuffle.roots import build_convex_order
from qshuffle.shuffle import ShuffleElement, mul


@pytest.mark.parametrize("name", ["G2", "B3", "D4"])
def test_matches_full_expansion(name):
    t = build_lyndon_table(build_convex_order(name))
    vecs = list(t.rootvec.values())
    rng = random.Random(7)
    for _ in range(12):
        fs = rng.sample(vecs, 3)
        full = ShuffleElement.unit(t.cartan)
        for f in fs:
            full = mul(full, f)
        targets = list(full.words())[:40]
        got = product_coefficients(fs, targets, scale=2)
        assert all(got[w] == full.coeff(w).shift(2) for w in targets)


def test_missing_word_is_zero():
    t = build_lyndon_table(build_convex_order("G2"))
    x = ShuffleElement.letter(t.cartan, 1)
    assert not product_coefficient([x, x], b"\x02\x02")
    assert not product_coefficient([x, x], b"\x01")
