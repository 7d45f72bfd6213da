"""Coefficients of shuffle products at selected words, without expanding them.

The coefficient of a word ``w`` in ``F_1 * F_2 * ... * F_k`` is a sum over
ways of distributing the letters of ``w`` among the factors.  Reading ``w``
left to right, a letter ``a`` handed to factor ``i`` precedes every letter
still owed to the factors ``j > i``, which contributes
``-(alpha_a, remaining weight of F_j)`` to the exponent of ``q``.

The dynamic program keeps, for each factor, a node in the prefix trie of its
support.  Targets are processed in sorted order so consecutive targets share
the layers of their common prefix.
"""
from __future__ import annotations

from typing import Sequence

from .laurent import LaurentPoly, ZERO
from .shuffle import ShuffleElement, Word, _pairing_table


class _Trie:
    __slots__ = ("child", "rem", "coef")

    def __init__(self, x: ShuffleElement):
        tab = _pairing_table(x.cartan)
        r = x.cartan.rank
        total = list(x.weight)
        self.child: list[dict[int, int]] = [{}]
        self.coef: dict[int, dict[int, int]] = {}
        prefix_wt = [tuple(total)]
        for w, c in x._s.items():
            node = 0
            for a in w:
                nxt = self.child[node].get(a)
                if nxt is None:
                    nxt = len(self.child)
                    self.child[node][a] = nxt
                    self.child.append({})
                    rw = list(prefix_wt[node])
                    rw[a - 1] -= 1
                    prefix_wt.append(tuple(rw))
                node = nxt
            self.coef[node] = c._t
        # rem[node][a] = (alpha_a, weight still owed below node)
        self.rem = [tuple(sum(tab[a][b + 1] * rw[b] for b in range(r)) for a in range(r + 1))
                    for rw in prefix_wt]


def product_coefficients(factors: Sequence[ShuffleElement], targets: Sequence[Word],
                         scale: int = 0) -> dict[Word, LaurentPoly]:
    """``{w: coefficient of w in F_1*...*F_k}`` for each target word ``w``.

    ``scale`` multiplies every result by ``q^scale``.
    """
    factors = [f for f in factors if f.degree > 0 or not f]
    out: dict[Word, LaurentPoly] = {}
    if any(not f for f in factors):
        return {bytes(w): ZERO for w in targets}
    if not factors:
        return {bytes(w): (LaurentPoly({scale: 1}) if not w else ZERO) for w in targets}
    tries = [_Trie(f) for f in factors]
    k = len(tries)
    childs = [t.child for t in tries]
    rems = [t.rem for t in tries]
    total = sum(f.degree for f in factors)
    start = tuple([0] * k)
    layers: list[dict] = [{start: {scale: 1}}]
    prev = b""
    for w in sorted(set(bytes(t) for t in targets)):
        if len(w) != total:
            out[w] = ZERO
            continue
        lcp = 0
        while lcp < len(prev) and lcp < len(w) and prev[lcp] == w[lcp] and lcp + 1 < len(layers):
            lcp += 1
        del layers[lcp + 1:]
        for pos in range(lcp, total):
            a = w[pos]
            cur = layers[-1]
            new: dict[tuple, dict[int, int]] = {}
            if cur:
                for state, poly in cur.items():
                    suf = 0
                    incs = [0] * k
                    for i in range(k - 1, -1, -1):
                        incs[i] = -suf
                        suf += rems[i][state[i]][a]
                    for i in range(k):
                        ch = childs[i][state[i]].get(a)
                        if ch is None:
                            continue
                        ns = state[:i] + (ch,) + state[i + 1:]
                        tgt = new.get(ns)
                        inc = incs[i]
                        if tgt is None:
                            new[ns] = {e + inc: c for e, c in poly.items()}
                        else:
                            for e, c in poly.items():
                                e += inc
                                tgt[e] = tgt.get(e, 0) + c
            layers.append(new)
        prev = w
        acc: dict[int, int] = {}
        for state, poly in layers[-1].items():
            term = poly
            for i in range(k):
                cf = tries[i].coef.get(state[i])
                if cf is None:
                    term = None
                    break
                term = _mul_raw(term, cf)
            if term:
                for e, c in term.items():
                    acc[e] = acc.get(e, 0) + c
        out[w] = LaurentPoly({e: c for e, c in acc.items() if c})
    return out


def _mul_raw(a: dict, b: dict) -> dict:
    if len(b) == 1:
        (eb, cb), = b.items()
        return {e + eb: c * cb for e, c in a.items()}
    t: dict[int, int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            t[e1 + e2] = t.get(e1 + e2, 0) + c1 * c2
    return t


def product_coefficient(factors: Sequence[ShuffleElement], w: Word) -> LaurentPoly:
    return product_coefficients(factors, [w])[bytes(w)]
