"""The quantum shuffle algebra on words over ``{1..r}``.

A word is a ``bytes`` object whose byte values are the letters (1-based).
Python's ``bytes`` ordering is exactly the lexicographic order on words with a
proper prefix smaller than the word, which is the order used throughout.

The product of two words sums over all interleavings; an interleaving in which
a letter ``a`` of the left factor precedes a letter ``b`` of the right factor
contributes ``(alpha_a, alpha_b)`` to ``e``, and the term is weighted by
``q^-e``.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .laurent import LaurentPoly, ONE, ZERO
from .roots import CartanDatum, Weight, cartan as _cartan

__all__ = ["Word", "word", "format_word", "word_weight", "ShuffleElement", "shuffle", "mul",
           "specialize_q1", "shuffle_words"]

Word = bytes


def word(letters: Iterable[int]) -> Word:
    return bytes(letters)


def format_word(w: Word) -> str:
    return "w[" + ",".join(str(c) for c in w) + "]"


def word_weight(w: Word, rank: int) -> Weight:
    v = [0] * rank
    for c in w:
        v[c - 1] += 1
    return tuple(v)


@lru_cache(maxsize=64)
def _pairing_table(c: CartanDatum):
    """``tab[a][b] = (alpha_a, alpha_b)`` with 1-based padding."""
    B = c.form_matrix
    r = c.rank
    return tuple(tuple(0 if a == 0 or b == 0 else B[a - 1][b - 1] for b in range(r + 1))
                 for a in range(r + 1))


def shuffle_words(c: CartanDatum, u: Word, v: Word) -> dict[Word, dict[int, int]]:
    """``u * v`` as ``{word: {exponent: count}}``."""
    return _shuffle_cached(c, u, v)


@lru_cache(maxsize=200_000)
def _shuffle_cached(c: CartanDatum, u: Word, v: Word) -> dict[Word, dict[int, int]]:
    if not u:
        return {v: {0: 1}}
    if not v:
        return {u: {0: 1}}
    tab = _pairing_table(c)
    a = u[0]
    # a placed before every letter of v
    ea = -sum(tab[a][b] for b in v)
    out: dict[Word, dict[int, int]] = {}
    head = u[:1]
    for w, poly in _shuffle_cached(c, u[1:], v).items():
        out[head + w] = {e + ea: n for e, n in poly.items()} if ea else dict(poly)
    head = v[:1]
    for w, poly in _shuffle_cached(c, u, v[1:]).items():
        key = head + w
        tgt = out.get(key)
        if tgt is None:
            out[key] = dict(poly)
        else:
            for e, n in poly.items():
                tgt[e] = tgt.get(e, 0) + n
    return out


class ShuffleElement:
    """A homogeneous element: finitely supported ``word -> LaurentPoly``."""
    __slots__ = ("cartan", "weight", "_s")

    def __init__(self, cartan: CartanDatum, support: Mapping[Word, LaurentPoly] | None = None,
                 weight: Weight | None = None):
        self.cartan = cartan
        s = {}
        for w, cf in (support or {}).items():
            w = bytes(w)
            if isinstance(cf, int):
                cf = LaurentPoly(cf)
            if cf:
                s[w] = cf
        if weight is None:
            weight = word_weight(next(iter(s)), cartan.rank) if s else (0,) * cartan.rank
        weight = tuple(weight)
        for w in s:
            if word_weight(w, cartan.rank) != weight:
                raise ValueError(f"inhomogeneous element: {format_word(w)} has wrong weight")
        self.weight = weight
        self._s = s

    @classmethod
    def _raw(cls, cartan, support, weight):
        x = object.__new__(cls)
        x.cartan, x.weight, x._s = cartan, weight, support
        return x

    # -- constructors --------------------------------------------------
    @classmethod
    def unit(cls, cartan: CartanDatum) -> "ShuffleElement":
        return cls._raw(cartan, {b"": ONE}, (0,) * cartan.rank)

    @classmethod
    def zero(cls, cartan: CartanDatum, weight: Weight | None = None) -> "ShuffleElement":
        return cls._raw(cartan, {}, tuple(weight) if weight else (0,) * cartan.rank)

    @classmethod
    def letter(cls, cartan: CartanDatum, i: int) -> "ShuffleElement":
        return cls.from_word(cartan, (i,))

    @classmethod
    def from_word(cls, cartan: CartanDatum, letters, coeff: LaurentPoly = ONE) -> "ShuffleElement":
        w = bytes(letters)
        return cls._raw(cartan, {w: coeff} if coeff else {}, word_weight(w, cartan.rank))

    # -- mapping protocol ----------------------------------------------
    @property
    def support(self) -> dict[Word, LaurentPoly]:
        return dict(self._s)

    def items(self):
        return sorted(self._s.items(), reverse=True)

    def words(self):
        return self._s.keys()

    def coeff(self, w) -> LaurentPoly:
        return self._s.get(bytes(w), ZERO)

    def __len__(self):
        return len(self._s)

    def __bool__(self):
        return bool(self._s)

    @property
    def degree(self) -> int:
        return sum(self.weight)

    def lead(self) -> tuple[Word, LaurentPoly]:
        """Lexicographically greatest support word and its coefficient."""
        w = max(self._s)
        return w, self._s[w]

    # -- linear structure ----------------------------------------------
    def _check(self, other):
        if not isinstance(other, ShuffleElement):
            raise TypeError(f"expected ShuffleElement, got {type(other).__name__}")
        if other.cartan != self.cartan:
            raise ValueError("elements over different Cartan data")

    def __add__(self, other):
        self._check(other)
        if not other._s:
            return self
        if not self._s:
            return other
        if other.weight != self.weight:
            raise ValueError("adding elements of different weights")
        s = dict(self._s)
        for w, cf in other._s.items():
            v = s.get(w)
            v = cf if v is None else v + cf
            if v:
                s[w] = v
            else:
                s.pop(w, None)
        return ShuffleElement._raw(self.cartan, s, self.weight)

    def __neg__(self):
        return ShuffleElement._raw(self.cartan, {w: -c for w, c in self._s.items()}, self.weight)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "ShuffleElement":
        if isinstance(c, int):
            c = LaurentPoly(c)
        if not c:
            return ShuffleElement.zero(self.cartan, self.weight)
        return ShuffleElement._raw(self.cartan, {w: cf * c for w, cf in self._s.items()}, self.weight)

    def shift(self, k: int) -> "ShuffleElement":
        """Multiply by ``q^k``."""
        if not k:
            return self
        return ShuffleElement._raw(self.cartan, {w: cf.shift(k) for w, cf in self._s.items()},
                                   self.weight)

    def __rmul__(self, c):
        if isinstance(c, (int, LaurentPoly)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return mul(self, other)

    def __pow__(self, n: int):
        out = ShuffleElement.unit(self.cartan)
        for _ in range(n):
            out = mul(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, ShuffleElement):
            return NotImplemented
        if not self._s and not other._s:
            return self.cartan == other.cartan
        return self.cartan == other.cartan and self._s == other._s

    def __hash__(self):
        return hash(frozenset(self._s.items()))

    # -- maps ------------------------------------------------------------
    def reversed(self) -> "ShuffleElement":
        """Reverse every word; an anti-automorphism fixing the letters."""
        return ShuffleElement._raw(self.cartan, {w[::-1]: c for w, c in self._s.items()}, self.weight)

    def bar_coefficients(self) -> "ShuffleElement":
        """Apply ``q -> q^-1`` to every coefficient (not an algebra map)."""
        return ShuffleElement._raw(self.cartan, {w: c.bar() for w, c in self._s.items()}, self.weight)

    def specialize_q1(self) -> dict[Word, int]:
        return {w: c.at_one() for w, c in self._s.items() if c.at_one()}

    # -- display / interchange ------------------------------------------
    def __repr__(self):
        return f"ShuffleElement({self.cartan.name}, {str(self)})"

    def __str__(self):
        if not self._s:
            return "0"
        parts = []
        for w, c in self.items():
            fw = format_word(w) if w else "1"
            if c == ONE:
                parts.append(fw)
            elif c.is_monomial():
                cs = str(c)
                parts.append(f"{cs}{fw}" if cs != "-1" else f"-{fw}")
            else:
                parts.append(f"({c}){fw}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "format": 1,
            "cartan_type": self.cartan.name,
            "weight": list(self.weight),
            "words": [{"w": list(w), "c": c.to_json()} for w, c in sorted(self._s.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ShuffleElement":
        c = _cartan(data["cartan_type"])
        sup = {bytes(t["w"]): LaurentPoly.from_json(t["c"]) for t in data["words"]}
        weight = tuple(data["weight"]) if "weight" in data else None
        return cls(c, sup, weight)


def shuffle(c: CartanDatum, u, v) -> ShuffleElement:
    """The q-shuffle product of two words."""
    u, v = bytes(u), bytes(v)
    s = {w: LaurentPoly(p) for w, p in shuffle_words(c, u, v).items()}
    wt = tuple(a + b for a, b in zip(word_weight(u, c.rank), word_weight(v, c.rank)))
    return ShuffleElement._raw(c, {w: p for w, p in s.items() if p}, wt)


def mul(x: ShuffleElement, y: ShuffleElement) -> ShuffleElement:
    """Bilinear extension of the word shuffle product."""
    x._check(y)
    c = x.cartan
    wt = tuple(a + b for a, b in zip(x.weight, y.weight))
    if not x._s or not y._s:
        return ShuffleElement.zero(c, wt)
    acc: dict[Word, dict[int, int]] = {}
    for u, cu in x._s.items():
        for v, cv in y._s.items():
            cuv = (cu * cv)._t
            for w, sp in _shuffle_cached(c, u, v).items():
                tgt = acc.get(w)
                if tgt is None:
                    tgt = acc[w] = {}
                for e1, n1 in sp.items():
                    for e2, n2 in cuv.items():
                        e = e1 + e2
                        tgt[e] = tgt.get(e, 0) + n1 * n2
    s = {}
    for w, t in acc.items():
        t = {e: n for e, n in t.items() if n}
        if t:
            s[w] = LaurentPoly._raw(t)
    return ShuffleElement._raw(c, s, wt)


def specialize_q1(x: ShuffleElement) -> dict[Word, int]:
    return x.specialize_q1()


def classical_shuffle_count(u: Word, v: Word) -> int:
    return comb(len(u) + len(v), len(u))
