"""Cartan data, positive roots and convex orderings for types A-D and G2.

Weights are tuples of nonnegative integers: coordinates on the simple roots.
Simple roots are numbered 1..r in the user-facing API and 0..r-1 internally.

Numbering for B, C and D is the reverse of Bourbaki's:

* ``B_n``: ``1 <= 2 - 3 - ... - n`` with ``alpha_1`` short,
* ``C_n``: ``1 => 2 - 3 - ... - n`` with ``alpha_1`` long,
* ``D_n``: ``1`` and ``2`` both attached to ``3``, then ``3 - 4 - ... - n``,
* ``G_2``: ``alpha_1`` short, ``(alpha_1, alpha_1) = 2``, ``(alpha_2, alpha_2) = 6``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import NotReduced, UnsupportedType, WrongLength

Weight = tuple[int, ...]
MVector = tuple[int, ...]

# the reduced words used in the worked examples (1-based letters)
DEFAULT_WORDS: dict[str, tuple[int, ...]] = {
    "G2": (1, 2, 1, 2, 1, 2),
    "B3": (1, 2, 3, 1, 2, 1, 3, 2, 3),
    "C3": (1, 2, 1, 3, 2, 1, 3, 2, 3),
    "D4": (1, 3, 2, 4, 3, 1, 4, 3, 2, 4, 3, 4),
    "A5": (1, 2, 3, 4, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1),
}

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "G": 2}


@dataclass(frozen=True)
class CartanDatum:
    type: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.type}{self.rank}"

    @cached_property
    def form_matrix(self) -> tuple[tuple[int, ...], ...]:
        """``(alpha_i, alpha_j) = d_i a_ij``."""
        r = self.rank
        return tuple(tuple(self.d[i] * self.cartan_matrix[i][j] for j in range(r)) for i in range(r))

    def form(self, nu: Weight, mu: Weight) -> int:
        B = self.form_matrix
        return sum(nu[i] * B[i][j] * mu[j]
                   for i in range(self.rank) if nu[i]
                   for j in range(self.rank) if mu[j])

    def simple(self, i: int) -> Weight:
        """The simple root with 0-based index ``i``."""
        v = [0] * self.rank
        v[i] = 1
        return tuple(v)

    def reflect(self, i: int, v: Weight) -> tuple[int, ...]:
        B = self.form_matrix
        c = sum(B[i][j] * v[j] for j in range(self.rank)) // self.d[i]
        w = list(v)
        w[i] -= c
        return tuple(w)

    def rho_pairing(self, nu: Weight) -> int:
        """``(nu, rho) = sum_i c_i d_i``."""
        return sum(c * di for c, di in zip(nu, self.d))

    def twist(self, nu: Weight) -> int:
        """``(nu, nu)/2 - (nu, rho)``: the q-power relating sigma and Theta."""
        n2 = self.form(nu, nu)
        assert n2 % 2 == 0
        return n2 // 2 - self.rho_pairing(nu)

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        roots = {self.simple(i) for i in range(self.rank)}
        frontier = list(roots)
        while frontier:
            new = []
            for v in frontier:
                for i in range(self.rank):
                    w = self.reflect(i, v)
                    if all(c >= 0 for c in w) and w not in roots:
                        roots.add(w)
                        new.append(w)
            frontier = new
        return tuple(sorted(roots, key=lambda v: (sum(v), v)))


def cartan(type_: str, rank: int | None = None) -> CartanDatum:
    """Build Cartan data from ``("G", 2)`` or a string like ``"G2"``."""
    if rank is None:
        m = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", type_)
        if not m:
            raise UnsupportedType(f"cannot parse Cartan type {type_!r}")
        type_, rank = m.group(1), int(m.group(2))
    return _cartan(type_.upper(), int(rank))


@lru_cache(maxsize=None)
def _cartan(t: str, r: int) -> CartanDatum:
    if t not in _MIN_RANK:
        raise UnsupportedType(f"type {t} is not supported (only A, B, C, D, G2)")
    if r < _MIN_RANK[t] or (t == "G" and r != 2):
        raise UnsupportedType(f"{t}{r} is not a valid rank")
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    if t == "G":
        a[0][1], a[1][0] = -3, -1
        d = (1, 3)
    elif t == "D":
        for i, j in [(0, 2), (1, 2)] + [(k, k + 1) for k in range(2, r - 1)]:
            a[i][j] = a[j][i] = -1
        d = (1,) * r
    else:
        for k in range(r - 1):
            a[k][k + 1] = a[k + 1][k] = -1
        if t == "A":
            d = (1,) * r
        elif t == "B":
            a[0][1] = -2
            d = (1,) + (2,) * (r - 1)
        else:
            a[1][0] = -2
            d = (2,) + (1,) * (r - 1)
    return CartanDatum(t, r, tuple(tuple(row) for row in a), d)


def form(c: CartanDatum, nu: Weight, mu: Weight) -> int:
    return c.form(nu, mu)


def height(nu: Weight) -> int:
    return sum(nu)


def add_weights(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def format_root(nu: Weight) -> str:
    parts = []
    for i, c in enumerate(nu, 1):
        if c:
            parts.append(f"a{i}" if c == 1 else f"{c}a{i}")
    return "+".join(parts) if parts else "0"


@dataclass(frozen=True)
class ConvexOrder:
    """A reduced word for ``w0`` and the induced ordering of positive roots."""
    cartan: CartanDatum
    reduced_word: tuple[int, ...]          # 1-based letters
    roots: tuple[Weight, ...]
    index: dict = field(compare=False, hash=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "index", {b: k for k, b in enumerate(self.roots)})

    @property
    def n(self) -> int:
        return len(self.roots)

    def weight(self, m: MVector) -> Weight:
        r = self.cartan.rank
        w = [0] * r
        for mk, b in zip(m, self.roots):
            if mk:
                for i in range(r):
                    w[i] += mk * b[i]
        return tuple(w)

    def degree(self, m: MVector) -> int:
        return sum(mk * sum(b) for mk, b in zip(m, self.roots))

    def unit_vector(self, k: int) -> MVector:
        v = [0] * self.n
        v[k] = 1
        return tuple(v)

    def zero(self) -> MVector:
        return (0,) * self.n

    def root_vector(self, beta: Weight) -> MVector:
        return self.unit_vector(self.index[beta])


def roots_from_word(c: CartanDatum, word: tuple[int, ...]) -> tuple[Weight, ...]:
    """``beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})``; raises if a prefix is not reduced."""
    out = []
    for k, i in enumerate(word):
        if not 1 <= i <= c.rank:
            raise NotReduced(f"letter {i} out of range for {c.name}")
        v = c.simple(i - 1)
        for j in reversed(word[:k]):
            v = c.reflect(j - 1, v)
        if any(x < 0 for x in v):
            raise NotReduced(f"word {word} is not reduced (fails at position {k + 1})")
        out.append(v)
    return tuple(out)


def word_from_roots(c: CartanDatum, roots) -> tuple[int, ...]:
    """Inverse of :func:`roots_from_word` for a convex ordering."""
    word: list[int] = []
    for b in roots:
        v = tuple(b)
        for j in word:
            v = c.reflect(j - 1, v)
        if sum(v) != 1 or min(v) < 0:
            raise NotReduced(f"ordering is not convex at root {b}")
        word.append(v.index(1) + 1)
    return tuple(word)


def build_convex_order(type_: str, rank: int | None = None,
                       reduced_word=None) -> ConvexOrder:
    c = cartan(type_, rank)
    if reduced_word is None:
        if c.name in DEFAULT_WORDS:
            reduced_word = DEFAULT_WORDS[c.name]
        else:
            from .pbw import lyndon_root_order
            reduced_word = word_from_roots(c, lyndon_root_order(c))
    word = tuple(int(i) for i in reduced_word)
    npos = len(c.positive_roots)
    if len(word) != npos:
        raise WrongLength(f"{c.name} needs a word of length {npos}, got {len(word)}")
    roots = roots_from_word(c, word)
    if len(set(roots)) != npos:
        raise NotReduced(f"word {word} is not reduced")
    return ConvexOrder(c, word, roots)


def is_convex(order: ConvexOrder) -> bool:
    """Exhaustive check: ``beta_i + beta_j = beta_k`` with ``i < j`` forces ``i < k < j``."""
    idx = order.index
    for i, bi in enumerate(order.roots):
        for j in range(i + 1, order.n):
            s = add_weights(bi, order.roots[j])
            k = idx.get(s)
            if k is not None and not i < k < j:
                return False
    return True


def kostant_partitions(order: ConvexOrder, nu: Weight) -> list[MVector]:
    """All ``m`` with ``sum m_k beta_k = nu`` (unsorted canonical order)."""
    roots = order.roots
    n = len(roots)
    out: list[MVector] = []
    m = [0] * n

    def rec(k, rest):
        if not any(rest):
            out.append(tuple(m))
            return
        if k == n:
            return
        b = roots[k]
        # largest multiple of b fitting into rest
        top = min((rest[i] // b[i] for i in range(len(b)) if b[i]), default=0)
        for t in range(top, -1, -1):
            m[k] = t
            rec(k + 1, tuple(r - t * x for r, x in zip(rest, b)))
        m[k] = 0

    rec(0, tuple(nu))
    return out


def mvectors_up_to_degree(order: ConvexOrder, D: int) -> list[MVector]:
    """All m-vectors of principal degree at most ``D``."""
    roots = order.roots
    n = len(roots)
    hts = [sum(b) for b in roots]
    out: list[MVector] = []
    m = [0] * n

    def rec(k, budget):
        if k == n:
            out.append(tuple(m))
            return
        for t in range(budget // hts[k] + 1):
            m[k] = t
            rec(k + 1, budget - t * hts[k])
        m[k] = 0

    rec(0, D)
    return out


def parse_mvector(text: str) -> MVector:
    return tuple(int(x) for x in re.split(r"[,\s]+", text.strip().strip("()")) if x)


def format_mvector(m: MVector) -> str:
    return "(" + ",".join(str(x) for x in m) + ")"
