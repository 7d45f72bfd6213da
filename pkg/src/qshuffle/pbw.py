"""Good Lyndon words, dual root vectors and the dual PBW basis.

Letters are ordered ``1 < 2 < ... < r``.  Each positive root ``beta`` gets a
good Lyndon word ``l(beta)``; the dual root vector ``E*(beta)`` is obtained by
q-bracketing along the standard factorization of ``l(beta)`` and normalizing
the result to the primitive integral multiple that is positive and
Theta-invariant.  Dual PBW monomials are

    E*(m) = q^{N(m)} E*(beta_1)^{m_1} * ... * E*(beta_n)^{m_n},
    N(m) = sum_k d_{beta_k} m_k (m_k - 1) / 2,   d_beta = (beta, beta)/2,

whose lexicographically greatest word is the good word
``l(beta_n)^{m_n} ... l(beta_1)^{m_1}``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import CalibrationFailure, LeadingWordMismatch, NotGoodWord, NotInSpan, InexactDivision
from .laurent import LaurentPoly, RationalFunction, ONE, lp_gcd, lp_lcm, quantum_factorial
from .roots import CartanDatum, ConvexOrder, MVector, Weight, kostant_partitions
from .shuffle import ShuffleElement, Word, format_word, mul, word_weight

log = logging.getLogger(__name__)

__all__ = [
    "is_lyndon", "standard_factorization", "lyndon_factorization", "good_lyndon_words",
    "lyndon_root_order", "LyndonTable", "build_lyndon_table",
]


def is_lyndon(w: Word) -> bool:
    """Strictly smaller than each of its proper suffixes."""
    return len(w) > 0 and all(w < w[i:] for i in range(1, len(w)))


def standard_factorization(w: Word) -> tuple[Word, Word]:
    """``w = l1 l2`` with ``l2`` the longest proper Lyndon suffix."""
    if len(w) < 2:
        raise ValueError("standard factorization needs a word of length >= 2")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable: the last letter is Lyndon")


def lyndon_factorization(w: Word) -> list[Word]:
    """Chen-Fox-Lyndon factorization (Duval's algorithm); factors non-increasing."""
    out = []
    n, i = len(w), 0
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            out.append(w[i:i + j - k])
            i += j - k
    return out


@lru_cache(maxsize=None)
def good_lyndon_words(c: CartanDatum) -> dict[Weight, Word]:
    """``l(alpha_i) = i`` and ``l(beta) = max l(b1) l(b2)`` over ``b1 + b2 = beta``, ``l(b1) < l(b2)``."""
    roots = c.positive_roots  # sorted by height
    rootset = set(roots)
    out: dict[Weight, Word] = {}
    for beta in roots:
        if sum(beta) == 1:
            out[beta] = bytes([beta.index(1) + 1])
            continue
        best = None
        for b1 in roots:
            if sum(b1) >= sum(beta):
                break
            b2 = tuple(x - y for x, y in zip(beta, b1))
            if b2 not in rootset:
                continue
            l1, l2 = out[b1], out[b2]
            if l1 < l2 and (best is None or l1 + l2 > best):
                best = l1 + l2
        if best is None or not is_lyndon(best):
            raise CalibrationFailure(f"no good Lyndon word for root {beta} in {c.name}")
        out[beta] = best
    return out


def lyndon_root_order(c: CartanDatum) -> list[Weight]:
    """Positive roots in increasing lexicographic order of their good Lyndon words."""
    gl = good_lyndon_words(c)
    return sorted(gl, key=gl.__getitem__)


def run_factorial(c: CartanDatum, w: Word) -> LaurentPoly:
    """Product of ``[a]_{q_i}!`` over the maximal runs ``i^a`` of ``w``."""
    out = ONE
    k, n = 0, len(w)
    while k < n:
        j = k
        while j < n and w[j] == w[k]:
            j += 1
        if j - k > 1:
            out = out * quantum_factorial(j - k, c.d[w[k] - 1])
        k = j
    return out


def _integral_content(x: ShuffleElement) -> RationalFunction:
    """The largest ``g`` (up to units) with ``x / g`` still integral.

    ``x`` is integral when every ``x[w] / run_factorial(w)`` is a Laurent
    polynomial; those are the values of ``x`` on divided-power monomials.
    """
    num = den = None
    for w, cf in x.items():
        r = RationalFunction(cf, run_factorial(x.cartan, w))
        num = r.num if num is None else lp_gcd(num, r.num)
        den = r.den if den is None else lp_lcm(den, r.den)
    return RationalFunction(num, den)


def _theta_ratio(x: ShuffleElement, sx: ShuffleElement, top: Word) -> int | None:
    """``s`` with ``q^t sigma(x) = q^s x``, or ``None`` if there is none."""
    t = x.cartan.twist(x.weight)
    a, b = sx.coeff(top).shift(t), x.coeff(top)
    try:
        r = a.divmod_exact(b)
    except InexactDivision:
        return None
    if not r.is_qpower():
        return None
    s = r.qpower_exponent()
    return s if sx.shift(t) == x.shift(s) else None


def _scale_rational(x: ShuffleElement, c: RationalFunction) -> ShuffleElement:
    return ShuffleElement(x.cartan, {w: (c * cf).to_laurent() for w, cf in x.items()}, x.weight)


def normalize_root_vector(x: ShuffleElement, sx: ShuffleElement, top: Word):
    """Rescale a bracket to a primitive, positive, Theta-invariant integral vector.

    ``sx`` is ``sigma(x)``.  Returns the rescaled pair, or ``None`` when the
    leading word is wrong or no rescaling is Theta-invariant.
    """
    if not x or x.lead()[0] != top:
        return None
    g = _integral_content(x)
    lam = RationalFunction(g.den, g.num)
    try:
        e = _scale_rational(x, lam)
        se = _scale_rational(sx, lam.bar())
    except InexactDivision:
        return None
    lc = e.coeff(top)
    if lc.coeff(lc.max_exp()) < 0:
        e, se = -e, -se
    s = _theta_ratio(e, se, top)
    if s is None or s % 2:
        return None
    return e.shift(s // 2), se.shift(-s // 2)


@dataclass
class LyndonTable:
    order: ConvexOrder
    lyndon: dict[Weight, Word]
    rootvec: dict[Weight, ShuffleElement]
    bracket_sign: int = 1
    consistent: bool = True
    sigma_rootvec: dict[Weight, ShuffleElement] = field(default_factory=dict, repr=False)
    _powers: dict = field(default_factory=dict, repr=False)
    _goods: dict = field(default_factory=dict, repr=False)

    @property
    def cartan(self) -> CartanDatum:
        return self.order.cartan

    @cached_property
    def root_words(self) -> tuple[Word, ...]:
        """``l(beta_k)`` in convex order."""
        return tuple(self.lyndon[b] for b in self.order.roots)

    @cached_property
    def _word_to_root(self) -> dict[Word, int]:
        return {w: k for k, w in enumerate(self.root_words)}

    def root_d(self, k: int) -> int:
        b = self.order.roots[k]
        return self.cartan.form(b, b) // 2

    def normalization(self, m: MVector) -> int:
        """``N(m) = sum_k d_{beta_k} m_k (m_k - 1)/2``."""
        return sum(self.root_d(k) * mk * (mk - 1) // 2 for k, mk in enumerate(m) if mk > 1)

    # -- good words ----------------------------------------------------
    def good_word(self, m: MVector) -> Word:
        g = self._goods.get(m)
        if g is None:
            parts = []
            for k in range(self.order.n - 1, -1, -1):
                parts.append(self.root_words[k] * m[k])
            g = self._goods[m] = b"".join(parts)
        return g

    def mvector_of(self, w) -> MVector:
        w = bytes(w)
        m = [0] * self.order.n
        for f in lyndon_factorization(w):
            k = self._word_to_root.get(f)
            if k is None:
                raise NotGoodWord(f"{format_word(w)}: Lyndon factor {format_word(f)} is not a good Lyndon word")
            m[k] += 1
        return tuple(m)

    def is_good(self, w) -> bool:
        try:
            self.mvector_of(w)
        except NotGoodWord:
            return False
        return True

    def partitions(self, nu: Weight) -> list[MVector]:
        """Kostant partitions of ``nu`` sorted by descending good word."""
        ms = kostant_partitions(self.order, nu)
        ms.sort(key=self.good_word, reverse=True)
        return ms

    # -- dual PBW --------------------------------------------------------
    def rootvec_power(self, k: int, e: int) -> ShuffleElement:
        key = (k, e)
        p = self._powers.get(key)
        if p is None:
            if e == 0:
                p = ShuffleElement.unit(self.cartan)
            elif e == 1:
                p = self.rootvec[self.order.roots[k]]
            else:
                p = mul(self.rootvec_power(k, e - 1), self.rootvec[self.order.roots[k]])
            self._powers[key] = p
        return p

    def pbw_factors(self, m: MVector) -> list[ShuffleElement]:
        """Factors of ``E*(m)`` (without the q-power), in product order."""
        out = []
        for k, mk in enumerate(m):
            out.extend([self.rootvec[self.order.roots[k]]] * mk)
        return out

    def dual_pbw(self, m: MVector, check: bool = True) -> ShuffleElement:
        x = ShuffleElement.unit(self.cartan)
        for k, mk in enumerate(m):
            if mk:
                x = mul(x, self.rootvec_power(k, mk))
        x = x.shift(self.normalization(m))
        if check and x:
            w, _ = x.lead()
            if w != self.good_word(m):
                raise LeadingWordMismatch(
                    f"E*{m}: leading word {format_word(w)} != good word {format_word(self.good_word(m))}")
        return x

    def expand_on_pbw(self, x: ShuffleElement) -> dict[MVector, LaurentPoly]:
        """Greedy leading-word elimination: ``x = sum c_m E*(m)``."""
        out: dict[MVector, object] = {}
        rem = {w: RationalFunction.from_poly(c) for w, c in x.items()}
        while rem:
            w = max(rem)
            try:
                m = self.mvector_of(w)
            except NotGoodWord as exc:
                raise NotInSpan(f"leading word {format_word(w)} is not good") from exc
            e = self.dual_pbw(m)
            lc = e.coeff(w)
            c = rem[w]
            if c.is_laurent():
                try:
                    c = RationalFunction.from_poly(c.num.divmod_exact(lc))
                except InexactDivision:
                    c = c / lc
            else:
                c = c / lc
            out[m] = c
            for u, cu in e.items():
                v = rem.get(u)
                v = -(c * cu) if v is None else v - c * cu
                if v:
                    rem[u] = v
                else:
                    rem.pop(u, None)
        res = {}
        for m, c in out.items():
            if not c.is_laurent():
                raise NotInSpan(f"coefficient of E*{m} is not Laurent: {c!r}")
            res[m] = c.to_laurent()
        return res


def build_lyndon_table(order: ConvexOrder) -> LyndonTable:
    c = order.cartan
    lyn = good_lyndon_words(c)
    lyndon_sorted = sorted(order.roots, key=lyn.__getitem__)
    consistent = list(order.roots) == lyndon_sorted
    if not consistent:
        log.warning("convex order of %s does not match the Lyndon order; the listed order is used for labels",
                    order.reduced_word)
    for sign in (1, -1):
        vecs: dict[Weight, ShuffleElement] = {}
        sig: dict[Weight, ShuffleElement] = {}
        failed = None
        for beta in c.positive_roots:  # by height
            l = lyn[beta]
            if len(l) == 1:
                vecs[beta] = sig[beta] = ShuffleElement.from_word(c, l)
                continue
            l1, l2 = standard_factorization(l)
            b1, b2 = word_weight(l1, c.rank), word_weight(l2, c.rank)
            k = sign * c.form(b1, b2)
            x = mul(vecs[b1], vecs[b2]) - mul(vecs[b2], vecs[b1]).shift(k)
            # sigma is an antilinear anti-automorphism fixing the letters
            sx = mul(sig[b2], sig[b1]) - mul(sig[b1], sig[b2]).shift(-k)
            got = normalize_root_vector(x, sx, l)
            if got is None:
                failed = beta
                break
            vecs[beta], sig[beta] = got
        if failed is None:
            return LyndonTable(order, dict(lyn), vecs, bracket_sign=sign, consistent=consistent,
                               sigma_rootvec=sig)
        log.info("bracket sign %+d fails at root %s", sign, failed)
    raise CalibrationFailure(f"q-bracketing does not produce normalizable root vectors for {c.name}")
