"""Exact Laurent polynomials and rational functions in one variable ``q``.

Coefficients are Python ints, so nothing ever overflows.  A
:class:`LaurentPoly` is immutable; its terms live in a dict mapping exponent
to nonzero coefficient, which makes equality structural.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from .errors import NotAntisymmetric, InexactDivision

__all__ = [
    "LaurentPoly", "RationalFunction", "ZERO", "ONE", "Q",
    "qpow", "band_test", "kl_solve", "lp_arith", "quantum_int", "quantum_factorial",
    "lp_gcd", "lp_lcm",
]


class LaurentPoly:
    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = 0):
        if isinstance(terms, int):
            t = {0: terms} if terms else {}
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            t = {}
            for e, c in items:
                c = t.get(e, 0) + c
                if c:
                    t[e] = c
                else:
                    t.pop(e, None)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "LaurentPoly":
        # trusted constructor: t already has no zero values
        p = object.__new__(cls)
        p._t = t
        p._hash = None
        return p

    # -- accessors -------------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def coeff(self, e: int) -> int:
        return self._t.get(e, 0)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def min_exp(self) -> int:
        return min(self._t)

    def max_exp(self) -> int:
        return max(self._t)

    def is_monomial(self) -> bool:
        """True for ``c*q^e`` with ``c`` a nonzero integer."""
        return len(self._t) == 1

    def is_qpower(self) -> bool:
        """True for a pure power ``q^e`` (coefficient exactly 1)."""
        return len(self._t) == 1 and next(iter(self._t.values())) == 1

    def qpower_exponent(self) -> int:
        if not self.is_qpower():
            raise ValueError(f"{self} is not a power of q")
        return next(iter(self._t))

    def at_one(self) -> int:
        return sum(self._t.values())

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self._t.items())

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(self._t) < len(other._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        t = dict(a)
        for e, c in b.items():
            c += t.get(e, 0)
            if c:
                t[e] = c
            else:
                del t[e]
        return LaurentPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        t = dict(self._t)
        for e, c in other._t.items():
            c = t.get(e, 0) - c
            if c:
                t[e] = c
            else:
                del t[e]
        return LaurentPoly._raw(t)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) == 1:
            (e0, c0), = a.items()
            return LaurentPoly._raw({e0 + e: c0 * c for e, c in b.items()})
        if len(b) == 1:
            (e0, c0), = b.items()
            return LaurentPoly._raw({e0 + e: c0 * c for e, c in a.items()})
        t: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if self.is_monomial():
                (e, c), = self._t.items()
                if c in (1, -1):
                    return LaurentPoly._raw({-e * (-n): c ** (-n)})
            raise ValueError("negative power of a non-unit Laurent polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()})

    def bar(self) -> "LaurentPoly":
        """The substitution ``q -> q^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._t.items()})

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other``; raises :class:`InexactDivision`."""
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return ZERO
        b = other._t
        if len(b) == 1:
            (eb, cb), = b.items()
            t = {}
            for e, c in self._t.items():
                qq, r = divmod(c, cb)
                if r:
                    raise InexactDivision(f"({self}) / ({other})")
                t[e - eb] = qq
            return LaurentPoly._raw(t)
        bmax = max(b)
        cbmax = b[bmax]
        bmin = min(b)
        rem = dict(self._t)
        quot: dict[int, int] = {}
        while rem:
            emax = max(rem)
            if emax - bmax < min(rem) - bmin:
                raise InexactDivision(f"({self}) / ({other})")
            c, r = divmod(rem[emax], cbmax)
            if r:
                raise InexactDivision(f"({self}) / ({other})")
            s = emax - bmax
            quot[s] = c
            for e, cc in b.items():
                v = rem.get(e + s, 0) - c * cc
                if v:
                    rem[e + s] = v
                else:
                    rem.pop(e + s, None)
        return LaurentPoly._raw(quot)

    def __floordiv__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        return self.divmod_exact(other)

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __reduce__(self):
        return (LaurentPoly, (self._t,))

    # -- display / serialization ---------------------------------------------
    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def __str__(self):
        if not self._t:
            return "0"
        out = []
        for e, c in sorted(self._t.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}{mono}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self._t.items())]

    @classmethod
    def from_json(cls, pairs) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in pairs)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse strings such as ``"q^2 + 2 + q^-2"`` or ``"-3q^4+q"``."""
        s = text.replace(" ", "").replace("**", "^").replace("*", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[int, int] = {}
        pos = 0
        for m in _TERM.finditer(s):
            sign, num, qpart, exp = m.groups()
            if m.start() != pos or not (num or qpart):
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            pos = m.end()
            c = int(num) if num else 1
            e = (int(exp) if exp is not None else 1) if qpart else 0
            terms[e] = terms.get(e, 0) + (-c if sign == "-" else c)
        if pos != len(s):
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        return cls(terms)


_TERM = re.compile(r"([+-])(\d*)(q(?:\^\{?(-?\d+)\}?)?)?")


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
Q = LaurentPoly({1: 1})


def qpow(e: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly._raw({e: c}) if c else ZERO


def quantum_int(n: int, d: int = 1) -> LaurentPoly:
    """Symmetric quantum integer ``[n]_{q^d}``."""
    return LaurentPoly({d * (n - 1 - 2 * k): 1 for k in range(n)})


def quantum_factorial(n: int, d: int = 1) -> LaurentPoly:
    out = ONE
    for k in range(2, n + 1):
        out = out * quantum_int(k, d)
    return out


def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def band_test(a: LaurentPoly, m: int, s: int) -> bool:
    """Membership of ``a`` in ``q^{m+1}Z[q] ∩ q^{s-1}Z[q^{-1}]``."""
    return all(m + 1 <= e <= s - 1 for e in a._t)


def kl_solve(rho: LaurentPoly) -> LaurentPoly:
    """Return the unique ``k`` in ``qZ[q]`` with ``k - bar(k) == rho``."""
    t = rho._t
    if 0 in t or any(t.get(-e, 0) != -c for e, c in t.items()):
        raise NotAntisymmetric(f"{rho} is not bar-antisymmetric")
    return LaurentPoly._raw({e: c for e, c in t.items() if e > 0})


# ---------------------------------------------------------------------------
# rational functions (plumbing for linear solves)

def _dense(p: LaurentPoly) -> tuple[int, list[int]]:
    """(valuation, dense coefficient list low->high)."""
    lo, hi = p.min_exp(), p.max_exp()
    v = [0] * (hi - lo + 1)
    for e, c in p._t.items():
        v[e - lo] = c
    return lo, v


def _content(v: list) -> int:
    g = 0
    for c in v:
        g = gcd(g, c)
    return g


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of two integer polynomials given dense low->high."""
    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    def prim(v):
        g = _content(v)
        return [c // g for c in v] if g else v

    a, b = prim(trim(list(a))), prim(trim(list(b)))
    while b:
        # pseudo-remainder of a by b over Q, then made primitive
        r = [Fraction(c) for c in a]
        lb = len(b) - 1
        while len(r) - 1 >= lb and any(r):
            if r[-1] == 0:
                r.pop()
                continue
            f = r[-1] / b[-1]
            sh = len(r) - 1 - lb
            for i, c in enumerate(b):
                r[sh + i] -= f * c
            r.pop()
        while r and r[-1] == 0:
            r.pop()
        if not r:
            a, b = b, []
            break
        den = 1
        for c in r:
            den = lcm(den, c.denominator)
        a, b = b, prim([int(c * den) for c in r])
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def lp_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in ``Z[q, q^-1]``, normalized up to units.

    The result is an ordinary polynomial with nonzero constant term and
    positive leading coefficient; ``lp_gcd(0, 0) == 0``.
    """
    if not a:
        a, b = b, a
    if not a:
        return ZERO
    if not b:
        _, v = _dense(a)
        if v[-1] < 0:
            v = [-c for c in v]
        return LaurentPoly(enumerate(v))
    _, va = _dense(a)
    _, vb = _dense(b)
    g = _poly_gcd(va, vb)
    c = gcd(_content(va), _content(vb))
    return LaurentPoly((i, c * x) for i, x in enumerate(g))


def lp_lcm(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    g = lp_gcd(a, b)
    p = (a * b).divmod_exact(g)
    lo = p.min_exp()
    p = p.shift(-lo)
    return -p if p.coeff(p.max_exp()) < 0 else p


class RationalFunction:
    """Quotient of Laurent polynomials with a canonical denominator.

    The denominator is stored as an ordinary polynomial with nonzero constant
    term, content 1 and positive leading coefficient; all powers of ``q`` are
    pushed into the numerator.
    """
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = LaurentPoly(num)
        if den is None:
            den = ONE
        elif isinstance(den, int):
            den = LaurentPoly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        # move q-powers of the denominator to the numerator
        lo = den.min_exp()
        num, den = num.shift(-lo), den.shift(-lo)
        if den.is_monomial():
            (_, c), = den._t.items()
            try:
                self.num, self.den = num.divmod_exact(LaurentPoly(c)), ONE
                return
            except InexactDivision:
                pass
        nlo, nv = _dense(num)
        _, dv = _dense(den)
        g = _poly_gcd(nv, dv)
        if len(g) > 1 or (g and g[0] != 1):
            gp = LaurentPoly(enumerate(g))
            num = num.divmod_exact(gp)
            den = den.divmod_exact(gp)
        lo = den.min_exp()
        num, den = num.shift(-lo), den.shift(-lo)
        _, dv = _dense(den)
        _, nv = _dense(num)
        h = gcd(_content(nv), _content(dv))
        if dv[-1] < 0:
            h = -h
        if h != 1:
            num = LaurentPoly._raw({e: c // h for e, c in num._t.items()})
            den = LaurentPoly._raw({e: c // h for e, c in den._t.items()})
        self.num, self.den = num, den

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunction":
        r = object.__new__(cls)
        r.num, r.den = p, ONE
        return r

    def is_laurent(self) -> bool:
        return self.den == ONE

    def to_laurent(self) -> LaurentPoly:
        if self.den != ONE:
            raise InexactDivision(f"{self} is not a Laurent polynomial")
        return self.num

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return RationalFunction.from_poly(LaurentPoly(other) if isinstance(other, int) else other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RationalFunction)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def bar(self) -> "RationalFunction":
        return RationalFunction(self.num.bar(), self.den.bar())

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == ONE:
            return f"RationalFunction({str(self.num)!r})"
        return f"RationalFunction(({self.num}) / ({self.den}))"
