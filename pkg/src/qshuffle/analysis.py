"""Reality, primality, diamond operators and b1-strings over the dual canonical basis."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .dcb import DCBEngine
from .errors import AmbiguousExtreme, BudgetExceeded, EngineError, PreconditionViolated
from .laurent import ONE, LaurentPoly, band_test
from .roots import MVector, format_mvector, mvectors_up_to_degree
from .shuffle import ShuffleElement

__all__ = ["RealityCertificate", "Conj1Report", "StringDecomposition", "CensusReport",
           "reality_certificate", "enumerate_dcb", "census", "is_prime", "conjecture1_check",
           "diamond", "string_decomposition", "q_centrality_check", "product_on_dcb", "proportional_term"]


def _mstr(m):
    return format_mvector(m)


def _expansion_json(exp: dict[MVector, LaurentPoly]):
    return [{"m": list(m), "c": c.to_json()} for m, c in exp.items()]


@dataclass
class RealityCertificate:
    mvector: MVector
    is_real: bool
    shift: int
    extra_terms: dict[MVector, LaurentPoly] = field(default_factory=dict)

    def reconstruct(self, engine: DCBEngine) -> dict[MVector, LaurentPoly]:
        """``q^shift (b^[2] + sum extra)`` as a dual canonical expansion."""
        out = {tuple(2 * x for x in self.mvector): LaurentPoly({self.shift: 1})}
        for m, c in self.extra_terms.items():
            out[m] = c.shift(self.shift)
        return out

    def to_json(self):
        return {"format": 1, "mvector": list(self.mvector), "is_real": self.is_real, "shift": self.shift,
                "extra_terms": _expansion_json(self.extra_terms)}


@dataclass
class Conj1Report:
    b1: MVector
    b2: MVector
    in_qZB: bool
    m: int | None = None
    s: int | None = None
    bprime: MVector | None = None
    bsecond: MVector | None = None
    gap_ok: bool = True
    witnesses: list = field(default_factory=list)

    def to_json(self):
        return {"format": 1, "b1": list(self.b1), "b2": list(self.b2), "in_qZB": self.in_qZB,
                "m": self.m, "s": self.s,
                "bprime": list(self.bprime) if self.bprime else None,
                "bsecond": list(self.bsecond) if self.bsecond else None,
                "gap_ok": self.gap_ok,
                "witnesses": [{"m": list(w), "c": c.to_json()} for w, c in self.witnesses]}


@dataclass
class StringDecomposition:
    b1: MVector
    strings: list[list[MVector]]
    roots: list[MVector]
    violations: list = field(default_factory=list)

    def to_json(self):
        return {"format": 1, "b1": list(self.b1), "strings": [[list(m) for m in s] for s in self.strings],
                "roots": [list(m) for m in self.roots],
                "violations": [[list(a), list(b), list(c)] for a, b, c in self.violations]}


@dataclass
class CensusReport:
    degree: int
    total: int
    imaginary: list[MVector]
    prime_imaginary: list[MVector]

    def to_json(self):
        return {"format": 1, "degree": self.degree, "total": self.total,
                "imaginary": [list(m) for m in self.imaginary],
                "prime_imaginary": [list(m) for m in self.prime_imaginary]}


# ---------------------------------------------------------------------------
def product_on_dcb(engine: DCBEngine, m1: MVector, m2: MVector) -> dict[MVector, LaurentPoly]:
    """``b(m1) b(m2)`` on the dual canonical basis."""
    x, y = engine.element(m1), engine.element(m2)
    if not x.degree:
        return {tuple(m2): ONE} if x else {}
    if not y.degree:
        return {tuple(m1): ONE} if y else {}
    if tuple(m1) == tuple(m2):
        return engine.expand_square_on_dcb(x)
    return engine.expand_product_on_dcb([x, y])


def proportional_term(exp: dict[MVector, LaurentPoly]) -> tuple[MVector, int] | None:
    """``(m, k)`` when the expansion is exactly ``q^k b(m)``."""
    if len(exp) == 1:
        (m, c), = exp.items()
        if c.is_qpower():
            return m, c.qpower_exponent()
    return None


def reality_certificate(engine: DCBEngine, m) -> RealityCertificate:
    m = tuple(m)
    exp = product_on_dcb(engine, m, m)
    m2 = tuple(2 * x for x in m)
    c = exp.get(m2)
    if c is None or not c.is_qpower():
        raise EngineError(f"b{_mstr(m)}^2 has coefficient {c} on b{_mstr(m2)}, not a power of q")
    k = c.qpower_exponent()
    extra = {p: cp.shift(-k) for p, cp in exp.items() if p != m2}
    return RealityCertificate(m, not extra, k, extra)


def enumerate_dcb(engine: DCBEngine, D: int, max_count: int = 200_000) -> list[MVector]:
    """All m-vectors of principal degree ``<= D``, by degree then lexicographically."""
    hts = [sum(b) for b in engine.order.roots]
    # cheap size estimate before enumerating
    est = _count_up_to(hts, D, max_count)
    if est > max_count:
        raise BudgetExceeded(f"more than {max_count} m-vectors of degree <= {D}")
    ms = mvectors_up_to_degree(engine.order, D)
    ms.sort(key=lambda m: (engine.order.degree(m), m))
    return ms


def _count_up_to(hts, D, cap):
    ways = [1] + [0] * D
    for h in hts:
        for t in range(h, D + 1):
            ways[t] = min(cap + 1, ways[t] + ways[t - h])
    return sum(ways)


def _sub_pairs(m: MVector):
    """All ``(m1, m2)`` with ``m1 + m2 = m`` and both nonzero."""
    ranges = [range(x + 1) for x in m]
    from itertools import product
    for m1 in product(*ranges):
        if any(m1) and m1 != tuple(m):
            yield m1, tuple(a - b for a, b in zip(m, m1))


def is_prime(engine: DCBEngine, m, D: int | None = None) -> bool:
    """No factorization ``b(m) = q^k b(m1) b(m2)`` with both factors nontrivial.

    A product ``b(m1) b(m2)`` always contains ``b(m1 + m2)`` with a power of
    ``q`` as coefficient, so only splittings ``m = m1 + m2`` can work.
    """
    m = tuple(m)
    if D is not None and engine.order.degree(m) > D:
        raise BudgetExceeded(f"{_mstr(m)} has degree above {D}")
    if engine.order.degree(m) <= 1:
        return engine.order.degree(m) == 1
    for m1, m2 in _sub_pairs(m):
        if m1 > m2:
            continue
        got = proportional_term(product_on_dcb(engine, m1, m2))
        if got is not None and got[0] == m:
            return False
    return True


_worker_engine: DCBEngine | None = None


def _worker_init(type_name, word, cache_dir):
    global _worker_engine
    from .pbw import build_lyndon_table
    from .roots import build_convex_order
    _worker_engine = DCBEngine(build_lyndon_table(build_convex_order(type_name, reduced_word=word)),
                               cache_dir=cache_dir)


def _worker_is_real(m):
    return reality_certificate(_worker_engine, m).is_real


def census(engine: DCBEngine, D: int, budget: float | None = None, jobs: int = 1) -> CensusReport:
    """Imaginary and prime imaginary vectors among all of degree ``<= D``.

    With ``jobs > 1`` the reality tests run in worker processes; the result
    does not depend on ``jobs``.
    """
    start = time.monotonic()
    ms = enumerate_dcb(engine, D)
    todo = [m for m in ms if engine.order.degree(m)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        args = (engine.cartan.name, engine.order.reduced_word,
                str(engine.cache_dir) if engine.cache_dir else None)
        with ProcessPoolExecutor(jobs, initializer=_worker_init, initargs=args) as ex:
            flags = list(ex.map(_worker_is_real, todo, chunksize=4))
        imag = [m for m, real in zip(todo, flags) if not real]
    else:
        imag = []
        for m in todo:
            if budget is not None and time.monotonic() - start > budget:
                raise BudgetExceeded(f"census exceeded {budget} s at {_mstr(m)}")
            if not reality_certificate(engine, m).is_real:
                imag.append(m)
    primes = [m for m in imag if is_prime(engine, m, D)]
    return CensusReport(D, len(ms), imag, primes)


def _require_real(engine, m1):
    cert = reality_certificate(engine, m1)
    if not cert.is_real:
        raise PreconditionViolated(f"b{_mstr(m1)} is imaginary")


def _extremes(exp: dict[MVector, LaurentPoly]):
    lo = min(c.min_exp() for c in exp.values())
    hi = max(c.max_exp() for c in exp.values())
    at_lo = [p for p, c in exp.items() if c.min_exp() == lo]
    at_hi = [p for p, c in exp.items() if c.max_exp() == hi]
    return lo, hi, at_lo, at_hi


def conjecture1_check(engine: DCBEngine, m1, m2) -> Conj1Report:
    m1, m2 = tuple(m1), tuple(m2)
    _require_real(engine, m1)
    exp = product_on_dcb(engine, m1, m2)
    if proportional_term(exp) is not None:
        return Conj1Report(m1, m2, True)
    lo, hi, at_lo, at_hi = _extremes(exp)
    rep = Conj1Report(m1, m2, False, lo, hi)
    witnesses = []
    if len(at_lo) == 1 and exp[at_lo[0]] == LaurentPoly({lo: 1}):
        rep.bprime = at_lo[0]
    else:
        witnesses.extend((p, exp[p]) for p in at_lo)
    if len(at_hi) == 1 and exp[at_hi[0]] == LaurentPoly({hi: 1}):
        rep.bsecond = at_hi[0]
    else:
        witnesses.extend((p, exp[p]) for p in at_hi if p not in at_lo)
    if rep.bprime is not None and rep.bprime == rep.bsecond:
        witnesses.append((rep.bprime, exp[rep.bprime]))
    for p, c in exp.items():
        if p in (rep.bprime, rep.bsecond):
            continue
        if not band_test(c, lo, hi) and all(p != w for w, _ in witnesses):
            witnesses.append((p, c))
    rep.witnesses = witnesses
    rep.gap_ok = not witnesses and lo < hi
    return rep


def diamond(engine: DCBEngine, m1, m2, side: str = "left") -> MVector:
    """``left``: the lowest q-power term of ``b(m1) b(m2)``; ``right``: the highest."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    m1, m2 = tuple(m1), tuple(m2)
    _require_real(engine, m1)
    exp = product_on_dcb(engine, m1, m2)
    one = proportional_term(exp)
    if one is not None:
        return one[0]
    lo, hi, at_lo, at_hi = _extremes(exp)
    if side == "left":
        cand, e = at_lo, lo
    else:
        cand, e = at_hi, hi
    if len(cand) != 1 or exp[cand[0]] != LaurentPoly({e: 1}):
        raise AmbiguousExtreme(
            f"b{_mstr(m1)} b{_mstr(m2)}: {side} extreme is not a unique pure power of q", expansion=exp)
    return cand[0]


def string_decomposition(engine: DCBEngine, m1, D: int) -> StringDecomposition:
    """Chains ``b -> b1 <> b`` inside the vectors of degree ``<= D``."""
    m1 = tuple(m1)
    _require_real(engine, m1)
    ms = enumerate_dcb(engine, D)
    inside = set(ms)
    d1 = engine.order.degree(m1)
    nxt: dict[MVector, MVector] = {}
    preimage: dict[MVector, MVector] = {}
    violations = []
    for m in ms:
        if engine.order.degree(m) + d1 > D:
            continue
        img = diamond(engine, m1, m, "left")
        if img not in inside:
            continue
        if img in preimage:
            violations.append((preimage[img], m, img))
            continue
        preimage[img] = m
        nxt[m] = img
    heads = [m for m in ms if m not in preimage]
    strings = []
    for h in heads:
        chain = [h]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        strings.append(chain)
    return StringDecomposition(m1, strings, heads, violations)


def q_centrality_check(engine: DCBEngine, m) -> bool:
    """``b(m) e_i`` and ``e_i b(m)`` agree up to a power of ``q`` for every ``i``."""
    x = engine.element(tuple(m))
    c = engine.cartan
    for i in range(1, c.rank + 1):
        e = ShuffleElement.letter(c, i)
        if not _q_proportional(x * e, e * x):
            return False
    return True


def _q_proportional(x: ShuffleElement, y: ShuffleElement) -> bool:
    if set(x.words()) != set(y.words()):
        return False
    if not x:
        return True
    w, cx = x.lead()
    cy = y.coeff(w)
    k = cx.max_exp() - cy.max_exp()
    return x == y.shift(k)
