"""Dual canonical basis: the involution Theta and the triangular correction.

Each weight space is handled in *good-word coordinates*: an element of the
image of ``U_q(n)`` is determined by its coefficients at the good words of its
weight, because ``E*(m)`` has leading word ``g(m)`` and vanishes at every
larger good word.  So the matrix

    U[i][j] = coefficient of E*(p_i) at g(p_j)      (partitions sorted by
                                                      descending good word)

is upper triangular, and solving against it gives dual PBW coordinates without
ever expanding elements of large weight into words.

Theta is ``q^{t(nu)}`` times sigma, where sigma is the antilinear
anti-automorphism fixing the letters.  On dual PBW monomials this is
productwise:

    Theta(E*(m)) = q^{t(nu) - N(m)} sigma(E*(beta_n))^{m_n} * ... * sigma(E*(beta_1))^{m_1}.

The canonical element ``b(m) = sum_p kappa_p E*(p)`` has ``kappa_m = 1`` and
``kappa_p in qZ[q]`` otherwise; the coefficients are found top-down with
:func:`kl_solve`.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from itertools import permutations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (CacheCorrupt, CalibrationFailure, InexactDivision, NonConvergence, NotAntisymmetric, NotInImage,
                     NotInSpan, TriangularityViolation)
from .evaluate import product_coefficients
from .laurent import ONE, ZERO, LaurentPoly, RationalFunction, kl_solve
from .pbw import LyndonTable
from .roots import MVector, Weight, format_mvector
from .shuffle import ShuffleElement, Word, format_word, mul, word_weight

log = logging.getLogger(__name__)

ENGINE_VERSION = 1

__all__ = ["WeightSpace", "DCBRecord", "DCBEngine", "sigma", "theta", "monomial", "words_of_weight",
           "ENGINE_VERSION"]


# ---------------------------------------------------------------------------
# the independent route: sigma by solving against letter monomials
# ---------------------------------------------------------------------------
def words_of_weight(nu: Weight) -> list[Word]:
    """All words of weight ``nu`` in increasing lexicographic order."""
    letters = [i + 1 for i, c in enumerate(nu) for _ in range(c)]
    return sorted(set(bytes(p) for p in permutations(letters))) if len(letters) <= 8 else \
        list(_multiset_words(nu))


def _multiset_words(nu: Weight):
    nu = list(nu)
    n = sum(nu)
    buf = bytearray(n)

    def rec(pos):
        if pos == n:
            yield bytes(buf)
            return
        for i, c in enumerate(nu):
            if c:
                nu[i] -= 1
                buf[pos] = i + 1
                yield from rec(pos + 1)
                nu[i] += 1

    yield from rec(0)


def monomial(c, w: Word) -> ShuffleElement:
    """``x_w = w[i_1] * w[i_2] * ... * w[i_k]``, the image of ``e_{i_1} ... e_{i_k}``."""
    x = ShuffleElement.unit(c)
    for a in w:
        x = mul(x, ShuffleElement.letter(c, a))
    return x


def _rat(x) -> RationalFunction:
    return x if isinstance(x, RationalFunction) else RationalFunction.from_poly(
        LaurentPoly(x) if isinstance(x, int) else x)


class _Eliminator:
    """Incremental row reduction over ``Q(q)`` with pivot bookkeeping.

    Rows are dense lists of RationalFunction.  Each stored row remembers how
    it was formed from the inserted vectors so solutions can be read back.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[tuple[int, list, dict[int, RationalFunction]]] = []

    def _reduce(self, v: list, combo: dict[int, RationalFunction]):
        for piv, row, rc in self.rows:
            a = v[piv]
            if a:
                f = a / row[piv]
                for j in range(self.ncols):
                    if row[j]:
                        v[j] = v[j] - f * row[j]
                for k, x in rc.items():
                    combo[k] = combo.get(k, _rat(ZERO)) - f * x
        return v, combo

    def add(self, key: int, vec: Sequence) -> bool:
        v, combo = self._reduce([_rat(x) for x in vec], {key: _rat(ONE)})
        for j, x in enumerate(v):
            if x:
                self.rows.append((j, v, combo))
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)

    def solve(self, vec: Sequence) -> dict[int, RationalFunction]:
        """Coefficients ``a_k`` with ``vec = sum a_k inserted_k``; raises if inconsistent."""
        v, combo = self._reduce([_rat(x) for x in vec], {})
        if any(v):
            raise NotInImage("vector is not in the span of the inserted rows")
        return {k: -x for k, x in combo.items() if x}


def _good_coordinates(table: LyndonTable, nu: Weight) -> list[Word]:
    return [table.good_word(m) for m in table.partitions(nu)]


_P = (1 << 61) - 1


def _eval_mod(p: LaurentPoly, q0: int) -> int:
    return sum(c * pow(q0, e, _P) for e, c in p.items()) % _P


def _pick_monomials(table: LyndonTable, nu: Weight, goods: list[Word], q0: int = 1_000_003):
    """Words whose monomials span the weight space, found by elimination mod a prime.

    Independence after specializing ``q`` implies independence over ``Q(q)``.
    """
    c = table.cartan
    d = len(goods)
    piv_rows: list[tuple[int, list[int]]] = []
    chosen: list[Word] = []
    for w in reversed(words_of_weight(nu)):
        vals = product_coefficients([ShuffleElement.letter(c, a) for a in w], goods)
        v = [_eval_mod(vals[g], q0) for g in goods]
        for piv, row in piv_rows:
            if v[piv]:
                f = v[piv] * pow(row[piv], -1, _P) % _P
                v = [(x - f * y) % _P for x, y in zip(v, row)]
        nz = next((k for k, x in enumerate(v) if x), None)
        if nz is not None:
            piv_rows.append((nz, v))
            chosen.append(w)
            if len(chosen) == d:
                return chosen
    raise NotInImage(f"letter monomials do not span weight {nu} at the chosen specialization")


def sigma(x: ShuffleElement, table: LyndonTable) -> ShuffleElement:
    """``x = sum a_w x_w  ->  sum bar(a_w) x_{rev w}`` for letter monomials ``x_w``.

    The monomials are chosen to span the weight space in good-word
    coordinates; the decomposition of ``x`` is checked word by word.
    Exact elimination over ``Q(q)``: meant for small weights.
    """
    c = x.cartan
    if not x:
        return x
    nu = x.weight
    goods = _good_coordinates(table, nu)
    chosen = _pick_monomials(table, nu, goods)
    elim = _Eliminator(len(goods))
    for k, w in enumerate(chosen):
        vals = product_coefficients([ShuffleElement.letter(c, a) for a in w], goods)
        if not elim.add(k, [vals[g] for g in goods]):
            raise NotInImage("chosen monomials are dependent")
    coeffs = elim.solve([x.coeff(g) for g in goods])
    acc: dict[Word, RationalFunction] = {}
    out: dict[Word, RationalFunction] = {}
    for k, a in coeffs.items():
        for w, cf in monomial(c, chosen[k]).items():
            acc[w] = acc.get(w, _rat(ZERO)) + a * cf
        ab = a.bar()
        for w, cf in monomial(c, chosen[k][::-1]).items():
            out[w] = out.get(w, _rat(ZERO)) + ab * cf
    if {w: v for w, v in acc.items() if v} != {w: _rat(cf) for w, cf in x.items()}:
        raise NotInImage("element is not in the image of U_q(n)")
    try:
        return ShuffleElement(c, {w: v.to_laurent() for w, v in out.items() if v}, nu)
    except InexactDivision as exc:
        raise NotInImage("sigma produced non-integral coefficients") from exc


def theta(x: ShuffleElement, table: LyndonTable) -> ShuffleElement:
    """``Theta(x) = q^{t(nu)} sigma(x)``."""
    if not x:
        return x
    return sigma(x, table).shift(x.cartan.twist(x.weight))


# ---------------------------------------------------------------------------
# the engine: good-word coordinates
# ---------------------------------------------------------------------------
class WeightSpace:
    """Dual PBW workspace at one weight, in good-word coordinates."""

    def __init__(self, table: LyndonTable, nu: Weight):
        self.table = table
        self.weight = tuple(nu)
        self.ms: list[MVector] = table.partitions(self.weight)
        self.goods: list[Word] = [table.good_word(m) for m in self.ms]
        self.index: dict[MVector, int] = {m: i for i, m in enumerate(self.ms)}
        self.twist = table.cartan.twist(self.weight)
        self._u: dict[int, list[LaurentPoly]] = {}
        self._a: dict[int, dict[int, LaurentPoly]] = {}

    def __len__(self):
        return len(self.ms)

    def values(self, factors: Sequence[ShuffleElement], scale: int = 0,
               start: int = 0) -> list[LaurentPoly]:
        """Coefficients of ``q^scale * prod(factors)`` at ``goods[start:]``."""
        tg = self.goods[start:]
        vals = product_coefficients(factors, tg, scale)
        return [vals[g] for g in tg]

    def u_row(self, i: int) -> list[LaurentPoly]:
        """``U[i][j]`` for ``j >= i`` (index ``j - i``)."""
        row = self._u.get(i)
        if row is None:
            m = self.ms[i]
            row = self.values(self.table.pbw_factors(m), self.table.normalization(m), start=i)
            if not row[0]:
                raise TriangularityViolation(f"E*{format_mvector(m)} vanishes at its good word")
            self._u[i] = row
        return row

    def solve(self, vals: Sequence[LaurentPoly], exact: bool = True) -> dict[int, object]:
        """Dual PBW coordinates ``{i: c_i}`` of the element with good-word values ``vals``.

        With ``exact`` every step must divide exactly in ``Z[q, q^-1]``
        (raises :class:`InexactDivision`); otherwise RationalFunction
        coefficients are returned.
        """
        d = len(self.ms)
        rem: list = list(vals) if exact else [_rat(v) for v in vals]
        out: dict[int, object] = {}
        for j in range(d):
            v = rem[j]
            if not v:
                continue
            row = self.u_row(j)
            if exact:
                cj = v.divmod_exact(row[0])
            else:
                cj = v / row[0]
            out[j] = cj
            for k in range(1, len(row)):
                if row[k]:
                    rem[j + k] = rem[j + k] - cj * row[k]
        return out

    # -- Theta in dual PBW coordinates ------------------------------------
    def theta_factors(self, m: MVector) -> tuple[int, list[ShuffleElement]]:
        t = self.table
        sig = t.sigma_rootvec
        facs: list[ShuffleElement] = []
        for k in range(t.order.n - 1, -1, -1):
            facs.extend([sig[t.order.roots[k]]] * m[k])
        return self.twist - t.normalization(m), facs

    def a_row(self, i: int) -> dict[int, LaurentPoly]:
        """Dual PBW coordinates of ``Theta(E*(p_i))``; checked unitriangular."""
        row = self._a.get(i)
        if row is None:
            m = self.ms[i]
            scale, facs = self.theta_factors(m)
            vals = self.values(facs, scale)
            if any(vals[j] for j in range(i)):
                j = next(j for j in range(i) if vals[j])
                raise TriangularityViolation(
                    f"Theta(E*{format_mvector(m)}) is nonzero at the larger good word {format_word(self.goods[j])}")
            try:
                row = self.solve(vals)
            except InexactDivision as exc:
                raise TriangularityViolation(
                    f"Theta(E*{format_mvector(m)}) has non-integral dual PBW coordinates") from exc
            if row.get(i) != ONE or any(j < i for j in row):
                raise TriangularityViolation(
                    f"Theta(E*{format_mvector(m)}) has coefficient {row.get(i, ZERO)} on itself")
            self._a[i] = row
        return row

    def theta_coords(self, coords: dict[int, LaurentPoly]) -> dict[int, LaurentPoly]:
        """Apply Theta to an element given by dual PBW coordinates."""
        out: dict[int, LaurentPoly] = {}
        for k, ck in coords.items():
            cb = ck.bar()
            for j, a in self.a_row(k).items():
                v = out.get(j, ZERO) + cb * a
                if v:
                    out[j] = v
                else:
                    out.pop(j, None)
        return out

    def canonical_coords(self, i: int) -> dict[int, LaurentPoly]:
        """``kappa`` with ``b(p_i) = sum_j kappa_j E*(p_j)``."""
        kappa: dict[int, LaurentPoly] = {i: ONE}
        # rho[j] accumulates sum_{k < j} bar(kappa_k) A[k][j]
        rho: dict[int, LaurentPoly] = {}

        def push(k):
            kb = kappa[k].bar()
            for j, a in self.a_row(k).items():
                if j > k:
                    rho[j] = rho.get(j, ZERO) + kb * a

        push(i)
        for j in range(i + 1, len(self.ms)):
            r = rho.pop(j, ZERO)
            if not r:
                continue
            try:
                kj = kl_solve(r)
            except NotAntisymmetric as exc:
                raise NonConvergence(
                    f"b{format_mvector(self.ms[i])}: correction at {format_mvector(self.ms[j])} "
                    f"is not antisymmetric: {r}") from exc
            if kj:
                kappa[j] = kj
                push(j)
        return kappa

    def check_canonical(self, i: int, kappa: dict[int, LaurentPoly]) -> bool:
        """Both defining properties: congruence to ``E*(p_i)`` and Theta-invariance."""
        if kappa.get(i) != ONE:
            return False
        for j, k in kappa.items():
            if j != i and (not k or k.min_exp() < 1):
                return False
        th = self.theta_coords(kappa)
        return th == {j: k for j, k in kappa.items() if k}

    def element(self, coords: dict[int, LaurentPoly]) -> ShuffleElement:
        """Full word expansion of ``sum c_j E*(p_j)``."""
        c = self.table.cartan
        x = ShuffleElement.zero(c, self.weight)
        for j, cj in sorted(coords.items()):
            x = x + self.table.dual_pbw(self.ms[j], check=False).scale(cj)
        return x


@dataclass
class DCBRecord:
    mvector: MVector
    coords: dict[MVector, LaurentPoly]
    theta_fixed: bool
    provenance: str = "computed"
    _space: WeightSpace | None = field(default=None, repr=False, compare=False)
    _element: ShuffleElement | None = field(default=None, repr=False, compare=False)

    @property
    def element(self) -> ShuffleElement:
        if self._element is None:
            sp = self._space
            self._element = sp.element({sp.index[m]: c for m, c in self.coords.items()})
        return self._element

    @property
    def weight(self) -> Weight:
        return self._space.weight


def _cache_key(table: LyndonTable, m: MVector) -> str:
    key = json.dumps([table.cartan.type, table.cartan.rank, list(table.order.reduced_word), list(m)])
    return hashlib.sha256(key.encode()).hexdigest()[:32]


class DCBEngine:
    """Dual canonical basis computations for one convex order."""

    def __init__(self, table: LyndonTable, cache_dir: str | os.PathLike | None = None,
                 verify_words_limit: int = 2000):
        self.table = table
        self.cartan = table.cartan
        self.order = table.order
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self.verify_words_limit = verify_words_limit
        self._spaces: dict[Weight, WeightSpace] = {}
        self._records: dict[MVector, DCBRecord] = {}
        self._root_sigma: dict[Weight, ShuffleElement] | None = None

    # -- spaces ------------------------------------------------------------
    def space(self, nu: Weight) -> WeightSpace:
        nu = tuple(nu)
        sp = self._spaces.get(nu)
        if sp is None:
            sp = self._spaces[nu] = WeightSpace(self.table, nu)
        return sp

    def weight(self, m: MVector) -> Weight:
        return self.order.weight(m)

    def _check_m(self, m) -> MVector:
        m = tuple(int(x) for x in m)
        if len(m) != self.order.n or min(m, default=0) < 0:
            from .errors import PreconditionViolated
            raise PreconditionViolated(
                f"m-vector {format_mvector(m)} does not match the {self.order.n} roots of {self.cartan.name}")
        return m

    # -- canonical elements --------------------------------------------------
    def dcb(self, m) -> DCBRecord:
        m = self._check_m(m)
        rec = self._records.get(m)
        if rec is not None:
            return rec
        rec = self._cache_load(m)
        if rec is None:
            sp = self.space(self.weight(m))
            i = sp.index[m]
            kappa = sp.canonical_coords(i)
            ok = sp.check_canonical(i, kappa)
            if not ok:
                raise NonConvergence(f"b{format_mvector(m)} fails its defining properties")
            rec = DCBRecord(m, {sp.ms[j]: c for j, c in sorted(kappa.items())}, True, "computed", sp)
            self._verify_words(rec)
            self._cache_store(rec)
        self._records[m] = rec
        return rec

    def element(self, m) -> ShuffleElement:
        return self.dcb(m).element

    @property
    def solved_root_sigma(self) -> dict[Weight, ShuffleElement]:
        """``sigma(E*(beta))`` by monomial solve, checked against the bracket recursion."""
        if self._root_sigma is None:
            out = {}
            for beta, e in self.table.rootvec.items():
                s = sigma(e, self.table)
                if s != self.table.sigma_rootvec[beta]:
                    raise CalibrationFailure(f"two computations of sigma(E*{beta}) disagree")
                out[beta] = s
            self._root_sigma = out
        return self._root_sigma

    def theta_words(self, coords: dict[MVector, LaurentPoly], nu: Weight) -> ShuffleElement:
        """Word expansion of ``Theta(sum c_p E*(p))`` using productwise sigma."""
        t = self.table
        sig = self.solved_root_sigma
        tw = self.cartan.twist(nu)
        x = ShuffleElement.zero(self.cartan, nu)
        for p, cp in coords.items():
            y = ShuffleElement.unit(self.cartan)
            for k in range(t.order.n - 1, -1, -1):
                for _ in range(p[k]):
                    y = mul(y, sig[t.order.roots[k]])
            x = x + y.scale(cp.bar()).shift(tw - t.normalization(p))
        return x

    def _verify_words(self, rec: DCBRecord):
        """Word-level Theta check of a record, for weights with few words."""
        sp = rec._space
        nwords = 1
        n = 0
        for c in sp.weight:
            for k in range(c):
                n += 1
                nwords = nwords * n // (k + 1)
        if nwords > self.verify_words_limit:
            return
        x = rec.element
        if self.theta_words(rec.coords, sp.weight) != x:
            raise NonConvergence(f"b{format_mvector(rec.mvector)} is not Theta-invariant in word coordinates")

    # -- expansions ------------------------------------------------------------
    def pbw_coords_of_values(self, nu: Weight, vals: Sequence[LaurentPoly]) -> dict[MVector, LaurentPoly]:
        sp = self.space(nu)
        try:
            out = sp.solve(vals, exact=True)
        except InexactDivision:
            out = sp.solve(vals, exact=False)
            bad = [sp.ms[j] for j, c in out.items() if not c.is_laurent()]
            if bad:
                raise NotInSpan(f"coefficient of E*{format_mvector(bad[0])} is not a Laurent polynomial")
            out = {j: c.to_laurent() for j, c in out.items()}
        return {sp.ms[j]: c for j, c in sorted(out.items())}

    def expand_on_pbw(self, x: ShuffleElement) -> dict[MVector, LaurentPoly]:
        """Dual PBW coordinates via the triangular good-word system, checked word by word."""
        if not x:
            return {}
        sp = self.space(x.weight)
        coords = self.pbw_coords_of_values(x.weight, [x.coeff(g) for g in sp.goods])
        if sp.element({sp.index[m]: c for m, c in coords.items()}) != x:
            raise NotInSpan("element is not in the span of the dual PBW basis")
        return coords

    def dcb_from_pbw(self, nu: Weight, coords: dict[MVector, LaurentPoly]) -> dict[MVector, LaurentPoly]:
        """Convert dual PBW coordinates to dual canonical ones (greedy, lazy)."""
        sp = self.space(nu)
        rem = {sp.index[m]: c for m, c in coords.items() if c}
        out: dict[MVector, LaurentPoly] = {}
        while rem:
            i = min(rem)
            g = rem.pop(i)
            out[sp.ms[i]] = g
            for m2, k in self.dcb(sp.ms[i]).coords.items():
                j = sp.index[m2]
                if j == i:
                    continue
                v = rem.get(j, ZERO) - g * k
                if v:
                    rem[j] = v
                else:
                    rem.pop(j, None)
        return out

    def expand_on_dcb(self, x: ShuffleElement) -> dict[MVector, LaurentPoly]:
        if not x:
            return {}
        return self.dcb_from_pbw(x.weight, self.expand_on_pbw(x))

    def product_values(self, factors: Sequence[ShuffleElement], scale: int = 0):
        nu = tuple(map(sum, zip(*(f.weight for f in factors))))
        sp = self.space(nu)
        return nu, sp.values(factors, scale)

    def expand_product_on_dcb(self, factors: Sequence[ShuffleElement]) -> dict[MVector, LaurentPoly]:
        """``prod(factors)`` on the dual canonical basis, never expanding the product."""
        nu, vals = self.product_values(factors)
        return self.dcb_from_pbw(nu, self.pbw_coords_of_values(nu, vals))

    def expand_square_on_dcb(self, x: ShuffleElement) -> dict[MVector, LaurentPoly]:
        """``x^2`` on the dual canonical basis for a Theta-invariant ``x``.

        ``q^{(nu,nu)/2} x^2`` is then Theta-invariant, so the lattice
        certificate usually gives the answer without any correction step.
        """
        k = self.cartan.form(x.weight, x.weight) // 2
        nu, vals = self.product_values([x, x], k)
        coords = self.pbw_coords_of_values(nu, vals)
        out = self.lattice_certificate(nu, coords)
        if out is None:
            out = self.dcb_from_pbw(nu, coords)
        return {m: c.shift(-k) for m, c in out.items()}

    def lattice_certificate(self, nu: Weight, coords: dict[MVector, LaurentPoly]):
        """For a Theta-invariant element with dual PBW coordinates in ``Z[q]``.

        Then its dual canonical coordinates are the constant terms, because
        ``E*(p) - b(p)`` lies in ``q`` times the lattice spanned by the
        canonical elements.  Returns ``None`` when some coordinate has a
        negative power of ``q`` and the shortcut does not apply.
        """
        out = {}
        for m, c in coords.items():
            if c and c.min_exp() < 0:
                return None
            if c.coeff(0):
                out[m] = LaurentPoly(c.coeff(0))
        return out

    def mvector_of(self, w: Word) -> MVector:
        return self.table.mvector_of(w)

    # -- cache -------------------------------------------------------------------
    def _cache_path(self, m: MVector) -> Path | None:
        if self.cache_dir is None:
            return None
        return self.cache_dir / f"{_cache_key(self.table, m)}.json"

    def _cache_store(self, rec: DCBRecord):
        path = self._cache_path(rec.mvector)
        if path is None:
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        body = {
            "format": 1,
            "engine_version": ENGINE_VERSION,
            "cartan_type": self.cartan.name,
            "reduced_word": list(self.order.reduced_word),
            "bracket_sign": self.table.bracket_sign,
            "mvector": list(rec.mvector),
            "pbw_coords": [{"m": list(m), "c": c.to_json()} for m, c in rec.coords.items()],
        }
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(body, fh)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def cache_load(self, m: MVector) -> DCBRecord:
        """Load and verify a cached record; raises :class:`CacheCorrupt` on any problem."""
        path = self._cache_path(m)
        if path is None or not path.exists():
            raise CacheCorrupt(f"no cache entry for {format_mvector(m)}")
        try:
            body = json.loads(path.read_text())
            if body.get("format") != 1 or tuple(body["mvector"]) != tuple(m) \
                    or body["cartan_type"] != self.cartan.name \
                    or tuple(body["reduced_word"]) != self.order.reduced_word:
                raise CacheCorrupt(f"{path.name}: key mismatch")
            coords = {tuple(t["m"]): LaurentPoly.from_json(t["c"]) for t in body["pbw_coords"]}
        except (ValueError, KeyError, TypeError) as exc:
            raise CacheCorrupt(f"{path.name}: unreadable ({exc})") from exc
        sp = self.space(self.weight(m))
        if any(mm not in sp.index for mm in coords):
            raise CacheCorrupt(f"{path.name}: m-vector of the wrong weight")
        kappa = {sp.index[mm]: c for mm, c in coords.items()}
        if not sp.check_canonical(sp.index[m], kappa):
            raise CacheCorrupt(f"{path.name}: cached coordinates fail the defining properties")
        return DCBRecord(m, {sp.ms[j]: c for j, c in sorted(kappa.items())}, True, "cached", sp)

    def _cache_load(self, m: MVector) -> DCBRecord | None:
        path = self._cache_path(m)
        if path is None or not path.exists():
            return None
        try:
            return self.cache_load(m)
        except CacheCorrupt as exc:
            log.warning("discarding cache entry: %s", exc)
            return None
