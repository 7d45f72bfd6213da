"""Command-line front end.

Exit codes: 0 success, 1 usage or precondition error, 2 engine error,
3 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
import time
from dataclasses import dataclass
from functools import lru_cache

from . import golden
from .analysis import (census, conjecture1_check, product_on_dcb, proportional_term, reality_certificate,
                       string_decomposition)
from .dcb import DCBEngine
from .errors import EngineError, PreconditionError, QShuffleError
from .laurent import LaurentPoly
from .pbw import build_lyndon_table
from .roots import (MVector, build_convex_order, format_mvector, format_root, parse_mvector)
from .shuffle import ShuffleElement
from .typea import Multisegment, dimension_eval, drinfeld, multisegment_to_mvector, mvector_to_multisegment

CACHE_ENV = "QSHUFFLE_CACHE"
EXIT_OK, EXIT_USAGE, EXIT_ENGINE, EXIT_MISMATCH = 0, 1, 2, 3
TIERS = ("fast", "standard", "heavy")


class UsageError(Exception):
    pass


class Mismatch(Exception):
    pass


@dataclass
class RunConfig:
    cartan_type: str | None = None
    reduced_word: tuple[int, ...] | None = None
    cache_dir: str | None = None
    tier: str = "standard"
    output: str = "text"
    budget: float | None = None
    jobs: int = 1


@lru_cache(maxsize=None)
def _engine(type_: str, word: tuple | None, cache_dir: str | None) -> DCBEngine:
    order = build_convex_order(type_, reduced_word=word)
    return DCBEngine(build_lyndon_table(order), cache_dir=cache_dir)


def engine_for(cfg: RunConfig, type_: str | None = None) -> DCBEngine:
    t = type_ or cfg.cartan_type
    if not t:
        raise UsageError("--type is required")
    return _engine(t.upper(), cfg.reduced_word, cfg.cache_dir)


def _mvec(engine: DCBEngine, text: str) -> MVector:
    try:
        m = parse_mvector(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse m-vector {text!r}") from exc
    if len(m) != engine.order.n or min(m, default=0) < 0:
        raise UsageError(f"{engine.cartan.name} m-vectors have {engine.order.n} nonnegative entries, got {text!r}")
    return m


def _exp_text(exp: dict[MVector, LaurentPoly]) -> list[str]:
    return [f"  b{format_mvector(m)}: {c}" for m, c in exp.items()]


def _exp_json(exp):
    return [{"m": list(m), "c": c.to_json()} for m, c in exp.items()]


class _Out:
    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.lines: list[str] = []
        self.data: dict = {"format": 1}

    def text(self, s: str = ""):
        self.lines.append(s)

    def emit(self):
        if self.cfg.output == "json":
            print(json.dumps(self.data, indent=2))
        else:
            print("\n".join(self.lines))


# ---------------------------------------------------------------------------
def cmd_dcb(args, cfg: RunConfig) -> int:
    eng = engine_for(cfg)
    m = _mvec(eng, args.m)
    rec = eng.dcb(m)
    x = rec.element
    out = _Out(cfg)
    out.text(f"b{format_mvector(m)} = {x if x.degree else '1 (empty word)'}")
    out.data.update({"command": "dcb", "cartan_type": eng.cartan.name, "mvector": list(m),
                     "provenance": rec.provenance, "element": x.to_json()})
    out.emit()
    return EXIT_OK


_EXPECT = re.compile(r"\s*q\^\{?(-?\d+)\}?\s*(?:\(\s*b2\s*\+\s*z\s*\)|\*?\s*b2)\s*$")


def _check_expect(expect: str, exp, m1, m2):
    mo = _EXPECT.fullmatch(expect)
    if not mo:
        raise UsageError(f"cannot parse --expect {expect!r}; use 'q^k(b2+z)' or 'q^k b2'")
    k = int(mo.group(1))
    two = "z" in expect
    top = tuple(a + b for a, b in zip(m1, m2))
    qk = LaurentPoly({k: 1})
    if exp.get(top) != qk:
        raise Mismatch(f"coefficient of b{format_mvector(top)} is {exp.get(top)}, expected {qk}")
    others = {m: c for m, c in exp.items() if m != top}
    if two and (len(others) != 1 or next(iter(others.values())) != qk):
        raise Mismatch(f"expected exactly one further term with coefficient {qk}, got "
                       + ", ".join(f"b{format_mvector(m)}: {c}" for m, c in others.items()))
    if not two and others:
        raise Mismatch("expected a single term")


def cmd_product(args, cfg: RunConfig) -> int:
    eng = engine_for(cfg)
    m1, m2 = _mvec(eng, args.m1), _mvec(eng, args.m2)
    exp = product_on_dcb(eng, m1, m2)
    out = _Out(cfg)
    out.text(f"b{format_mvector(m1)} * b{format_mvector(m2)} =")
    out.lines.extend(_exp_text(exp))
    out.data.update({"command": "product", "cartan_type": eng.cartan.name, "m1": list(m1), "m2": list(m2),
                     "expansion": _exp_json(exp)})
    if reality_certificate(eng, m1).is_real:
        rep = conjecture1_check(eng, m1, m2)
        out.data["conj1"] = rep.to_json()
        if rep.in_qZB:
            out.text("product is a power of q times a basis vector")
        else:
            out.text(f"extremes: q^{rep.m} b{format_mvector(rep.bprime) if rep.bprime else '?'}, "
                     f"q^{rep.s} b{format_mvector(rep.bsecond) if rep.bsecond else '?'}; gap ok: {rep.gap_ok}")
    status = EXIT_OK
    if args.expect:
        try:
            _check_expect(args.expect, exp, m1, m2)
            out.text(f"expectation {args.expect!r}: ok")
            out.data["expect"] = "ok"
        except Mismatch as exc:
            out.text(f"expectation {args.expect!r}: MISMATCH ({exc})")
            out.data["expect"] = str(exc)
            status = EXIT_MISMATCH
    out.emit()
    return status


# -- verify -----------------------------------------------------------------
def _elem(eng, support) -> ShuffleElement:
    return ShuffleElement(eng.cartan, {bytes(w): c for w, c in support.items()})


def _verify_orders(t: str) -> list[tuple[str, bool, str]]:
    o = build_convex_order(t)
    got = [tuple(b) for b in o.roots]
    ok = got == golden.ROOT_SEQUENCES[t]
    return [(f"{t} convex order", ok, " < ".join(format_root(b) for b in got))]


def _verify_imaginary(eng: DCBEngine, t: str) -> list[tuple[str, bool, str]]:
    m, mz, shift = golden.IMAGINARY[t]
    cert = reality_certificate(eng, m)
    ok = (not cert.is_real and cert.shift == shift and cert.extra_terms == {mz: LaurentPoly(1)})
    return [(f"{t} b^2 = q^{shift}(b^[2] + z)", ok,
             f"shift {cert.shift}, extra {{{', '.join(f'{format_mvector(k)}: {v}' for k, v in cert.extra_terms.items())}}}")]


def _verify_g2(cfg) -> list:
    eng = engine_for(cfg, "G2")
    res = _verify_orders("G2")
    m, mz, _ = golden.IMAGINARY["G2"]
    b = eng.element(m)
    for name, mm, ref in [("b", m, golden.G2_B), ("b^[2]", tuple(2 * x for x in m), golden.G2_B2),
                          ("z", mz, golden.G2_Z)]:
        x = eng.element(mm)
        res.append((f"G2 {name} = b{format_mvector(mm)}", x == _elem(eng, ref), str(x)))
    sq = b * b
    res.append(("G2 b^2 word expansion", sq == _elem(eng, golden.G2_B_SQUARED), str(sq)))
    res.extend(_verify_imaginary(eng, "G2"))
    return res


def _verify_type(t):
    def run(cfg):
        eng = engine_for(cfg, t)
        return _verify_orders(t) + _verify_imaginary(eng, t)
    return run


def _verify_a5(cfg) -> list:
    from .typea import Multisegment
    eng = engine_for(cfg, "A5")
    res = _verify_orders("A5")
    m, mz, shift = golden.IMAGINARY["A5"]
    b = eng.element(m)
    nu = tuple(2 * x for x in eng.weight(m))
    sp = eng.space(nu)
    coords = eng.pbw_coords_of_values(nu, sp.values([b, b], -shift))
    cert = eng.lattice_certificate(nu, coords)
    want = {tuple(2 * x for x in m): LaurentPoly(1), mz: LaurentPoly(1)}
    res.append(("A5 q^2 b^2 has dual PBW coordinates in Z[q]", cert is not None, f"{len(coords)} coordinates"))
    res.append((f"A5 b^2 = q^{shift}(b^[2] + z)", cert == want,
                str({format_mvector(k): str(v) for k, v in (cert or {}).items()})))
    inv = sp.theta_coords({sp.index[p]: c for p, c in coords.items()}) == \
        {sp.index[p]: c for p, c in coords.items()}
    res.append(("A5 q^2 b^2 is Theta-invariant", inv, ""))
    ms = mvector_to_multisegment(eng.order, m)
    res.append(("A5 multisegment of b", ms == Multisegment.parse(golden.A5_M_SEGMENTS), str(ms)))
    return res


def _verify_census(cfg) -> list:
    eng = engine_for(cfg, "G2")
    rep = census(eng, golden.G2_CENSUS_DEGREE, budget=cfg.budget, jobs=cfg.jobs)
    return [
        ("G2 census total", rep.total == golden.G2_CENSUS_TOTAL, str(rep.total)),
        ("G2 imaginary vectors", sorted(rep.imaginary) == golden.G2_IMAGINARY,
         ", ".join(format_mvector(m) for m in rep.imaginary)),
        ("G2 prime imaginary vectors", sorted(rep.prime_imaginary) == golden.G2_PRIME_IMAGINARY,
         ", ".join(format_mvector(m) for m in rep.prime_imaginary)),
    ]


def _verify_conj1(cfg, depth: int = 5) -> list:
    from .analysis import enumerate_dcb
    eng = engine_for(cfg, "G2")
    ms = [m for m in enumerate_dcb(eng, depth) if eng.order.degree(m)]
    real = {m for m in ms if reality_certificate(eng, m).is_real}
    bad = []
    n = 0
    for m1 in ms:
        if m1 not in real:
            continue
        for m2 in ms:
            n += 1
            rep = conjecture1_check(eng, m1, m2)
            if not (rep.in_qZB or rep.gap_ok):
                bad.append((m1, m2))
    return [(f"gap property on G2 pairs with both factors of degree <= {depth}", not bad,
             f"{n} pairs, {len(bad)} violations" + (f": {bad[:5]}" if bad else ""))]


SUITES = {
    "g2": _verify_g2, "b3": _verify_type("B3"), "c3": _verify_type("C3"), "d4": _verify_type("D4"),
    "a5": _verify_a5, "census": _verify_census, "conj1": _verify_conj1,
}
HEAVY_SUITES = {"a5"}


def cmd_verify(args, cfg: RunConfig) -> int:
    suite = args.suite.lower()
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if suite in HEAVY_SUITES and cfg.tier != "heavy":
        raise UsageError(f"suite {suite} needs --tier heavy")
    t0 = time.monotonic()
    results = SUITES[suite](cfg) if suite != "conj1" else _verify_conj1(cfg, args.depth or 5)
    out = _Out(cfg)
    for name, ok, detail in results:
        out.text(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f"  ({detail})" if detail else ""))
    out.text(f"{suite}: {sum(ok for _, ok, _ in results)}/{len(results)} passed in {time.monotonic() - t0:.1f} s")
    out.data.update({"command": "verify", "suite": suite,
                     "results": [{"name": n, "ok": ok, "detail": d} for n, ok, d in results]})
    out.emit()
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_MISMATCH


# -- translate ---------------------------------------------------------------
def cmd_translate(args, cfg: RunConfig) -> int:
    out = _Out(cfg)
    out.data["command"] = "translate"
    if args.segments:
        try:
            ms = Multisegment.parse(args.segments)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        m = None
    elif args.m:
        eng = engine_for(cfg)
        m = _mvec(eng, args.m)
        ms = mvector_to_multisegment(eng.order, m)
    else:
        raise UsageError("give --m or --segments")
    if args.to == "multisegment":
        out.text(str(ms))
        out.data["multisegment"] = ms.to_json()
    elif args.to == "drinfeld":
        d = drinfeld(ms, args.N)
        out.lines.extend(d.lines())
        out.data["drinfeld"] = d.to_json()
    else:
        if m is None:
            rank = max(b for _, b in ms.segments)
            eng = engine_for(cfg, cfg.cartan_type or f"A{max(rank, 1)}")
            m = multisegment_to_mvector(eng.order, ms)
        else:
            eng = engine_for(cfg)
        dim = dimension_eval(eng.element(m))
        out.text(str(dim))
        out.data["dimension"] = dim
    out.emit()
    return EXIT_OK


def cmd_strings(args, cfg: RunConfig) -> int:
    eng = engine_for(cfg)
    m1 = _mvec(eng, args.b1)
    dec = string_decomposition(eng, m1, args.depth)
    out = _Out(cfg)
    for chain in dec.strings:
        out.text(" -> ".join(format_mvector(m) for m in chain))
    for a, b, img in dec.violations:
        out.text(f"not injective: {format_mvector(a)} and {format_mvector(b)} both map to {format_mvector(img)}")
    out.data.update({"command": "strings", **dec.to_json()})
    out.emit()
    return EXIT_OK if not dec.violations else EXIT_MISMATCH


# ---------------------------------------------------------------------------
class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="cartan_type", help="Cartan type, e.g. G2, B3, A5")
    common.add_argument("--word", help="reduced word for w0 overriding the default, e.g. 1,2,1,2,1,2")
    common.add_argument("--cache-dir", default=None, help=f"record cache (default: ${CACHE_ENV})")
    common.add_argument("--tier", choices=TIERS, default="standard")
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=float, default=None, help="wall-clock budget in seconds")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="qshuffle", description="Dual canonical bases in the quantum shuffle algebra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("dcb", parents=[common], help="word expansion of b(m)")
    s.add_argument("--m", required=True)
    s.set_defaults(func=cmd_dcb)

    s = sub.add_parser("product", parents=[common], help="b(m1) b(m2) on the dual canonical basis")
    s.add_argument("--m1", required=True)
    s.add_argument("--m2", required=True)
    s.add_argument("--expect", default=None, help="'q^k(b2+z)' or 'q^k b2'")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("verify", parents=[common], help="reference identities")
    s.add_argument("suite", help="|".join(SUITES))
    s.add_argument("--depth", type=int, default=None, help="degree bound for conj1")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("translate", parents=[common], help="type A labels")
    s.add_argument("--m", default=None)
    s.add_argument("--segments", default=None)
    s.add_argument("--to", choices=("multisegment", "drinfeld", "dimension"), default="multisegment")
    s.add_argument("--N", type=int, default=16)
    s.set_defaults(func=cmd_translate)

    s = sub.add_parser("strings", parents=[common], help="b1-strings up to a degree")
    s.add_argument("--b1", required=True)
    s.add_argument("--depth", type=int, default=4)
    s.set_defaults(func=cmd_strings)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    word = None
    if args.word:
        try:
            word = tuple(int(x) for x in re.split(r"[,\s]+", args.word.strip()) if x)
        except ValueError:
            print(f"qshuffle: error: cannot parse --word {args.word!r}", file=sys.stderr)
            return EXIT_USAGE
    cfg = RunConfig(args.cartan_type, word, args.cache_dir or os.environ.get(CACHE_ENV) or None,
                    args.tier, args.output, args.budget, max(1, args.jobs))
    try:
        return args.func(args, cfg)
    except (UsageError, PreconditionError) as exc:
        print(f"qshuffle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EngineError as exc:
        print(f"qshuffle: engine error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except QShuffleError as exc:
        print(f"qshuffle: error: {exc}", file=sys.stderr)
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
