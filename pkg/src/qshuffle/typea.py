"""Type A labels: multisegments, Drinfeld polynomials and the q = 1 dimension."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .errors import NonDefaultOrder, SegmentTooLong, WrongType
from .roots import ConvexOrder, MVector, build_convex_order
from .shuffle import ShuffleElement

__all__ = ["Multisegment", "DrinfeldSet", "mvector_to_multisegment", "multisegment_to_mvector",
           "drinfeld", "dimension_eval"]

Segment = tuple[int, int]


@dataclass(frozen=True)
class Multisegment:
    segments: tuple[Segment, ...]

    def __post_init__(self):
        for a, b in self.segments:
            if not 1 <= a <= b:
                raise ValueError(f"bad segment [{a},{b}]")
        object.__setattr__(self, "segments", tuple(sorted(self.segments)))

    @property
    def degree(self) -> int:
        return sum(b - a + 1 for a, b in self.segments)

    def __add__(self, other: "Multisegment") -> "Multisegment":
        return Multisegment(self.segments + other.segments)

    def __str__(self):
        return ",".join("[" + ",".join(str(i) for i in range(a, b + 1)) + "]" for a, b in self.segments)

    @classmethod
    def parse(cls, text: str) -> "Multisegment":
        """``"[1,2],[2,3,4],[3],[4,5]"``; a two-entry segment ``[a,b]`` may also give just the ends."""
        groups = re.findall(r"\[([^\]]*)\]", text)
        if not groups or re.sub(r"\[[^\]]*\]|[,\s]", "", text):
            raise ValueError(f"cannot parse multisegment {text!r}")
        segs = []
        for g in groups:
            xs = [int(x) for x in re.split(r"[,\s]+", g.strip()) if x]
            if not xs:
                raise ValueError("empty segment")
            if xs != list(range(xs[0], xs[0] + len(xs))) and not (len(xs) == 2 and xs[0] < xs[1]):
                raise ValueError(f"[{g}] is not a segment")
            segs.append((xs[0], xs[-1]))
        return cls(tuple(segs))

    def to_json(self):
        return {"format": 1, "segments": [list(s) for s in self.segments]}


@dataclass(frozen=True)
class DrinfeldSet:
    """``P_k(u) = prod (u - q^-e)`` over the exponents listed for ``k``."""
    polys: tuple[tuple[int, tuple[int, ...]], ...]

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.polys)

    def __add__(self, other: "DrinfeldSet") -> "DrinfeldSet":
        d = {k: list(v) for k, v in self.polys}
        for k, v in other.polys:
            d.setdefault(k, []).extend(v)
        return DrinfeldSet(tuple(sorted((k, tuple(sorted(v))) for k, v in d.items())))

    def lines(self) -> list[str]:
        out = []
        for k, exps in self.polys:
            parts = []
            for e, mult in sorted(Counter(exps).items()):
                f = f"(u - q^-{e})"
                parts.append(f + (f"^{mult}" if mult > 1 else ""))
            body = parts[0][1:-1] if len(parts) == 1 and parts[0].endswith(")") else "".join(parts)
            out.append(f"P_{k}(u) = {body}")
        out.append("P_k(u) = 1 for all other k")
        return out

    def to_json(self):
        return {"format": 1, "polys": {str(k): list(v) for k, v in self.polys}}


def _check_type_a(order: ConvexOrder):
    if order.cartan.type != "A":
        raise WrongType(f"multisegments need type A, not {order.cartan.name}")
    default = build_convex_order(order.cartan.name)
    if order.reduced_word != default.reduced_word:
        raise NonDefaultOrder("multisegment labels are tied to the default reduced word")


def _segment(beta) -> Segment:
    idx = [i + 1 for i, c in enumerate(beta) if c]
    return idx[0], idx[-1]


def mvector_to_multisegment(order: ConvexOrder, m: MVector) -> Multisegment:
    _check_type_a(order)
    if len(m) != order.n:
        raise ValueError(f"m-vector has length {len(m)}, expected {order.n}")
    segs = []
    for mk, beta in zip(m, order.roots):
        segs.extend([_segment(beta)] * mk)
    return Multisegment(tuple(segs))


def multisegment_to_mvector(order: ConvexOrder, ms: Multisegment) -> MVector:
    _check_type_a(order)
    pos = {_segment(b): k for k, b in enumerate(order.roots)}
    m = [0] * order.n
    for s in ms.segments:
        if s not in pos:
            raise ValueError(f"segment [{s[0]},{s[1]}] does not fit rank {order.cartan.rank}")
        m[pos[s]] += 1
    return tuple(m)


def drinfeld(ms: Multisegment, N: int) -> DrinfeldSet:
    """A segment ``[a, b]`` contributes the root ``q^-(a+b)`` to ``P_{b-a+1}``."""
    d: dict[int, list[int]] = {}
    for a, b in ms.segments:
        k = b - a + 1
        if k >= N:
            raise SegmentTooLong(f"segment [{a},{b}] has length {k} >= N = {N}")
        d.setdefault(k, []).append(a + b)
    return DrinfeldSet(tuple(sorted((k, tuple(sorted(v))) for k, v in d.items())))


def dimension_eval(x: ShuffleElement) -> int:
    """Sum of all word coefficients at ``q = 1``."""
    return sum(c.at_one() for _, c in x.items())
