"""Partial injective transformations (charts) on a finite ground set.

Maps act on the right and compose left to right: ``x (a * b) = (x a) b``.
A chart prints in cycle-chain notation, e.g. ``(2 6 8)[1 3][4 5 9]``: a cycle
``(x0 ... xk-1)`` sends each point to the next and the last back to the first;
a chain ``[x0 ... xk]`` sends each point to the next and is undefined at xk.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Union

import numpy as np

from . import _kernels

Point = Union[int, str]

BRUTE_FORCE_CAP = 6


class ChartError(ValueError):
    pass


class BadSyntax(ChartError):
    pass


class DuplicatePoint(ChartError):
    pass


class ChainTooShort(ChartError):
    pass


class GroundMismatch(ChartError):
    pass


class NotInjective(ChartError):
    pass


class NotInIdeal(ChartError):
    pass


class GroundTooLarge(ChartError):
    pass


def point_key(p: Point):
    return (isinstance(p, str), p)


def _point(token: str) -> Point:
    return int(token) if token.isdigit() else token


def parse_ground(text: str) -> frozenset:
    """``'1..9'``, ``'1,2,3'`` or ``'a b c'``."""
    text = text.strip()
    m = re.fullmatch(r"(-?\d+)\s*\.\.\s*(-?\d+)", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        return frozenset(range(lo, hi + 1))
    tokens = [t for t in re.split(r"[\s,]+", text) if t]
    if not tokens or not all(re.fullmatch(r"\w+", t) for t in tokens):
        raise BadSyntax(f"cannot read ground set {text!r}")
    return frozenset(_point(t) for t in tokens)


@dataclass(frozen=True)
class Chart:
    ground: frozenset
    pairs: tuple  # sorted (x, x a) pairs

    def __post_init__(self):
        pairs = tuple(sorted(((x, y) for x, y in self.pairs), key=lambda p: point_key(p[0])))
        ground = frozenset(self.ground)
        images = [y for _, y in pairs]
        if len(set(images)) != len(images) or len({x for x, _ in pairs}) != len(pairs):
            raise NotInjective(f"not a partial injection: {pairs}")
        stray = {p for pair in pairs for p in pair} - ground
        if stray:
            raise GroundMismatch(f"points {sorted(stray, key=point_key)} outside the ground set")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "ground", ground)

    @classmethod
    def from_mapping(cls, ground: Iterable[Point], mapping: Mapping) -> "Chart":
        return cls(frozenset(ground), tuple(mapping.items()))

    @classmethod
    def identity(cls, ground: Iterable[Point]) -> "Chart":
        ground = frozenset(ground)
        return cls(ground, tuple((x, x) for x in ground))

    @classmethod
    def empty(cls, ground: Iterable[Point]) -> "Chart":
        return cls(frozenset(ground), ())

    @cached_property
    def mapping(self) -> dict:
        return dict(self.pairs)

    def __call__(self, x: Point) -> Point | None:
        """Image of ``x``, or None where undefined."""
        return self.mapping.get(x)

    @property
    def dom(self) -> frozenset:
        return frozenset(self.mapping)

    @property
    def im(self) -> frozenset:
        return frozenset(self.mapping.values())

    @property
    def span(self) -> frozenset:
        return self.dom | self.im

    @property
    def rank(self) -> int:
        return len(self.pairs)

    @property
    def is_permutation(self) -> bool:
        return self.dom == self.ground

    def __mul__(self, other: "Chart") -> "Chart":
        return compose(self, other)

    def inverse(self) -> "Chart":
        return Chart(self.ground, tuple((y, x) for x, y in self.pairs))

    def __str__(self) -> str:
        return format_chart(self)

    def __repr__(self) -> str:
        return f"Chart({format_chart(self)!r})"


@dataclass(frozen=True)
class BasicComponent:
    kind: str  # "cycle" or "chain"
    points: tuple

    @property
    def length(self) -> int:
        return len(self.points) if self.kind == "cycle" else len(self.points) - 1

    def pairs(self):
        pts = self.points
        if self.kind == "cycle":
            return [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]
        return [(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]

    def __str__(self) -> str:
        body = " ".join(str(p) for p in self.points)
        return f"({body})" if self.kind == "cycle" else f"[{body}]"


@dataclass(frozen=True)
class CycleChainType:
    """Counts of cycles and chains by length, as sorted (length, count) pairs."""

    cycles: tuple[tuple[int, int], ...]
    chains: tuple[tuple[int, int], ...]

    @property
    def cycle_counts(self) -> dict[int, int]:
        return dict(self.cycles)

    @property
    def chain_counts(self) -> dict[int, int]:
        return dict(self.chains)

    @property
    def span_size(self) -> int:
        return sum(k * c for k, c in self.cycles) + sum((k + 1) * c for k, c in self.chains)

    def to_dict(self) -> dict:
        return {"cycles": {str(k): c for k, c in self.cycles}, "chains": {str(k): c for k, c in self.chains}}

    def __str__(self) -> str:
        cyc = ", ".join(f"{k}:{c}" for k, c in self.cycles)
        ch = ", ".join(f"{k}:{c}" for k, c in self.chains)
        return f"cycles {{{cyc}}} chains {{{ch}}}"


_GROUP = re.compile(r"\s*([(\[])([^()\[\]]*)([)\]])")


def parse_chart(text: str, ground: Iterable[Point] | None = None) -> Chart:
    """Read cycle-chain notation. ``'0'`` or ``''`` is the empty chart.

    Without ``ground`` the ground set is the span of the parsed chart.
    """
    src = text.strip()
    comps: list[BasicComponent] = []
    if src not in ("", "0"):
        pos = 0
        while pos < len(src):
            m = _GROUP.match(src, pos)
            if not m:
                if src[pos:].strip() == "":
                    break
                raise BadSyntax(f"unexpected text at {pos}: {src[pos:]!r}")
            opening, body, closing = m.groups()
            if (opening, closing) not in (("(", ")"), ("[", "]")):
                raise BadSyntax(f"mismatched brackets in {m.group(0).strip()!r}")
            tokens = body.split()
            if not tokens or not all(re.fullmatch(r"\w+", t) for t in tokens):
                raise BadSyntax(f"bad group {m.group(0).strip()!r}")
            points = tuple(_point(t) for t in tokens)
            if opening == "[" and len(points) < 2:
                raise ChainTooShort(f"a chain needs at least two points: {m.group(0).strip()!r}")
            comps.append(BasicComponent("cycle" if opening == "(" else "chain", points))
            pos = m.end()
    seen: set = set()
    for c in comps:
        for p in c.points:
            if p in seen:
                raise DuplicatePoint(f"point {p} occurs twice")
            seen.add(p)
    pairs = [pair for c in comps for pair in c.pairs()]
    return Chart(frozenset(ground) if ground is not None else frozenset(seen), tuple(pairs))


def format_chart(a: Chart) -> str:
    comps = decompose(a)
    return "".join(str(c) for c in comps) if comps else "0"


def _same_ground(a: Chart, b: Chart) -> None:
    if a.ground != b.ground:
        raise GroundMismatch("charts live on different ground sets")


def compose(a: Chart, b: Chart) -> Chart:
    _same_ground(a, b)
    mb = b.mapping
    return Chart(a.ground, tuple((x, mb[y]) for x, y in a.pairs if y in mb))


def inverse(a: Chart) -> Chart:
    return a.inverse()


def decompose(a: Chart) -> tuple[BasicComponent, ...]:
    """The unique cycles and chains of ``a``, ordered by least point.

    Cycles are rotated to start at their least point.
    """
    m = a.mapping
    im = a.im
    comps = []
    used: set = set()
    for start in sorted(a.dom - im, key=point_key):
        pts = [start]
        while pts[-1] in m:
            pts.append(m[pts[-1]])
        used.update(pts)
        comps.append(BasicComponent("chain", tuple(pts)))
    for start in sorted(a.dom - used, key=point_key):
        if start in used:
            continue
        pts = [start]
        while m[pts[-1]] != start:
            pts.append(m[pts[-1]])
        used.update(pts)
        comps.append(BasicComponent("cycle", tuple(pts)))
    comps.sort(key=lambda c: point_key(min(c.points, key=point_key)))
    return tuple(comps)


def join(components: Iterable[BasicComponent], ground: Iterable[Point]) -> Chart:
    """Join of pairwise completely disjoint basic charts."""
    pairs = []
    seen: set = set()
    for c in components:
        if seen & set(c.points):
            raise DuplicatePoint("components are not completely disjoint")
        seen.update(c.points)
        pairs.extend(c.pairs())
    return Chart(frozenset(ground), tuple(pairs))


def cycle_chain_type(a: Chart) -> CycleChainType:
    comps = decompose(a)
    cyc = Counter(c.length for c in comps if c.kind == "cycle")
    ch = Counter(c.length for c in comps if c.kind == "chain")
    return CycleChainType(tuple(sorted(cyc.items())), tuple(sorted(ch.items())))


def conjugate_charts(a: Chart, b: Chart) -> bool:
    _same_ground(a, b)
    return cycle_chain_type(a) == cycle_chain_type(b)


def is_conjugator(tau: Chart, a: Chart, b: Chart) -> bool:
    """tau^-1 a tau = b and tau b tau^-1 = a."""
    ti = tau.inverse()
    return ti * a * tau == b and tau * b * ti == a


def _components_by_shape(a: Chart) -> dict[tuple[str, int], list[BasicComponent]]:
    groups: dict[tuple[str, int], list[BasicComponent]] = {}
    for c in decompose(a):
        groups.setdefault((c.kind, c.length), []).append(c)
    return groups


def build_conjugator(a: Chart, b: Chart) -> Chart | None:
    """A chart tau with dom = span(a), im = span(b) conjugating a to b, or None.

    Components of equal kind and length are paired in order of least point.
    """
    _same_ground(a, b)
    if cycle_chain_type(a) != cycle_chain_type(b):
        return None
    ga, gb = _components_by_shape(a), _components_by_shape(b)
    pairs = []
    for shape, comps in ga.items():
        for ca, cb in zip(comps, gb[shape]):
            pairs.extend(zip(ca.points, cb.points))
    tau = Chart(a.ground, tuple(pairs))
    if not is_conjugator(tau, a, b):
        raise AssertionError(f"constructed conjugator {tau} failed verification")
    return tau


def build_permutation_conjugator(a: Chart, b: Chart) -> Chart | None:
    """A permutation sigma of the ground set with sigma^-1 a sigma = b, or None."""
    tau = build_conjugator(a, b)
    if tau is None:
        return None
    rest_a = sorted(a.ground - a.span, key=point_key)
    rest_b = sorted(b.ground - b.span, key=point_key)
    sigma = Chart(a.ground, tau.pairs + tuple(zip(rest_a, rest_b)))
    if not (sigma.is_permutation and sigma.inverse() * a * sigma == b):
        raise AssertionError(f"constructed permutation {sigma} failed verification")
    return sigma


def conjugate_in_ideal(a: Chart, b: Chart, r: int) -> bool:
    """Conjugacy inside the ideal J_r of charts with rank < r."""
    _same_ground(a, b)
    if r < 1:
        raise ValueError("r must be a positive integer")
    for c in (a, b):
        if c.rank >= r:
            raise NotInIdeal(f"{c} has rank {c.rank} >= {r}")
    return cycle_chain_type(a) == cycle_chain_type(b) and len(a.span) < r


# -- exhaustive enumeration -----------------------------------------------

def partial_injections(ground: Iterable[Point]) -> list[Chart]:
    """Every chart on ``ground``, ordered by rank then lexicographically."""
    pts = sorted(frozenset(ground), key=point_key)
    out = []
    for k in range(len(pts) + 1):
        for dom in itertools.combinations(pts, k):
            for img in itertools.permutations(pts, k):
                out.append(Chart(frozenset(pts), tuple(zip(dom, img))))
    return out


def permutations_of(ground: Iterable[Point]) -> list[Chart]:
    pts = sorted(frozenset(ground), key=point_key)
    return [Chart(frozenset(pts), tuple(zip(pts, img))) for img in itertools.permutations(pts)]


class _Encoded:
    """All charts on a ground set as index arrays, for the compiled scans.

    Point i of the sorted ground set is index i; index n means "undefined".
    """

    def __init__(self, ground: frozenset):
        self.points = sorted(ground, key=point_key)
        self.pos = {p: i for i, p in enumerate(self.points)}
        self.charts = partial_injections(ground)
        self.taus = np.stack([self.encode(c) for c in self.charts])
        self.tau_invs = np.stack([self.encode(c.inverse()) for c in self.charts])

    def encode(self, a: Chart) -> np.ndarray:
        n = len(self.points)
        arr = np.full(n + 1, n, dtype=np.intp)
        for x, y in a.pairs:
            arr[self.pos[x]] = self.pos[y]
        return arr


@lru_cache(maxsize=8)
def _encoded(ground: frozenset) -> _Encoded:
    return _Encoded(ground)


def brute_force_conjugators(a: Chart, b: Chart) -> frozenset[Chart]:
    """Every tau in I(ground) with tau^-1 a tau = b and tau b tau^-1 = a.

    I(ground) is a monoid, so S^1 adds nothing; its identity is the total identity chart.
    """
    _same_ground(a, b)
    if len(a.ground) > BRUTE_FORCE_CAP:
        raise GroundTooLarge(f"exhaustive search is capped at {BRUTE_FORCE_CAP} points")
    enc = _encoded(a.ground)
    hits = _kernels.chart_conjugators(enc.encode(a), enc.encode(b), enc.taus, enc.tau_invs)
    return frozenset(enc.charts[i] for i in hits)
