"""Finite McAlister triples (G, X, Y) and their P-semigroups.

The triple file format is JSON::

    {"group": {"elements": [...], "table": [[...]]},
     "poset": {"elements": [...], "leq": [[bool]]},
     "ideal": [...],
     "action": {"g": {"A": "gA"}}}

``leq[i][j]`` means ``poset.elements[i] <= poset.elements[j]``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .conjugacy import iconj_matrix, is_e_unitary
from .table import CayleyTable, TableError, require_inverse


class TripleError(ValueError):
    pass


class MalformedTriple(TripleError):
    pass


class NotAGroup(TripleError):
    pass


class BadPoset(TripleError):
    pass


class BadAction(TripleError):
    pass


class MeetMissing(TripleError):
    def __init__(self, a: str, b: str):
        super().__init__(f"{a} and {b} have no greatest lower bound in the ideal")
        self.pair = (a, b)


class NotOrderIdeal(TripleError):
    def __init__(self, a: str, b: str):
        super().__init__(f"{b} <= {a} with {a} in the ideal but {b} outside it")
        self.pair = (a, b)


class NotOrderAutomorphism(TripleError):
    def __init__(self, g: str, a: str, b: str):
        super().__init__(f"{g} does not preserve the order between {a} and {b}")
        self.witness = (g, a, b)


class CoverageFailure(TripleError):
    def __init__(self, what: str, detail: str):
        super().__init__(detail)
        self.what = what


class ClosureFailure(TripleError):
    pass


class PElement(NamedTuple):
    A: str
    g: str

    def __str__(self) -> str:
        return f"({self.A},{self.g})"


def parse_pelement(text: str) -> PElement:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")) or s.count(",") != 1:
        raise MalformedTriple(f"expected '(A,g)', got {text!r}")
    a, g = (p.strip() for p in s[1:-1].split(","))
    return PElement(a, g)


@dataclass(frozen=True, eq=False)
class McAlisterTriple:
    group: CayleyTable
    points: tuple[str, ...]
    leq: np.ndarray
    ideal: frozenset[str]
    action: dict[str, dict[str, str]] = field(repr=False)

    @classmethod
    def from_json(cls, obj: dict | str) -> "McAlisterTriple":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            group = CayleyTable.from_json(obj["group"])
            points = tuple(str(x) for x in obj["poset"]["elements"])
            leq = np.array(obj["poset"]["leq"], dtype=bool)
            ideal = frozenset(str(x) for x in obj["ideal"])
            action = {str(g): {str(a): str(b) for a, b in m.items()} for g, m in obj["action"].items()}
        except (KeyError, TypeError) as exc:
            raise MalformedTriple(f"triple JSON missing or malformed field: {exc}") from None
        if leq.shape != (len(points), len(points)):
            raise MalformedTriple("poset.leq must be square over poset.elements")
        if len(set(points)) != len(points):
            raise MalformedTriple("poset elements must be distinct")
        return cls(group, points, leq, ideal, action)

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "poset": {"elements": list(self.points), "leq": self.leq.tolist()},
            "ideal": sorted(self.ideal, key=self.points.index),
            "action": self.action,
        }

    @cached_property
    def _pidx(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.points)}

    def le(self, a: str, b: str) -> bool:
        return bool(self.leq[self._pidx[a], self._pidx[b]])

    def act(self, g: str, a: str) -> str:
        return self.action[g][a]

    def ginv(self, g: str) -> str:
        G = self.group
        return G.elements[int(G.inverse[G.index(g)])]

    def gmul(self, g: str, h: str) -> str:
        G = self.group
        return G.elements[G.mul(G.index(g), G.index(h))]

    @property
    def ideal_order(self) -> tuple[str, ...]:
        return tuple(p for p in self.points if p in self.ideal)

    @cached_property
    def meets(self) -> dict[tuple[str, str], str]:
        """Greatest lower bounds A meet X for A in the ideal and X anywhere in the poset.

        Products need A meet gB where only A is known to lie in the ideal.
        Pairs without a greatest lower bound are omitted.
        """
        out = {}
        for a in self.ideal_order:
            for b in self.points:
                m = self._glb(a, b)
                if m is not None:
                    out[a, b] = m
        return out

    def _glb(self, a: str, b: str) -> str | None:
        lower = [c for c in self.points if self.le(c, a) and self.le(c, b)]
        for c in lower:
            if all(self.le(d, c) for d in lower):
                return c
        return None

    def meet(self, a: str, b: str) -> str:
        m = self.meets.get((a, b))
        if m is None:
            m = self.meets.get((b, a))
        if m is None:
            raise MeetMissing(a, b)
        return m


@dataclass
class TripleReport:
    violations: list[TripleError]

    @property
    def valid(self) -> bool:
        return not self.violations

    def raise_first(self) -> None:
        if self.violations:
            raise self.violations[0]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [{"error": type(e).__name__, "message": str(e)} for e in self.violations],
        }


def _check_group(G: CayleyTable) -> list[TripleError]:
    rep = G.report
    if not rep.valid:
        return [NotAGroup(f"group table is not an inverse semigroup: {rep.errors()[0]}")]
    if G.identity is None or len(G.idempotents) != 1:
        return [NotAGroup("group table must have a single idempotent that is an identity")]
    return []


def validate_triple(t: McAlisterTriple) -> TripleReport:
    """Check every condition exhaustively, collecting violations."""
    bad: list[TripleError] = _check_group(t.group)
    if bad:
        return TripleReport(bad)
    P, L = t.points, t.leq
    n = len(P)
    if not L.diagonal().all():
        bad.append(BadPoset("order is not reflexive"))
    if (L & L.T & ~np.eye(n, dtype=bool)).any():
        bad.append(BadPoset("order is not antisymmetric"))
    if ((L.astype(np.int64) @ L.astype(np.int64) > 0) & ~L).any():
        bad.append(BadPoset("order is not transitive"))
    if not t.ideal or not t.ideal <= set(P):
        bad.append(MalformedTriple("ideal must be a nonempty subset of the poset"))
    if bad:
        return TripleReport(bad)

    G = t.group
    gs = G.elements
    for g in gs:
        m = t.action.get(g)
        if m is None or set(m) != set(P) or not set(m.values()) <= set(P):
            bad.append(BadAction(f"action of {g} must map every poset element into the poset"))
    if bad:
        return TripleReport(bad)
    one = gs[G.identity]
    for a in P:
        if t.act(one, a) != a:
            bad.append(BadAction(f"identity moves {a}"))
        for g in gs:
            for h in gs:
                if t.act(g, t.act(h, a)) != t.act(t.gmul(g, h), a):
                    bad.append(BadAction(f"{g}({h}{a}) != ({g}{h}){a}"))
    for g in gs:
        for a in P:
            for b in P:
                if t.le(a, b) != t.le(t.act(g, a), t.act(g, b)):
                    bad.append(NotOrderAutomorphism(g, a, b))

    Y = t.ideal_order
    for i, a in enumerate(Y):
        for b in Y[i:]:
            m = t._glb(a, b)
            if m is None or m not in t.ideal:
                bad.append(MeetMissing(a, b))
    for a in Y:
        for b in P:
            if t.le(b, a) and b not in t.ideal:
                bad.append(NotOrderIdeal(a, b))

    covered = {t.act(g, a) for g in gs for a in Y}
    for x in P:
        if x not in covered:
            bad.append(CoverageFailure(x, f"{x} is not in G Y"))
    for g in gs:
        if not any(t.act(g, a) in t.ideal for a in Y):
            bad.append(CoverageFailure(g, f"{g} Y does not meet Y"))
    return TripleReport(bad)


def require_valid(t: McAlisterTriple) -> None:
    validate_triple(t).raise_first()


def load_triple(source: str | os.PathLike | dict) -> McAlisterTriple:
    if isinstance(source, dict):
        return McAlisterTriple.from_json(source)
    with open(source, encoding="utf-8") as fh:
        return McAlisterTriple.from_json(json.load(fh))


def p_elements(t: McAlisterTriple) -> list[PElement]:
    """(A, g) with A in Y and g^-1 A in Y, ordered by group element then poset position."""
    require_valid(t)
    return [PElement(a, g) for g in t.group.elements for a in t.ideal_order
            if t.act(t.ginv(g), a) in t.ideal]


def p_mul(t: McAlisterTriple, u: PElement, v: PElement) -> PElement:
    """(A,g)(B,h) = (A meet gB, gh)."""
    return PElement(t.meet(u.A, t.act(u.g, v.A)), t.gmul(u.g, v.g))


def p_inverse(t: McAlisterTriple, u: PElement) -> PElement:
    gi = t.ginv(u.g)
    return PElement(t.act(gi, u.A), gi)


@dataclass(frozen=True)
class PSemigroup:
    elements: tuple[PElement, ...]
    table: np.ndarray

    def index(self, u: PElement) -> int:
        return self.elements.index(u)


def build_p_semigroup(t: McAlisterTriple) -> PSemigroup:
    elems = p_elements(t)
    index = {u: i for i, u in enumerate(elems)}
    n = len(elems)
    T = np.empty((n, n), dtype=np.intp)
    for i, u in enumerate(elems):
        for j, v in enumerate(elems):
            w = p_mul(t, u, v)
            if w.A not in t.ideal or t.act(t.ginv(w.g), w.A) not in t.ideal:
                raise ClosureFailure(f"{u}{v} = {w} is outside P")
            T[i, j] = index[w]
    return PSemigroup(tuple(elems), T)


def export_table(t: McAlisterTriple) -> CayleyTable:
    """The P-semigroup as a validated, E-unitary Cayley table named by '(A,g)'."""
    ps = build_p_semigroup(t)
    ct = CayleyTable(tuple(str(u) for u in ps.elements), ps.table)
    require_inverse(ct)
    if not is_e_unitary(ct):
        raise TableError("exported P-semigroup is not E-unitary")
    return ct


@dataclass(frozen=True)
class PConjugacy:
    conjugate: bool
    witness: PElement | None
    via_identity: bool = False

    def __bool__(self) -> bool:
        return self.conjugate

    def to_dict(self) -> dict:
        w = "1" if self.via_identity else (str(self.witness) if self.witness else None)
        return {"conjugate": self.conjugate, "witness": w}


def _satisfies(t: McAlisterTriple, u: PElement, v: PElement, c: PElement) -> bool:
    (A, g), (B, h), (C, k) = u, v, c
    if t.act(k, B) != A:
        return False
    if t.meet(t.meet(C, t.act(g, C)), A) != A:
        return False
    return g == t.gmul(t.gmul(k, h), t.ginv(k))


def p_conjugate(t: McAlisterTriple, u: PElement, v: PElement) -> PConjugacy:
    """Decide u ~i v by the (C,k) criterion, returning the least witness.

    The criterion quantifies over P itself; conjugation is over P with an
    identity adjoined, so when P has no identity the pair u = v is also
    accepted through that adjoined identity.
    """
    elems = p_elements(t)
    members = set(elems)
    for x in (u, v):
        if x not in members:
            raise MalformedTriple(f"{x} is not an element of P")
    for c in elems:
        if _satisfies(t, u, v, c):
            return PConjugacy(True, c)
    if u == v:
        return PConjugacy(True, None, via_identity=True)
    return PConjugacy(False, None)


def p_conjugacy_agrees(t: McAlisterTriple) -> list[tuple[PElement, PElement]]:
    """Pairs where the criterion and brute force on the exported table disagree."""
    ct = export_table(t)
    M = iconj_matrix(ct)
    elems = p_elements(t)
    return [(u, v) for i, u in enumerate(elems) for j, v in enumerate(elems)
            if bool(p_conjugate(t, u, v)) != bool(M[i, j])]
