"""Finite semigroups given by multiplication table.

Elements are opaque string names; all arithmetic is done on indices into
``CayleyTable.elements``. A table is loaded, then validated as an inverse
semigroup before any conjugacy scan runs on it.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

DEFAULT_MAX_TABLE = 300
ASSOC_REPORT_LIMIT = 100


class TableError(ValueError):
    """Base class for rejected tables."""


class MalformedTable(TableError):
    pass


class TableTooLarge(TableError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"table has {size} elements; cap is {cap} (set INVCONJ_MAX_TABLE to raise it)")
        self.size, self.cap = size, cap


class NonAssociative(TableError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"(x{i} x{j}) x{k} != x{i} (x{j} x{k})")
        self.triple = (i, j, k)


class NotRegular(TableError):
    def __init__(self, i: int):
        super().__init__(f"element {i} has no y with x y x = x")
        self.element = i


class IdempotentsDontCommute(TableError):
    def __init__(self, e: int, f: int):
        super().__init__(f"idempotents {e} and {f} do not commute")
        self.pair = (e, f)


class NotMonoid(TableError):
    pass


def max_table_size() -> int:
    return int(os.environ.get("INVCONJ_MAX_TABLE", DEFAULT_MAX_TABLE))


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """A finite magma on named elements; ``table[i, j]`` is the index of i*j."""

    elements: tuple[str, ...]
    table: np.ndarray
    has_adjoined_identity: bool = False

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        n = len(elements)
        if n == 0:
            raise MalformedTable("empty semigroups are not accepted")
        if len(set(elements)) != n:
            raise MalformedTable("element names must be distinct")
        cap = max_table_size()
        if n > cap:
            raise TableTooLarge(n, cap)
        arr = np.ascontiguousarray(np.asarray(self.table, dtype=np.intp))
        if arr.shape != (n, n):
            raise MalformedTable(f"table shape {arr.shape} does not match {n} elements")
        if arr.min() < 0 or arr.max() >= n:
            raise MalformedTable("table entries out of range")
        arr.setflags(write=False)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "table", arr)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, elements: Sequence[str], rows: Sequence[Sequence[str]]) -> "CayleyTable":
        index = {str(e): i for i, e in enumerate(elements)}
        try:
            matrix = [[index[str(x)] for x in row] for row in rows]
        except KeyError as exc:
            raise MalformedTable(f"unknown element {exc.args[0]!r} in table") from None
        if len(matrix) != len(elements) or any(len(r) != len(elements) for r in matrix):
            raise MalformedTable("table must be square over the declared elements")
        return cls(tuple(elements), np.array(matrix, dtype=np.intp).reshape(len(elements), len(elements)))

    @classmethod
    def from_function(cls, elements: Sequence, mul) -> "CayleyTable":
        """Tabulate ``mul`` over ``elements``; names are ``str(element)``."""
        elements = list(elements)
        index = {e: i for i, e in enumerate(elements)}
        matrix = [[index[mul(x, y)] for y in elements] for x in elements]
        return cls(tuple(str(e) for e in elements), np.array(matrix, dtype=np.intp))

    @classmethod
    def from_json(cls, obj: dict | str) -> "CayleyTable":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or "elements" not in obj or "table" not in obj:
            raise MalformedTable('expected {"elements": [...], "table": [[...]]}')
        return cls.from_rows(obj["elements"], obj["table"])

    def to_json(self) -> dict:
        names = self.elements
        return {"elements": list(names), "table": [[names[x] for x in row] for row in self.table.tolist()]}

    # -- basic data --------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return (self.elements == other.elements
                and self.has_adjoined_identity == other.has_adjoined_identity
                and np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash((self.elements, self.table.tobytes()))

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self._index[str(name)]
        except KeyError:
            raise KeyError(f"unknown element {name!r}") from None

    @cached_property
    def _index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def product(self, *xs: int) -> int:
        acc = xs[0]
        for x in xs[1:]:
            acc = int(self.table[acc, x])
        return acc

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.table[i, i] == i)

    @cached_property
    def identity(self) -> int | None:
        T = self.table
        r = np.arange(self.n)
        for e in self.idempotents:
            if np.array_equal(T[e], r) and np.array_equal(T[:, e], r):
                return e
        return None

    @cached_property
    def report(self) -> "ValidationReport":
        return validate_inverse(self)

    @cached_property
    def inverse(self) -> np.ndarray:
        """``inverse[x]`` is the unique y with x y x = x and y x y = y."""
        require_inverse(self)
        T = self.table
        inv = np.empty(self.n, dtype=np.intp)
        for x in range(self.n):
            ys = np.nonzero((T[T[x], x] == x) & (T[T[:, x], np.arange(self.n)] == np.arange(self.n)))[0]
            # uniqueness follows from regularity plus commuting idempotents
            assert len(ys) == 1, (x, ys)
            inv[x] = ys[0]
        inv.setflags(write=False)
        return inv

    @cached_property
    def with_identity(self) -> "CayleyTable":
        return adjoin_identity(self)


@dataclass
class ValidationReport:
    non_associative: list[tuple[int, int, int]] = field(default_factory=list)
    not_regular: list[int] = field(default_factory=list)
    non_commuting: list[tuple[int, int]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not (self.non_associative or self.not_regular or self.non_commuting)

    def errors(self) -> list[TableError]:
        return ([NonAssociative(*t) for t in self.non_associative]
                + [NotRegular(i) for i in self.not_regular]
                + [IdempotentsDontCommute(*p) for p in self.non_commuting])

    def raise_first(self) -> None:
        errs = self.errors()
        if errs:
            raise errs[0]

    def to_dict(self, names: Sequence[str] | None = None) -> dict:
        nm = (lambda i: names[i]) if names is not None else (lambda i: i)
        return {
            "valid": self.valid,
            "non_associative": [[nm(i) for i in t] for t in self.non_associative],
            "not_regular": [nm(i) for i in self.not_regular],
            "idempotents_dont_commute": [[nm(i) for i in p] for p in self.non_commuting],
        }


def validate_inverse(t: CayleyTable) -> ValidationReport:
    """Check associativity, regularity and commuting idempotents.

    At most ``ASSOC_REPORT_LIMIT`` non-associative triples are listed.
    """
    T = t.table
    n = t.n
    rep = ValidationReport()
    rep.non_associative = [tuple(map(int, v)) for v in _kernels.assoc_violations(T, ASSOC_REPORT_LIMIT)]
    for x in range(n):
        if not (T[T[x], x] == x).any():
            rep.not_regular.append(x)
    idem = [i for i in range(n) if T[i, i] == i]
    for p, e in enumerate(idem):
        for f in idem[p + 1:]:
            if T[e, f] != T[f, e]:
                rep.non_commuting.append((e, f))
    return rep


def require_inverse(t: CayleyTable) -> None:
    t.report.raise_first()


def load_table(source: str | os.PathLike | dict) -> CayleyTable:
    """Read a table from a JSON file (or parsed JSON) and validate it eagerly."""
    if isinstance(source, dict):
        t = CayleyTable.from_json(source)
    else:
        try:
            obj = json.loads(Path(source).read_text())
        except json.JSONDecodeError as exc:
            raise MalformedTable(f"invalid JSON: {exc}") from None
        t = CayleyTable.from_json(obj)
    require_inverse(t)
    return t


def adjoin_identity(t: CayleyTable) -> CayleyTable:
    """S^1: ``t`` itself if it has an identity, else ``t`` plus a new identity."""
    if t.identity is not None:
        return t
    n = t.n
    name = "1"
    while name in t.elements:
        name += "'"
    T = np.empty((n + 1, n + 1), dtype=np.intp)
    T[:n, :n] = t.table
    T[n, :] = np.arange(n + 1)
    T[:, n] = np.arange(n + 1)
    return CayleyTable(t.elements + (name,), T, has_adjoined_identity=True)


def unique_inverse(t: CayleyTable, x: int) -> int:
    return int(t.inverse[x])


def s1_data(t: CayleyTable) -> tuple[np.ndarray, np.ndarray, int]:
    """(table of S^1, inverses in S^1, |S|). Indices below |S| are shared with ``t``."""
    one = t.with_identity
    inv = np.empty(one.n, dtype=np.intp)
    inv[: t.n] = t.inverse
    if one.n > t.n:
        inv[t.n] = t.n
    return one.table, inv, t.n


def natural_leq(t: CayleyTable, a: int, b: int) -> bool:
    """a <= b iff a = e b for some idempotent e."""
    T = t.table
    return any(T[e, b] == a for e in t.idempotents)


def natural_order_matrix(t: CayleyTable) -> np.ndarray:
    """``M[a, b]`` iff a <= b, for all elements of ``t``."""
    T = t.table
    M = np.zeros((t.n, t.n), dtype=bool)
    cols = np.arange(t.n)
    for e in t.idempotents:
        M[T[e], cols] = True
    return M


def partition_by(keys: Iterable) -> tuple[tuple[int, ...], ...]:
    """Group indices with equal keys; classes ordered by least index."""
    groups: dict = {}
    for i, k in enumerate(keys):
        groups.setdefault(k, []).append(i)
    return tuple(sorted(tuple(g) for g in groups.values()))


def partition_from_relation(R: np.ndarray) -> tuple[tuple[int, ...], ...]:
    """Classes of an equivalence given as a boolean matrix."""
    seen = np.zeros(R.shape[0], dtype=bool)
    out = []
    for i in range(R.shape[0]):
        if not seen[i]:
            cls = tuple(int(j) for j in np.nonzero(R[i])[0])
            seen[list(cls)] = True
            out.append(cls)
    return tuple(out)


def relation_from_partition(classes, n: int) -> np.ndarray:
    R = np.zeros((n, n), dtype=bool)
    for c in classes:
        R[np.ix_(c, c)] = True
    return R


def is_equivalence(R: np.ndarray) -> bool:
    if not R.diagonal().all() or not (R == R.T).all():
        return False
    Ri = R.astype(np.int64)
    return not ((Ri @ Ri > 0) & ~R).any()


@dataclass(frozen=True)
class GreenData:
    L: tuple[tuple[int, ...], ...]
    R: tuple[tuple[int, ...], ...]
    H: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    J: tuple[tuple[int, ...], ...]

    def relation(self, name: str, n: int) -> np.ndarray:
        return relation_from_partition(getattr(self, name), n)

    def class_of(self, name: str, x: int) -> tuple[int, ...]:
        for c in getattr(self, name):
            if x in c:
                return c
        raise KeyError(x)


def green_relations(t: CayleyTable) -> GreenData:
    """Green's relations from principal ideals S^1 a, a S^1 and S^1 a S^1."""
    T1 = t.with_identity.table
    n = t.n
    left = [frozenset(T1[:, a].tolist()) for a in range(n)]
    right = [frozenset(T1[a, :].tolist()) for a in range(n)]
    two = [frozenset(np.unique(T1[T1[:, a], :]).tolist()) for a in range(n)]
    L = partition_by(left)
    R = partition_by(right)
    H = partition_by(zip(left, right))
    J = partition_by(two)
    # D is the join of L and R
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cls in L + R:
        for x in cls[1:]:
            parent[find(x)] = find(cls[0])
    D = partition_by(find(x) for x in range(n))
    return GreenData(L=L, R=R, H=H, D=D, J=J)
