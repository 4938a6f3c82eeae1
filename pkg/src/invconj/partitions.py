"""Integer partitions and the conjugacy classes of a finite symmetric inverse monoid."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .charts import BasicComponent, Chart, join


@dataclass(frozen=True)
class PartitionSignature:
    """A partition of n as (multiplicity, part) pairs with strictly increasing parts."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return sum(i * k for i, k in self.pairs)

    def parts(self) -> tuple[int, ...]:
        return tuple(k for i, k in self.pairs for _ in range(i))

    @classmethod
    def from_parts(cls, parts) -> "PartitionSignature":
        counts: dict[int, int] = {}
        for k in parts:
            counts[k] = counts.get(k, 0) + 1
        return cls(tuple((counts[k], k) for k in sorted(counts)))

    def __str__(self) -> str:
        return "<" + ", ".join(f"({i},{k})" for i, k in self.pairs) + ">"


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal number recurrence; p(0) = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return p[n]


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def enumerate_signatures(n: int) -> list[PartitionSignature]:
    """All signatures of n; the empty signature stands for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [PartitionSignature.from_parts(p) for p in _partitions(n, n)]


def class_count(n: int) -> int:
    """Number of conjugacy classes of I(X) for |X| = n: sum of p(r) p(n - r)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(partition_count(r) * partition_count(n - r) for r in range(n + 1))


def representative(cycle_sig: PartitionSignature, chain_sig: PartitionSignature, n: int) -> Chart:
    """A chart on {1..n} with the given cyclic and chain signatures.

    Each chain-side part l >= 2 becomes a chain on l points; parts equal to 1 are
    points left outside the span. Points are assigned in ascending order:
    cycles by increasing length, then chains.
    """
    if cycle_sig.n + chain_sig.n != n:
        raise ValueError("signatures must split n")
    nxt = iter(range(1, n + 1))
    comps = []
    for i, k in cycle_sig.pairs:
        for _ in range(i):
            comps.append(BasicComponent("cycle", tuple(next(nxt) for _ in range(k))))
    for j, l in chain_sig.pairs:
        if l < 2:
            continue
        for _ in range(j):
            comps.append(BasicComponent("chain", tuple(next(nxt) for _ in range(l))))
    return join(comps, range(1, n + 1))


def enumerate_class_representatives(n: int) -> list[Chart]:
    """One chart per conjugacy class of I({1..n}), grouped by cyclic span size r."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [
        representative(cs, hs, n)
        for r in range(n + 1)
        for cs in enumerate_signatures(r)
        for hs in enumerate_signatures(n - r)
    ]
