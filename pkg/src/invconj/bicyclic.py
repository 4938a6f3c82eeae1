"""The bicyclic monoid as pairs of nonnegative integers."""

from __future__ import annotations

from typing import NamedTuple


class NotConjugate(ValueError):
    pass


class BicyclicPair(NamedTuple):
    a: int
    b: int

    def __mul__(self, other: "BicyclicPair") -> "BicyclicPair":
        return b_mul(self, other)

    def inverse(self) -> "BicyclicPair":
        return BicyclicPair(self.b, self.a)

    @property
    def is_idempotent(self) -> bool:
        return self.a == self.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


IDENTITY = BicyclicPair(0, 0)


def pair(a: int, b: int) -> BicyclicPair:
    if a < 0 or b < 0:
        raise ValueError("bicyclic coordinates are nonnegative")
    return BicyclicPair(int(a), int(b))


def b_mul(p: BicyclicPair, q: BicyclicPair) -> BicyclicPair:
    m = max(p.b, q.a)
    return BicyclicPair(p.a - p.b + m, q.b - q.a + m)


def _conj_by(g: BicyclicPair, p: BicyclicPair) -> BicyclicPair:
    """g^-1 p g"""
    return g.inverse() * p * g


def b_conjugate(p: BicyclicPair, q: BicyclicPair) -> bool:
    """p ~i q, which in B is equality of differences (the minimal group congruence)."""
    return p.a - p.b == q.a - q.b


def b_conjugator(p: BicyclicPair, q: BicyclicPair) -> BicyclicPair:
    """The witness g = (min(q.a, q.b), min(p.a, p.b)).

    It satisfies p = g^-1 q g and q = g p g^-1, both checked before returning.
    """
    if not b_conjugate(p, q):
        raise NotConjugate(f"{p} and {q} have different differences")
    g = BicyclicPair(min(q.a, q.b), min(p.a, p.b))
    if not (_conj_by(g, q) == p and g * p * g.inverse() == q):
        raise AssertionError(f"witness {g} failed for {p}, {q}")
    return g


def b_natural_leq(p: BicyclicPair, q: BicyclicPair) -> bool:
    """p <= q in the natural partial order.

    The closed form (equal differences and p.a >= q.a) is checked against the
    definition: some idempotent (e,e) has (e,e) q = p.
    """
    closed = p.a - p.b == q.a - q.b and p.a >= q.a
    search = any(BicyclicPair(e, e) * q == p for e in range(p.a + q.a + 2))
    if closed != search:
        raise AssertionError(f"natural order forms disagree on {p}, {q}")
    return closed


def b_oracle_conjugate(p: BicyclicPair, q: BicyclicPair, bound: int | None = None) -> bool:
    """Search g = (e,f) with e, f <= bound for g^-1 p g = q and g q g^-1 = p."""
    if bound is None:
        bound = 2 * max(p.a, p.b, q.a, q.b) + 2
    for e in range(bound + 1):
        for f in range(bound + 1):
            g = BicyclicPair(e, f)
            if _conj_by(g, p) == q and g * q * g.inverse() == p:
                return True
    return False


def b_stability_witness() -> dict:
    """(1,1) ~i (2,2) while (2,2) < (1,1): B is not stable."""
    small, big = BicyclicPair(2, 2), BicyclicPair(1, 1)
    g = b_conjugator(big, small)
    return {
        "pair": [list(big), list(small)],
        "conjugate": b_conjugate(big, small) and b_oracle_conjugate(big, small),
        "conjugator": list(g),
        "conjugator_check": {
            "g^-1 (2,2) g": list(_conj_by(g, small)),
            "g (1,1) g^-1": list(g * big * g.inverse()),
        },
        "less": b_natural_leq(small, big) and small != big,
        "order_check": {"(2,2)(1,1)": list(small * big)},
        "distinct": small != big,
        "stable": False,
    }
