"""i-conjugacy on finite inverse semigroups, and checks of its structure theory.

Every scan lets the conjugator range over S^1: an identity is adjoined only
when the table has none, so indices ``0..n-1`` are S and index ``n`` (if
present) is the adjoined 1.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .table import (
    CayleyTable,
    NotMonoid,
    TableError,
    green_relations,
    is_equivalence,
    natural_order_matrix,
    partition_from_relation,
    require_inverse,
    s1_data,
)


class EquivalenceViolated(AssertionError):
    """A theorem-backed equivalence failed on a concrete table (an implementation bug)."""

    def __init__(self, theorem: str, witness=None):
        super().__init__(f"{theorem} violated; witness {witness!r}")
        self.theorem, self.witness = theorem, witness


class NotClifford(TableError):
    pass


@dataclass(frozen=True)
class Check:
    """Outcome of an exhaustive check; falsy when a counterexample was found."""

    name: str
    ok: bool
    counterexample: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ConjugatorSet:
    """The g in S^1 with g^-1 a g = b and g b g^-1 = a (indices into S^1)."""

    a: int
    b: int
    witnesses: frozenset[int]

    def __bool__(self) -> bool:
        return bool(self.witnesses)


# -- the relation ---------------------------------------------------------

@lru_cache(maxsize=64)
def iconj_matrix(t: CayleyTable) -> np.ndarray:
    require_inverse(t)
    T1, inv1, n = s1_data(t)
    M = _kernels.conjugacy_matrix(T1, inv1, n)
    M.setflags(write=False)
    return M


def iconj(t: CayleyTable, a: int, b: int) -> bool:
    return bool(iconj_matrix(t)[a, b])


def iconj_classes(t: CayleyTable) -> tuple[tuple[int, ...], ...]:
    M = iconj_matrix(t)
    if not is_equivalence(M):
        raise EquivalenceViolated("iconj-equivalence", "~i is not an equivalence")
    return partition_from_relation(M)


def conjugator_set(t: CayleyTable, a: int, b: int) -> ConjugatorSet:
    require_inverse(t)
    T1, inv1, _ = s1_data(t)
    return ConjugatorSet(a, b, frozenset(int(g) for g in _kernels.conjugators(T1, inv1, a, b)))


def n_conjugacy_classes(t: CayleyTable) -> tuple[tuple[int, ...], ...]:
    """Classes of a ~n b: exists g, h in S^1 with ag = gb, bh = ha, hag = b, gbh = a."""
    require_inverse(t)
    T1, _, n = s1_data(t)
    M = _kernels.n_conjugacy_matrix(T1, n)
    if not is_equivalence(M):
        raise EquivalenceViolated("nconj-equivalence", "~n is not an equivalence")
    return partition_from_relation(M)


def units(t: CayleyTable) -> tuple[int, ...]:
    one = t.identity
    if one is None:
        return ()
    inv = t.inverse
    return tuple(g for g in range(t.n) if t.table[g, inv[g]] == one and t.table[inv[g], g] == one)


def unit_conjugacy_matrix(t: CayleyTable) -> np.ndarray:
    """a ~u b: some unit g has g^-1 a g = b and g b g^-1 = a."""
    if t.identity is None:
        raise NotMonoid("unit conjugacy needs an identity element")
    T, inv, n = t.table, t.inverse, t.n
    M = np.zeros((n, n), dtype=bool)
    a = np.arange(n)
    for g in units(t):
        b = T[T[inv[g], a], g]
        hit = T[T[g, b], inv[g]] == a
        M[a[hit], b[hit]] = True
    return M


def is_e_unitary(t: CayleyTable) -> bool:
    """For idempotent e and any a: ea idempotent implies a idempotent."""
    require_inverse(t)
    idem = np.zeros(t.n, dtype=bool)
    idem[list(t.idempotents)] = True
    for e in t.idempotents:
        if (idem[t.table[e]] & ~idem).any():
            return False
    return True


# -- theorem checks -------------------------------------------------------

def check_sapir_equivalence(t: CayleyTable) -> Check:
    """Condition sets (a)-(e) agree for every (a, b, g), and each gives (i)-(viii)."""
    require_inverse(t)
    T, inv, n = s1_data(t)
    A = np.arange(n)
    col = A[:, None]
    row = A[None, :]
    for g in range(T.shape[0]):
        gi = inv[g]
        gg, gig = T[g, gi], T[gi, g]
        c1 = T[T[gi, A], g][:, None] == row             # g^-1 a g = b
        c2 = T[T[g, A], gi][None, :] == col             # g b g^-1 = a
        c3 = T[A, g][:, None] == T[g, A][None, :]       # a g = g b
        c4 = T[A, gi][None, :] == T[gi, A][:, None]     # b g^-1 = g^-1 a
        c5 = np.broadcast_to((T[A, gg] == A)[:, None], (n, n))   # a gg^-1 = a
        c6 = np.broadcast_to((T[gg, A] == A)[:, None], (n, n))   # gg^-1 a = a
        c7 = np.broadcast_to((T[A, gig] == A)[None, :], (n, n))  # b g^-1 g = b
        c8 = np.broadcast_to((T[gig, A] == A)[None, :], (n, n))  # g^-1 g b = b
        sets = [c1 & c2, c1 & c5 & c6, c3 & c5 & c8, c2 & c7 & c8, c4 & c6 & c7]
        every = c1 & c2 & c3 & c4 & c5 & c6 & c7 & c8
        for s in sets[1:]:
            bad = s != sets[0]
            if bad.any():
                a, b = map(int, np.argwhere(bad)[0])
                return Check("condition-sets-agree", False, (a, b, g))
        bad = sets[0] & ~every
        if bad.any():
            a, b = map(int, np.argwhere(bad)[0])
            return Check("condition-sets-agree", False, (a, b, g))
    return Check("condition-sets-agree", True)


def _witness_matrix(t: CayleyTable) -> dict[tuple[int, int], np.ndarray]:
    """For each conjugate pair, the boolean witness vector over S^1."""
    T, inv, n = s1_data(t)
    m = T.shape[0]
    out: dict[tuple[int, int], np.ndarray] = {}
    A = np.arange(n)
    for g in range(m):
        gi = inv[g]
        b = T[T[gi, A], g]
        inside = b < n
        hit = np.zeros(n, dtype=bool)
        hit[inside] = T[T[g, b[inside]], gi] == A[inside]
        for a in np.nonzero(hit)[0]:
            key = (int(a), int(b[a]))
            if key not in out:
                out[key] = np.zeros(m, dtype=bool)
            out[key][g] = True
    return out


def check_upward_closure(t: CayleyTable) -> Check:
    """Every conjugator set is upward closed in (S^1, <=)."""
    require_inverse(t)
    leq = natural_order_matrix(t.with_identity)
    for (a, b), W in _witness_matrix(t).items():
        escaped = leq[W].any(axis=0) & ~W
        if escaped.any():
            g = int(np.nonzero(W & leq[:, int(np.argmax(escaped))])[0][0])
            return Check("conjugators-upward-closed", False, (a, b, g, int(np.argmax(escaped))))
    return Check("conjugators-upward-closed", True)


def check_same_conjugator(t: CayleyTable) -> Check:
    """g in C(a,b) implies g in C(a^-1 a, b^-1 b) and g in C(a a^-1, b b^-1)."""
    require_inverse(t)
    T, inv = t.table, t.inverse
    W = _witness_matrix(t)
    for (a, b), ws in W.items():
        for other in ((T[inv[a], a], T[inv[b], b]), (T[a, inv[a]], T[b, inv[b]])):
            key = (int(other[0]), int(other[1]))
            if key not in W or (ws & ~W[key]).any():
                return Check("shared-conjugator", False, (a, b))
    return Check("shared-conjugator", True)


def check_inside_d(t: CayleyTable) -> Check:
    """~i is contained in D."""
    D = green_relations(t).relation("D", t.n)
    bad = iconj_matrix(t) & ~D
    if bad.any():
        return Check("iconj-inside-d", False, tuple(map(int, np.argwhere(bad)[0])))
    return Check("iconj-inside-d", True)


def check_range_domain_conjugate(t: CayleyTable) -> Check:
    """x x^-1 ~i x^-1 x for every x."""
    T, inv = t.table, t.inverse
    M = iconj_matrix(t)
    for x in range(t.n):
        if not M[T[x, inv[x]], T[inv[x], x]]:
            return Check("range-domain-conjugate", False, (x,))
    return Check("range-domain-conjugate", True)


def check_stable_meet(t: CayleyTable) -> Check:
    """~i intersected with <= is the identity relation (true for finite tables)."""
    bad = iconj_matrix(t) & natural_order_matrix(t)
    np.fill_diagonal(bad, False)
    if bad.any():
        return Check("conj-meet-order-identity", False, tuple(map(int, np.argwhere(bad)[0])))
    return Check("conj-meet-order-identity", True)


def check_n_equals_i(t: CayleyTable) -> Check:
    ok = n_conjugacy_classes(t) == iconj_classes(t)
    return Check("~n = ~i", ok, None if ok else (n_conjugacy_classes(t), iconj_classes(t)))


def is_clifford(t: CayleyTable) -> bool:
    T, inv = t.table, t.inverse
    A = np.arange(t.n)
    return bool((T[A, inv] == T[inv, A]).all())


def check_clifford_group_conjugacy(t: CayleyTable) -> Check:
    """In a Clifford table, a ~i b iff a H b and a, b are conjugate inside the group H_a."""
    if not is_clifford(t):
        raise NotClifford("table is not a Clifford semigroup")
    T, inv = t.table, t.inverse
    green = green_relations(t)
    M = iconj_matrix(t)
    for H in green.H:
        for a in H:
            for b in H:
                in_group = any(T[T[inv[h], a], h] == b and T[T[h, b], inv[h]] == a for h in H)
                if bool(M[a, b]) != in_group:
                    return Check("clifford-group-conjugacy", False, (a, b))
    H_rel = green.relation("H", t.n)
    if (M & ~H_rel).any():
        return Check("clifford-group-conjugacy", False, tuple(map(int, np.argwhere(M & ~H_rel)[0])))
    return Check("clifford-group-conjugacy", True)


@dataclass(frozen=True)
class Characterization:
    is_clifford: bool
    is_semilattice: bool
    is_h_trivial: bool
    is_commutative: bool
    is_group: bool
    conj_universal: bool
    conj_identity: bool
    conj_meet_order_identity: bool
    n_classes: int

    def to_dict(self) -> dict:
        return asdict(self)


def _subset(A: np.ndarray, B: np.ndarray) -> bool:
    return not (A & ~B).any()


def characterize(t: CayleyTable) -> Characterization:
    """Structural flags plus cross-validation of the ~i characterisation theorems.

    Raises ``EquivalenceViolated`` if any equivalence fails on ``t``.
    """
    require_inverse(t)
    n = t.n
    T, inv = t.table, t.inverse
    M = iconj_matrix(t)
    green = green_relations(t)
    L, R, H = (green.relation(x, n) for x in "LRH")
    eye = np.eye(n, dtype=bool)
    idem = list(t.idempotents)

    clifford = is_clifford(t)
    commutative = bool((T == T.T).all())
    semilattice = commutative and len(idem) == n
    h_trivial = bool((H == eye).all())
    group = len(idem) == 1
    universal = bool(M.all())
    identity_rel = bool((M == eye).all())
    E = M[np.ix_(idem, idem)]
    no_idem_conj = bool((E == np.eye(len(idem), dtype=bool)).all())

    def expect(theorem, *flags):
        if len(set(flags)) != 1:
            raise EquivalenceViolated(theorem, flags)

    expect("clifford-characterization", clifford, _subset(M, H), _subset(M, R), _subset(M, L), no_idem_conj)
    central = all((T[e] == T[:, e]).all() for e in idem)
    expect("clifford-central-idempotents", clifford, central, bool((L == R).all() and (R == H).all()))
    expect("semilattice-characterization", semilattice, _subset(L, M), _subset(R, M))
    expect("h-trivial-characterization", h_trivial, _subset(H, M))
    expect("commutative-characterization", commutative, identity_rel)
    expect("universal-characterization", n == 1, universal)
    meet = check_stable_meet(t)
    if not meet:
        raise EquivalenceViolated("conj-meet-order-identity", meet.counterexample)
    return Characterization(
        is_clifford=clifford,
        is_semilattice=semilattice,
        is_h_trivial=h_trivial,
        is_commutative=commutative,
        is_group=group,
        conj_universal=universal,
        conj_identity=identity_rel,
        conj_meet_order_identity=True,
        n_classes=len(iconj_classes(t)),
    )


@dataclass(frozen=True)
class FactorizableReport:
    is_factorizable: bool
    sim_u_equals_sim_i: bool

    def to_dict(self) -> dict:
        return asdict(self)


def is_factorizable(t: CayleyTable) -> bool:
    if t.identity is None:
        raise NotMonoid("factorizability needs an identity element")
    T = t.table
    us = list(units(t))
    covered = set(T[np.ix_(list(t.idempotents), us)].ravel().tolist())
    return len(covered) == t.n


def check_factorizable_unit_conjugacy(t: CayleyTable) -> FactorizableReport:
    require_inverse(t)
    if t.identity is None:
        raise NotMonoid("table has no identity element")
    fact = is_factorizable(t)
    equal = bool((unit_conjugacy_matrix(t) == iconj_matrix(t)).all())
    if fact and not equal:
        raise EquivalenceViolated("factorizable-unit-conjugacy")
    return FactorizableReport(fact, equal)
