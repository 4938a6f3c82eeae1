"""Small named semigroups and McAlister triples used as fixtures."""

from __future__ import annotations

from itertools import combinations, permutations, product

from .charts import Chart, compose, format_chart, partial_injections
from .table import CayleyTable


def symmetric_inverse_monoid(n: int) -> CayleyTable:
    """I({1..n}) with elements named in cycle-chain notation ('0' is the empty chart)."""
    charts = partial_injections(range(1, n + 1))
    names = [format_chart(c) for c in charts]
    assert len(set(names)) == len(names)
    index = {c: i for i, c in enumerate(charts)}
    return CayleyTable(tuple(names), [[index[compose(a, b)] for b in charts] for a in charts])


def chart_table_index(n: int) -> dict[Chart, int]:
    return {c: i for i, c in enumerate(partial_injections(range(1, n + 1)))}


def brandt_b2() -> CayleyTable:
    """The five-element Brandt semigroup: matrix units e_ij and zero."""
    units = [(1, 1), (1, 2), (2, 1), (2, 2)]

    def mul(x, y):
        if x == 0 or y == 0 or x[1] != y[0]:
            return 0
        return (x[0], y[1])

    elems = [0] + units
    names = ["0"] + [f"e{i}{j}" for i, j in units]
    return CayleyTable(tuple(names), CayleyTable.from_function(elems, mul).table)


def cyclic_group(k: int) -> CayleyTable:
    return CayleyTable.from_function(range(k), lambda x, y: (x + y) % k)


def chain_semilattice(k: int) -> CayleyTable:
    """{0 < 1 < ... < k-1} under min."""
    return CayleyTable.from_function(range(k), min)


def symmetric_group(n: int) -> CayleyTable:
    """Sym(n) as tuples; (p*q)(x) = q(p(x)), matching left-to-right chart composition."""
    perms = list(permutations(range(n)))

    def mul(p, q):
        return tuple(q[p[x]] for x in range(n))

    names = ["".join(str(x + 1) for x in p) for p in perms]
    return CayleyTable(tuple(names), CayleyTable.from_function(perms, mul).table)


def direct_product(s: CayleyTable, t: CayleyTable) -> CayleyTable:
    pairs = list(product(range(s.n), range(t.n)))

    def mul(x, y):
        return (s.mul(x[0], y[0]), t.mul(x[1], y[1]))

    names = [f"{s.elements[a]}.{t.elements[b]}" for a, b in pairs]
    return CayleyTable(tuple(names), CayleyTable.from_function(pairs, mul).table)


def left_zero(k: int = 2) -> CayleyTable:
    """xy = x; a band whose idempotents do not commute, hence not inverse."""
    return CayleyTable.from_function(range(k), lambda x, y: x)


def coset_monoid(g: CayleyTable) -> CayleyTable:
    """All cosets xH of subgroups H of a group, with A.B the least coset containing AB."""
    n = g.n
    inv = g.inverse

    def generated(xs) -> frozenset[int]:
        sub = {g.identity} | set(xs)
        frontier = list(sub)
        while frontier:
            a = frontier.pop()
            for b in list(sub):
                for c in (g.mul(a, b), g.mul(b, a)):
                    if c not in sub:
                        sub.add(c)
                        frontier.append(c)
        return frozenset(sub)

    def least_coset(xs: frozenset[int]) -> frozenset[int]:
        x = min(xs)
        h = generated(g.mul(int(inv[x]), y) for y in xs)
        return frozenset(g.mul(x, y) for y in h)

    subgroups = {generated(s) for r in range(3) for s in combinations(range(n), r)}
    # two generators suffice for the small groups used here; close under joins to be safe
    changed = True
    while changed:
        changed = False
        for a in list(subgroups):
            for b in list(subgroups):
                j = generated(a | b)
                if j not in subgroups:
                    subgroups.add(j)
                    changed = True
    cosets = sorted({frozenset(g.mul(x, y) for y in h) for h in subgroups for x in range(n)},
                    key=lambda c: (len(c), sorted(c)))

    def mul(a, b):
        return least_coset(frozenset(g.mul(x, y) for x in a for y in b))

    names = ["{" + ",".join(g.elements[x] for x in sorted(c)) + "}" for c in cosets]
    return CayleyTable(tuple(names), CayleyTable.from_function(cosets, mul).table)


def theorem_corpus() -> dict[str, CayleyTable]:
    """The finite inverse semigroups every table theorem is checked on."""
    return {
        "I(1)": symmetric_inverse_monoid(1),
        "I(2)": symmetric_inverse_monoid(2),
        "I(3)": symmetric_inverse_monoid(3),
        "B2": brandt_b2(),
        "S3": symmetric_group(3),
        "Z4x2chain": direct_product(cyclic_group(4), chain_semilattice(2)),
        "3chain": chain_semilattice(3),
    }


# -- McAlister triples ------------------------------------------------------

def triple_trivial_chain() -> dict:
    """Trivial group acting on the 2-chain 0 < 1, with the whole chain as ideal."""
    return {
        "group": {"elements": ["1"], "table": [["1"]]},
        "poset": {"elements": ["0", "1"], "leq": [[True, True], [False, True]]},
        "ideal": ["0", "1"],
        "action": {"1": {"0": "0", "1": "1"}},
    }


_V_LEQ = [[True, True, True], [False, True, False], [False, False, True]]


def triple_z2_swap() -> dict:
    """Z2 swapping two incomparable points p, q above a bottom b; ideal is everything."""
    return {
        "group": {"elements": ["1", "s"], "table": [["1", "s"], ["s", "1"]]},
        "poset": {"elements": ["b", "p", "q"], "leq": _V_LEQ},
        "ideal": ["b", "p", "q"],
        "action": {"1": {"b": "b", "p": "p", "q": "q"}, "s": {"b": "b", "p": "q", "q": "p"}},
    }


def triple_z2_half() -> dict:
    """The Z2 swap action with ideal {b, p}; P has three elements."""
    t = triple_z2_swap()
    t["ideal"] = ["b", "p"]
    return t


def triple_z2_no_bottom() -> dict:
    """Invalid: ideal {p, q} leaves out the bottom, so p and q have no meet in it."""
    t = triple_z2_swap()
    t["ideal"] = ["p", "q"]
    return t


def valid_triples() -> dict[str, dict]:
    return {
        "trivial-chain": triple_trivial_chain(),
        "z2-swap": triple_z2_swap(),
        "z2-half": triple_z2_half(),
    }
