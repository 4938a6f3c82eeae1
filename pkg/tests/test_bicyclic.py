from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invconj.bicyclic import (
    IDENTITY,
    BicyclicPair as P,
    NotConjugate,
    b_conjugate,
    b_conjugator,
    b_mul,
    b_natural_leq,
    b_oracle_conjugate,
    b_stability_witness,
    pair,
)
from oracles import bicyclic_as_map

coord = st.integers(min_value=0, max_value=50)
pairs = st.builds(P, coord, coord)


def test_mul_examples():
    assert b_mul(P(1, 2), P(2, 3)) == P(1, 3)
    assert IDENTITY * P(4, 7) == P(4, 7) == P(4, 7) * IDENTITY


def test_pair_rejects_negative():
    with pytest.raises(ValueError):
        pair(-1, 0)


def test_mul_matches_transformation_oracle():
    horizon = 60
    for a in range(8):
        for b in range(8):
            for c in range(8):
                for d in range(8):
                    f, g = bicyclic_as_map(a, b, horizon), bicyclic_as_map(c, d, horizon)
                    comp = {x: g[y] for x, y in f.items() if y in g}
                    p = b_mul(P(a, b), P(c, d))
                    want = bicyclic_as_map(*p, horizon)
                    # compare on the region untouched by truncation
                    lim = horizon - 2 * 8
                    assert {x: y for x, y in comp.items() if x < lim} == {x: y for x, y in want.items() if x < lim}


@given(pairs, pairs, pairs)
def test_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(pairs)
def test_inverse_laws(p):
    assert p * p.inverse() * p == p
    assert p.inverse() * p * p.inverse() == p.inverse()


def test_conjugate_examples():
    assert b_conjugate(P(2, 5), P(0, 3))
    assert all(b_conjugate(P(m, m), P(n, n)) for m in range(6) for n in range(6))
    assert not b_conjugate(P(0, 1), P(1, 0))


def test_conjugator_examples():
    g = b_conjugator(P(2, 5), P(0, 3))
    assert g == P(0, 2)
    assert P(2, 0) * P(0, 3) * P(0, 2) == P(2, 5)
    assert b_conjugator(P(0, 0), P(0, 0)) == P(0, 0)
    with pytest.raises(NotConjugate):
        b_conjugator(P(0, 1), P(1, 0))


def test_natural_order_examples():
    assert b_natural_leq(P(2, 2), P(1, 1))
    assert not b_natural_leq(P(1, 1), P(2, 2))
    assert b_natural_leq(P(3, 5), P(3, 5))


@given(pairs, pairs)
def test_natural_order_forms_agree(p, q):
    b_natural_leq(p, q)  # raises if the closed form and the search disagree


def test_oracle_examples():
    assert b_oracle_conjugate(P(2, 5), P(0, 3), 8)
    assert not b_oracle_conjugate(P(0, 1), P(1, 0), 20)
    assert b_oracle_conjugate(P(3, 1), P(3, 1), 0)


def test_conjugate_agrees_with_oracle_small():
    r = range(5)
    for a in r:
        for b in r:
            for c in r:
                for d in r:
                    assert b_conjugate(P(a, b), P(c, d)) == b_oracle_conjugate(P(a, b), P(c, d), 10)


@given(pairs, pairs)
def test_conjugator_verifies(p, q):
    if b_conjugate(p, q):
        g = b_conjugator(p, q)
        assert g.inverse() * q * g == p and g * p * g.inverse() == q


@given(pairs, pairs, pairs, pairs)
def test_sigma_is_congruence(p, p2, q, q2):
    if b_conjugate(p, p2) and b_conjugate(q, q2):
        assert b_conjugate(p * q, p2 * q2)


@given(pairs, pairs)
def test_difference_is_homomorphism(p, q):
    r = p * q
    assert r.a - r.b == (p.a - p.b) + (q.a - q.b)


def test_stability_witness():
    rep = b_stability_witness()
    assert rep["pair"] == [[1, 1], [2, 2]]
    assert rep["conjugate"] and rep["less"] and rep["distinct"]
    assert rep["stable"] is False
    assert rep["conjugator"] == [2, 1]
    assert rep["conjugator_check"]["g^-1 (2,2) g"] == [1, 1]
    assert rep["conjugator_check"]["g (1,1) g^-1"] == [2, 2]
    assert rep["order_check"]["(2,2)(1,1)"] == [2, 2]
