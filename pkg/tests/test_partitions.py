from __future__ import annotations

import pytest

from invconj.charts import conjugate_charts, cycle_chain_type, partial_injections
from invconj.partitions import (
    PartitionSignature,
    class_count,
    enumerate_class_representatives,
    enumerate_signatures,
    partition_count,
    representative,
)
from oracles import partitions_by_brute_force


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (7, 15), (10, 42)])
def test_partition_count_values(n, expected):
    assert partition_count(n) == expected


def test_partition_count_matches_enumeration_oracle():
    for n in range(0, 13):
        assert partition_count(n) == len(set(partitions_by_brute_force(n)))


def test_partition_count_big_integers():
    # p(100), a standard tabulated value
    assert partition_count(100) == 190569292


def test_signature_count_matches_partition_count():
    for n in range(0, 31):
        sigs = enumerate_signatures(n)
        assert len(sigs) == len(set(sigs)) == partition_count(n)
        assert all(s.n == n for s in sigs)


def test_signatures_of_three():
    got = {str(s) for s in enumerate_signatures(3)}
    assert got == {"<(3,1)>", "<(1,1), (1,2)>", "<(1,3)>"}


def test_signature_of_fifteen_example():
    target = PartitionSignature(((2, 1), (4, 2), (1, 5)))
    assert target in enumerate_signatures(15)
    assert target.parts() == (1, 1, 2, 2, 2, 2, 5)


def test_zero_signature_is_empty():
    assert enumerate_signatures(0) == [PartitionSignature(())]


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 2), (2, 5), (3, 10), (4, 20), (5, 36)])
def test_class_count_values(n, expected):
    assert class_count(n) == expected


def test_class_count_equals_distinct_types_exhaustive():
    for n in range(0, 5):
        types = {cycle_chain_type(a) for a in partial_injections(range(1, n + 1))}
        assert len(types) == class_count(n)


def test_representatives():
    reps1 = enumerate_class_representatives(1)
    assert [str(r) for r in reps1] == ["0", "(1)"]
    assert len(enumerate_class_representatives(2)) == 5
    for n in range(0, 9):
        reps = enumerate_class_representatives(n)
        assert len(reps) == class_count(n)
        assert len({cycle_chain_type(r) for r in reps}) == len(reps)


def test_representatives_pairwise_nonconjugate():
    reps = enumerate_class_representatives(5)
    assert len(reps) == 36
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            assert not conjugate_charts(a, b)


def test_representative_cyclic_span():
    for n in range(0, 7):
        for r in range(n + 1):
            for cs in enumerate_signatures(r):
                for hs in enumerate_signatures(n - r):
                    a = representative(cs, hs, n)
                    t = cycle_chain_type(a)
                    assert sum(k * c for k, c in t.cycles) == r
                    assert sorted(k for k, c in t.cycles for _ in range(c)) == sorted(cs.parts())
