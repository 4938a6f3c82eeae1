from __future__ import annotations

import random

import pytest

from invconj import free_inverse as fi
from invconj.free_inverse import (
    CapExceeded,
    EmptyWord,
    IdempotentTree,
    NotInASet,
    UnknownLetter,
    WordTooLong,
    a_set,
    a_sets,
    canonical_idempotents,
    canonical_of,
    conj_by_letter,
    conjugacy_class,
    conjugate_words,
    idempotent_class_experiment,
    inv,
    invert_word,
    is_singleton_class,
    parse_word,
    words_equal,
)
from oracles import free_reduce, munn_pair

CLS_W = "aBbAcCCaBbA"
CLS_W1 = "BbAcCCaBb"
CLS_W2 = "CaBbACaBbAc"
CLS_W3 = "bAcCCaB"


# -- parsing --------------------------------------------------------------

def test_parse_word():
    assert parse_word("aBbAcC", "abc") == "aBbAcC"
    assert parse_word(CLS_W) == CLS_W
    with pytest.raises(EmptyWord):
        parse_word("")
    with pytest.raises(UnknownLetter):
        parse_word("ad", "abc")
    with pytest.raises(UnknownLetter):
        parse_word("a1")
    with pytest.raises(WordTooLong):
        parse_word("a" * 65)


# -- canonical forms ------------------------------------------------------

def test_canonical_idempotent_examples():
    c = canonical_of("aA")
    assert c.is_idempotent and c.idempotent_pieces == (IdempotentTree((("a", IdempotentTree()),)),)
    assert canonical_of("aAaA") == c


def test_equal_idempotent_pair():
    e, f = "abBcCABb", "BbacCbBA"
    assert canonical_of(e) == canonical_of(f)
    assert words_equal(e, f)


def test_words_equal_examples():
    assert not words_equal("ab", "ba")
    assert words_equal("aAa", "a")


def test_canonical_is_shortest_and_stable():
    rng = random.Random(5)
    for _ in range(300):
        w = _random_word(rng, rng.randint(1, 14), "abc")
        c = canonical_of(w)
        assert words_equal(c.word, w)
        assert len(c.word) <= len(w)
        assert canonical_of(c.word) == c
        # no shorter word reaches the same tree: the canonical length is 2*edges - |root|
        verts, end = munn_pair(w)
        assert len(c.word) == 2 * (len(verts) - 1) - len(end)


def test_canonical_invariants():
    rng = random.Random(11)
    for _ in range(300):
        c = canonical_of(_random_word(rng, rng.randint(1, 16), "abc"))
        u = c.root_pieces
        assert all(u[1:-1]) or c.m <= 1
        assert free_reduce(c.root) == c.root
        for i, e in enumerate(c.idempotent_pieces):
            assert e
            left, right = u[i], u[i + 1]
            if left:
                assert left[-1] not in e.last_letters
            if right:
                assert right[0] not in e.first_letters


def test_words_equal_matches_munn_oracle():
    rng = random.Random(3)
    for _ in range(2000):
        u = _random_word(rng, rng.randint(1, 8), "ab")
        v = _random_word(rng, rng.randint(1, 8), "ab")
        assert words_equal(u, v) == (munn_pair(u) == munn_pair(v))


def _random_word(rng: random.Random, n: int, bases: str) -> str:
    letters = bases + bases.upper()
    return "".join(rng.choice(letters) for _ in range(n))


def _rewrite(rng: random.Random, w: str) -> str:
    """One random rewrite that preserves the element of FIS(X)."""
    kind = rng.randrange(3)
    if kind == 1 and len(w) >= 2:
        # L R = L (s^-1 s)(t t^-1) R = L (t t^-1)(s^-1 s) R for a suffix s of L and a prefix t of R
        i = rng.randrange(1, len(w))
        left, right = w[:i], w[i:]
        sfx = left[len(left) - rng.randint(1, min(3, len(left))):]
        pfx = right[:rng.randint(1, min(3, len(right)))]
        e, f = invert_word(sfx) + sfx, pfx + invert_word(pfx)
        return left + (e + f if rng.random() < 0.5 else f + e) + right
    if kind == 2:  # collapse x x^-1 x -> x where it occurs
        for k in range(len(w) - 2):
            if w[k + 1] == inv(w[k]) and w[k + 2] == w[k]:
                return w[:k] + w[k] + w[k + 3:]
    # u -> u u^-1 u for a subword u
    i = rng.randrange(len(w))
    j = rng.randrange(i, len(w)) + 1
    u = w[i:j]
    return w[:j] + invert_word(u) + u + w[j:]


def test_random_rewrites_preserve_canonical_form(rng):
    for _ in range(200):
        w = _random_word(rng, rng.randint(1, 20), "abc")
        base = canonical_of(w)
        v = w
        for _ in range(rng.randint(1, 4)):
            v = _rewrite(rng, v)
            if len(v) > fi.MAX_WORD:
                break
            assert canonical_of(v) == base, (w, v)


def test_canonical_printing():
    assert str(canonical_of(CLS_W)) == "(a(Bb)AcC)C(a(Bb)A)"
    assert str(canonical_of("aA")) == "(aA)"
    assert canonical_of("ab").to_dict()["root_pieces"] == ["ab"]


# -- A(w) -----------------------------------------------------------------

def test_a_set_examples():
    assert a_set(CLS_W) == {"a", "c"}
    w = "AbBaCcabbBAcc"
    a1, a2 = a_sets(w)
    assert a1 == {"A", "C", "a"} and a2 == {"c"}
    assert a_set(w) == {"C"}
    assert a_set("ab") == frozenset()


def test_a_set_characterization():
    """x in A(w) exactly when x x^-1 w = w x x^-1 = w."""
    rng = random.Random(17)
    corpus = [CLS_W, "aA", "ab", "AbBaCcabbBAcc"] + [_random_word(rng, rng.randint(1, 10), "abc") for _ in range(300)]
    for w in corpus:
        for x in "abcABC":
            fixed = words_equal(x + inv(x) + w, w) and words_equal(w + x + inv(x), w)
            assert (x in a_set(w)) == fixed, (w, x)


def test_conj_by_letter_examples():
    assert words_equal(conj_by_letter(CLS_W, "a"), CLS_W1)
    with pytest.raises(NotInASet):
        conj_by_letter(CLS_W, "b")
    c = conj_by_letter("aA", "a")
    assert c == canonical_of("Aa")


# -- classes --------------------------------------------------------------

def test_four_element_class():
    tree = conjugacy_class(CLS_W)
    assert len(tree) == 4
    expected = [CLS_W, CLS_W1, CLS_W2, CLS_W3]
    for node, want in zip(tree.nodes, expected):
        assert words_equal(node, want)
    assert tree.edges == ((0, "a", 1), (0, "c", 2), (1, "B", 3))


def test_class_examples():
    assert len(conjugacy_class("ab")) == 1
    nodes = conjugacy_class("aA").nodes
    assert {n.word for n in nodes} == {"aA", "Aa"}


def test_conjugate_words_examples():
    assert conjugate_words(CLS_W, CLS_W3)
    assert not conjugate_words("ab", "ba")
    assert conjugate_words("aBc", "aBc")


def test_singleton_class():
    assert is_singleton_class("ab")
    assert not is_singleton_class(CLS_W)
    assert not is_singleton_class("aA")


def test_class_closure_and_symmetry():
    rng = random.Random(23)
    for _ in range(60):
        w = _random_word(rng, rng.randint(1, 8), "ab")
        tree = conjugacy_class(w)
        members = set(tree.nodes)
        for v in tree.nodes:
            assert canonical_of(v.word) == v
            for x in a_set(v):
                assert conj_by_letter(v, x) in members
            assert set(conjugacy_class(v).nodes) == members
            assert conjugate_words(v, w)
        assert is_singleton_class(w) == (len(tree) == 1)


def test_e_unitary_property():
    rng = random.Random(29)
    idems = [e.word for e in canonical_idempotents("ab", 4)]
    for _ in range(500):
        w = _random_word(rng, rng.randint(1, 8), "ab")
        e = rng.choice(idems)
        if canonical_of(e + w).is_idempotent:
            assert canonical_of(w).is_idempotent


# -- idempotent experiment ------------------------------------------------

def test_canonical_idempotents_enumeration():
    words = {e.word for e in canonical_idempotents("a", 4)}
    assert words == {"aA", "Aa", "aAAa", "aaAA", "AAaa"}
    assert all(canonical_of(w).is_idempotent for w in words)
    # distinct as elements
    two = canonical_idempotents("ab", 6)
    assert len({canonical_of(e.word) for e in two}) == len(two)


def test_experiment_small_cases():
    rep = idempotent_class_experiment("ab", 4)
    by = {e.idempotent: e for e in rep.entries}
    assert by["(aA)"].class_size == 2 and by["(aA)"].predicted == 2
    assert by["(aAbB)"].predicted == 3
    assert idempotent_class_experiment("ab", 1).entries == ()


def test_experiment_cap():
    with pytest.raises(CapExceeded):
        idempotent_class_experiment("ab", 12)
