"""The free inverse semigroup FIS(X): word problem and i-conjugacy.

Words are strings over X and X^-1: a lowercase letter is a generator and the
corresponding uppercase letter its inverse, so ``"aBbA"`` is a b^-1 b a^-1.

An element is stored as its Munn tree: the set of free-group vertices visited
by the word (reduced strings, prefix closed) together with the vertex where
the word ends. Two words are equal in FIS(X) exactly when these coincide.
The canonical word is read off the tree: root pieces follow the geodesic from
the start vertex to the end vertex, and every subtree hanging off a geodesic
vertex becomes an idempotent piece at that point.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable

MAX_ALPHABET = 6
MAX_WORD = 64
MAX_EXPERIMENT_LEN = 10


class FreeInverseError(ValueError):
    pass


class UnknownLetter(FreeInverseError):
    pass


class EmptyWord(FreeInverseError):
    pass


class WordTooLong(FreeInverseError):
    pass


class AlphabetTooLarge(FreeInverseError):
    pass


class NotInASet(FreeInverseError):
    pass


class CapExceeded(FreeInverseError):
    pass


def inv(x: str) -> str:
    return x.swapcase()


def letter_key(x: str):
    """Fixed letter order a < A < b < B < ..."""
    return (x.lower(), x.isupper())


def invert_word(w: str) -> str:
    return "".join(inv(x) for x in reversed(w))


def parse_alphabet(alphabet: Iterable[str] | str) -> frozenset[str]:
    bases = frozenset(str(x).lower() for x in alphabet)
    if not bases or not all(len(b) == 1 and b.isalpha() for b in bases):
        raise FreeInverseError(f"alphabet must be single letters, got {sorted(bases)}")
    if len(bases) > MAX_ALPHABET:
        raise AlphabetTooLarge(f"at most {MAX_ALPHABET} generators are supported")
    return bases


def parse_word(text: str, alphabet: Iterable[str] | str | None = None) -> str:
    """Validate a word; with no alphabet, the letters used define it."""
    text = text.strip()
    if not text:
        raise EmptyWord("the empty word is not an element of FIS(X)")
    if len(text) > MAX_WORD:
        raise WordTooLong(f"words are capped at {MAX_WORD} letters")
    for x in text:
        if not x.isalpha() or not x.isascii():
            raise UnknownLetter(f"{x!r} is not a letter")
    bases = parse_alphabet(alphabet if alphabet is not None else text)
    for x in text:
        if x.lower() not in bases:
            raise UnknownLetter(f"{x!r} is not in the alphabet {''.join(sorted(bases))}")
    return text


# -- Munn trees -----------------------------------------------------------

def _step(v: str, x: str) -> str:
    return v[:-1] if v and v[-1] == inv(x) else v + x


@dataclass(frozen=True)
class MunnTree:
    vertices: frozenset[str]
    end: str

    @classmethod
    def of(cls, word: str) -> "MunnTree":
        cur = ""
        seen = {cur}
        for x in word:
            cur = _step(cur, x)
            seen.add(cur)
        return cls(frozenset(seen), cur)

    @cached_property
    def _letters(self) -> tuple[str, ...]:
        # every edge label (or its inverse) occurs in some vertex
        bases = {c.lower() for u in self.vertices for c in u}
        return tuple(sorted(bases | {b.upper() for b in bases}, key=letter_key))

    def letters_at(self, v: str) -> list[str]:
        """Labels of edges leaving vertex ``v``, in letter order."""
        return [x for x in self._letters if _step(v, x) in self.vertices]

    @property
    def n_edges(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class IdempotentTree:
    """A canonical idempotent: factors y(...)y^-1 keyed by their distinct head letters."""

    children: tuple[tuple[str, "IdempotentTree"], ...] = ()

    def __post_init__(self):
        kids = tuple(sorted(self.children, key=lambda c: letter_key(c[0])))
        heads = [y for y, _ in kids]
        if len(set(heads)) != len(heads):
            raise FreeInverseError("factor heads must be distinct")
        object.__setattr__(self, "children", kids)

    @property
    def first_letters(self) -> frozenset[str]:
        return frozenset(y for y, _ in self.children)

    @property
    def last_letters(self) -> frozenset[str]:
        return frozenset(inv(y) for y, _ in self.children)

    @property
    def word(self) -> str:
        return "".join(y + sub.word + inv(y) for y, sub in self.children)

    @property
    def n_edges(self) -> int:
        return sum(1 + sub.n_edges for _, sub in self.children)

    def factors(self) -> str:
        return "".join(y + (f"({sub.factors()})" if sub.children else "") + inv(y) for y, sub in self.children)

    def __bool__(self) -> bool:
        return bool(self.children)

    def __str__(self) -> str:
        return f"({self.factors()})"


def _hanging(tree: MunnTree, v: str, y: str) -> IdempotentTree:
    """The subtree reached from ``v`` through edge ``y``, without the edge back."""
    w = _step(v, y)
    return IdempotentTree(tuple((z, _hanging(tree, w, z)) for z in tree.letters_at(w) if z != inv(y)))


@dataclass(frozen=True)
class CanonicalWord:
    """u0 e1 u1 ... em um with reduced root pieces and canonical idempotent pieces."""

    root_pieces: tuple[str, ...]
    idempotent_pieces: tuple[IdempotentTree, ...] = field(default=())

    @property
    def m(self) -> int:
        return len(self.idempotent_pieces)

    @property
    def root(self) -> str:
        return "".join(self.root_pieces)

    @property
    def is_idempotent(self) -> bool:
        return self.root == ""

    @property
    def word(self) -> str:
        out = [self.root_pieces[0]]
        for e, u in zip(self.idempotent_pieces, self.root_pieces[1:]):
            out.append(e.word)
            out.append(u)
        return "".join(out)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        out = [self.root_pieces[0]]
        for e, u in zip(self.idempotent_pieces, self.root_pieces[1:]):
            out.append(str(e))
            out.append(u)
        return "".join(out)

    def to_dict(self) -> dict:
        return {
            "canonical": str(self),
            "word": self.word,
            "root_pieces": list(self.root_pieces),
            "idempotent_pieces": [e.factors() for e in self.idempotent_pieces],
            "idempotent": self.is_idempotent,
        }


def canonical_from_tree(tree: MunnTree) -> CanonicalWord:
    r = tree.end
    roots: list[str] = []
    pieces: list[IdempotentTree] = []
    current = ""
    for i in range(len(r) + 1):
        v = r[:i]
        skip = set()
        if i < len(r):
            skip.add(r[i])
        if i > 0:
            skip.add(inv(r[i - 1]))
        branches = tuple((y, _hanging(tree, v, y)) for y in tree.letters_at(v) if y not in skip)
        if branches:
            roots.append(current)
            pieces.append(IdempotentTree(branches))
            current = ""
        if i < len(r):
            current += r[i]
    roots.append(current)
    return CanonicalWord(tuple(roots), tuple(pieces))


@lru_cache(maxsize=65536)
def canonical_of(word: str) -> CanonicalWord:
    """The canonical (shortest) word equal to ``word`` in FIS(X)."""
    if isinstance(word, CanonicalWord):
        return word
    if not word:
        raise EmptyWord("the empty word is not an element of FIS(X)")
    return canonical_from_tree(MunnTree.of(word))


def _as_word(w) -> str:
    return w.word if isinstance(w, CanonicalWord) else w


def words_equal(u, v) -> bool:
    return MunnTree.of(_as_word(u)) == MunnTree.of(_as_word(v))


def multiply(*ws) -> CanonicalWord:
    return canonical_of("".join(_as_word(w) for w in ws))


# -- conjugacy ------------------------------------------------------------

def a_sets(w) -> tuple[frozenset[str], frozenset[str]]:
    """(A1(w), A2(w)): admissible first and last letters of the canonical form."""
    cw = canonical_of(_as_word(w))
    if cw.is_idempotent:
        e = cw.idempotent_pieces[0]
        return e.first_letters, e.last_letters
    u = cw.root_pieces
    if u[0]:
        a1 = frozenset({u[0][0]})
    else:
        a1 = cw.idempotent_pieces[0].first_letters | {u[1][0]}
    if u[-1]:
        a2 = frozenset({u[-1][-1]})
    else:
        a2 = cw.idempotent_pieces[-1].last_letters | {u[-2][-1]}
    return a1, a2


def a_set(w) -> frozenset[str]:
    """Letters x with x^-1 w x conjugate to w."""
    a1, a2 = a_sets(w)
    return frozenset(x for x in a1 if inv(x) in a2)


def conj_by_letter(w, x: str) -> CanonicalWord:
    """Canonical form of x^-1 w x, for x in A(w)."""
    if x not in a_set(w):
        raise NotInASet(f"{x} is not in A({_as_word(w)})")
    return canonical_of(inv(x) + _as_word(w) + x)


@dataclass(frozen=True)
class ConjugacyTree:
    """Breadth-first conjugacy tree; ``edges`` are (parent, letter, child) node indices."""

    nodes: tuple[CanonicalWord, ...]
    edges: tuple[tuple[int, str, int], ...]

    @property
    def root(self) -> CanonicalWord:
        return self.nodes[0]

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, w) -> bool:
        return canonical_of(_as_word(w)) in set(self.nodes)

    def to_dict(self) -> dict:
        return {
            "nodes": [str(n) for n in self.nodes],
            "edges": [{"parent": p, "letter": x, "child": c} for p, x, c in self.edges],
        }

    def render(self) -> str:
        kids: dict[int, list[tuple[str, int]]] = {}
        for p, x, c in self.edges:
            kids.setdefault(p, []).append((x, c))
        lines: list[str] = []

        def walk(i, depth, label):
            lines.append("  " * depth + (f"--{label}--> " if label else "") + str(self.nodes[i]))
            for x, c in kids.get(i, []):
                walk(c, depth + 1, x)

        walk(0, 0, "")
        return "\n".join(lines)


def conjugacy_class(w) -> ConjugacyTree:
    """All conjugates of ``w``, found by closing under single-letter conjugation."""
    root = canonical_of(_as_word(w))
    nodes = [root]
    index = {root: 0}
    edges = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        v = nodes[i]
        for x in sorted(a_set(v), key=letter_key):
            child = conj_by_letter(v, x)
            if child not in index:
                index[child] = len(nodes)
                nodes.append(child)
                edges.append((i, x, index[child]))
                queue.append(index[child])
    return ConjugacyTree(tuple(nodes), tuple(edges))


def conjugate_words(u, v) -> bool:
    return canonical_of(_as_word(v)) in set(conjugacy_class(u).nodes)


def is_singleton_class(w) -> bool:
    return not a_set(w)


# -- idempotent class sizes ----------------------------------------------

def _trees(letters: tuple[str, ...], budget: int, banned: str | None):
    """Idempotent trees with at most ``budget`` edges whose heads avoid ``banned``."""
    heads = [y for y in letters if y != banned]
    out: list[tuple[tuple[tuple[str, IdempotentTree], ...], int]] = []

    def rec(i, left, acc, used):
        if i == len(heads):
            out.append((tuple(acc), used))
            return
        rec(i + 1, left, acc, used)
        if left >= 1:
            y = heads[i]
            for sub, e in _trees(letters, left - 1, inv(y)):
                rec(i + 1, left - 1 - e, acc + [(y, IdempotentTree(sub))], used + 1 + e)

    rec(0, budget, [], 0)
    return out


def canonical_idempotents(alphabet, max_len: int) -> list[IdempotentTree]:
    """Every nonempty canonical idempotent of length at most ``max_len``."""
    bases = sorted(parse_alphabet(alphabet))
    letters = tuple(sorted(bases + [b.upper() for b in bases], key=letter_key))
    found = [IdempotentTree(c) for c, e in _trees(letters, max_len // 2, None) if e > 0]
    return sorted(found, key=lambda t: (len(t.word), [letter_key(x) for x in t.word]))


@dataclass(frozen=True)
class IdempotentClassEntry:
    idempotent: str
    length: int
    class_size: int
    predicted: int

    @property
    def matches(self) -> bool:
        return self.class_size == self.predicted


@dataclass(frozen=True)
class IdempotentExperiment:
    alphabet: str
    max_len: int
    entries: tuple[IdempotentClassEntry, ...]

    @property
    def discrepancies(self) -> tuple[IdempotentClassEntry, ...]:
        return tuple(e for e in self.entries if not e.matches)

    def to_dict(self) -> dict:
        return {
            "alphabet": self.alphabet,
            "max_len": self.max_len,
            "count": len(self.entries),
            "discrepancies": [e.idempotent for e in self.discrepancies],
            "entries": [
                {"idempotent": e.idempotent, "length": e.length, "class_size": e.class_size,
                 "predicted": e.predicted, "matches": e.matches}
                for e in self.entries
            ],
        }


def idempotent_class_experiment(alphabet, max_len: int, cap: int = MAX_EXPERIMENT_LEN) -> IdempotentExperiment:
    """Class size of every canonical idempotent e with |e| <= max_len, against |e|/2 + 1."""
    if max_len > cap:
        raise CapExceeded(f"max_len {max_len} exceeds the cap {cap}")
    bases = "".join(sorted(parse_alphabet(alphabet)))
    entries = []
    for e in canonical_idempotents(bases, max_len):
        w = e.word
        entries.append(IdempotentClassEntry(str(IdempotentTree(e.children)), len(w),
                                            len(conjugacy_class(w)), len(w) // 2 + 1))
    return IdempotentExperiment(bases, max_len, tuple(entries))
