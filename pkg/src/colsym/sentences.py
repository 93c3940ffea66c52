"""Words, sentences and p-sentences over an ordered alphabet of colors.

A word is a ``str`` whose characters are colors.  A sentence is a tuple of
non-empty words; a weak sentence is a tuple of words that may contain ``""``.
A p-sentence is a sentence in canonical order: strictly decreasing word size,
equal sizes in ascending lexicographic order (w.r.t. the alphabet order).

All functions are pure and never mutate their arguments.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetError, ContainmentError, UndefinedOperandError

Word = str
Sentence = tuple  # tuple[str, ...]

_RESERVED = set("()[],;*+-/ \t\n@#") | set("0123456789")


class Alphabet:
    """A finite ordered set of single-character colors.

    The order in which colors are given is their total order, so
    ``Alphabet("ba")`` has ``b < a``.
    """

    __slots__ = ("colors", "_rank")

    def __init__(self, colors: str | Iterable[str]):
        colors = tuple(colors)
        if not colors:
            raise AlphabetError("alphabet must be non-empty")
        for c in colors:
            if len(c) != 1 or not c.isprintable() or c in _RESERVED:
                raise AlphabetError(f"invalid color {c!r}")
        if len(set(colors)) != len(colors):
            raise AlphabetError(f"repeated color in {''.join(colors)!r}")
        self.colors = colors
        self._rank = {c: i for i, c in enumerate(colors)}

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.colors)!r})"

    def __str__(self) -> str:
        return "".join(self.colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self) -> Iterator[str]:
        return iter(self.colors)

    def __contains__(self, c: object) -> bool:
        return c in self._rank

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and other.colors == self.colors

    def __hash__(self) -> int:
        return hash(self.colors)

    def word_key(self, w: Word) -> tuple[int, ...]:
        try:
            return tuple(self._rank[c] for c in w)
        except KeyError as exc:
            raise AlphabetError(f"color {exc.args[0]!r} not in alphabet {self}") from None

    def psentence_word_key(self, w: Word) -> tuple:
        """Sort key placing words in canonical p-sentence order."""
        return (-len(w), self.word_key(w))

    def check_word(self, w: Word) -> Word:
        self.word_key(w)
        return w

    def check_sentence(self, sentence: Sequence[Word], weak: bool = False) -> Sentence:
        for w in sentence:
            if not w and not weak:
                raise ValueError("sentences may not contain empty words")
            self.check_word(w)
        return tuple(sentence)


# -- text form ---------------------------------------------------------------

def fmt_sentence(sentence: Sequence[Word]) -> str:
    """Canonical text form, e.g. ``(ab,c)``; empty words render as ``-``."""
    return "(" + ",".join(w if w else "-" for w in sentence) + ")"


def parse_sentence(text: str, alphabet: Alphabet | None = None, weak: bool = False) -> Sentence:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"sentence must be parenthesised: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    words = []
    for part in body.split(","):
        part = part.strip()
        if part == "-":
            if not weak:
                raise ValueError(f"empty word in sentence {text!r}")
            part = ""
        elif not part:
            raise ValueError(f"empty word in sentence {text!r}")
        words.append(part)
    if alphabet is not None:
        alphabet.check_sentence(words, weak=True)
    return tuple(words)


# -- basic statistics --------------------------------------------------------

def size(sentence: Sequence[Word]) -> int:
    return sum(len(w) for w in sentence)


def word_lengths(sentence: Sequence[Word]) -> tuple[int, ...]:
    return tuple(len(w) for w in sentence)


def maximal_word(sentence: Sequence[Word]) -> Word:
    return "".join(sentence)


def _key_fn(alphabet: Alphabet | None):
    if alphabet is None:
        return lambda w: tuple(map(ord, w))
    return alphabet.word_key


def cmp_graded_lex(v: Word, w: Word, alphabet: Alphabet | None = None) -> int:
    """-1, 0 or 1 as ``v`` is less than, equal to or greater than ``w``."""
    key = _key_fn(alphabet)
    a, b = (len(v), key(v)), (len(w), key(w))
    return (a > b) - (a < b)


# -- concatenation and friends ----------------------------------------------

def concat(i: Sentence, j: Sentence) -> Sentence:
    return tuple(i) + tuple(j)


def near_concat(i: Sentence, j: Sentence) -> Sentence:
    if not i or not j:
        raise UndefinedOperandError("near-concatenation needs two non-empty sentences")
    return tuple(i[:-1]) + (i[-1] + j[0],) + tuple(j[1:])


def reversal(i: Sentence) -> Sentence:
    return tuple(reversed(i))


def _split_points(sentence: Sequence[Word]) -> set[int]:
    return set(itertools.accumulate(len(w) for w in sentence[:-1]))


def _cut(word: Word, cuts: Iterable[int]) -> Sentence:
    bounds = [0, *sorted(cuts), len(word)]
    return tuple(word[a:b] for a, b in zip(bounds, bounds[1:]))


def complement(i: Sentence) -> Sentence:
    if not i:
        return ()
    word = maximal_word(i)
    cuts = set(range(1, len(word))) - _split_points(i)
    return _cut(word, cuts)


def flatten(k: Sequence[Word]) -> Sentence:
    return tuple(w for w in k if w)


def sort_sentence(i: Sequence[Word], alphabet: Alphabet | None = None) -> Sentence:
    """Canonical p-sentence of a (weak) sentence."""
    key = _key_fn(alphabet)
    return tuple(sorted(flatten(i), key=lambda w: (-len(w), key(w))))


def is_psentence(i: Sequence[Word], alphabet: Alphabet | None = None) -> bool:
    return all(i) and tuple(i) == sort_sentence(i, alphabet)


# -- refinement --------------------------------------------------------------

def _subsets(n: int) -> Iterator[tuple[int, ...]]:
    """Subsets of ``range(n)`` in binary-counter order."""
    for mask in range(1 << n):
        yield tuple(b for b in range(n) if mask >> b & 1)


def word_refinements(w: Word) -> list[Sentence]:
    return [_cut(w, (b + 1 for b in sub)) for sub in _subsets(len(w) - 1)]


def refinements(i: Sentence) -> list[Sentence]:
    """All J with J ⪯ I, each word of I cut independently."""
    return [sum(parts, ()) for parts in itertools.product(*map(word_refinements, i))]


def coarsenings(i: Sentence) -> list[Sentence]:
    """All J with I ⪯ J, obtained by gluing adjacent words of I."""
    if not i:
        return [()]
    out = []
    for glue in _subsets(len(i) - 1):
        words = [i[0]]
        for pos in range(1, len(i)):
            if pos - 1 in glue:
                words[-1] += i[pos]
            else:
                words.append(i[pos])
        out.append(tuple(words))
    return out


def refines(i: Sentence, j: Sentence) -> bool:
    return maximal_word(i) == maximal_word(j) and _split_points(j) <= _split_points(i)


# -- containment -------------------------------------------------------------

def right_splittings(i: Sentence) -> list[tuple[Sentence, Sentence]]:
    """Pairs ``(I/_R J, J)`` over all weak sentences J right-contained in I.

    The quotient holds the prefixes, J the suffixes; both keep their empty
    words so that ``quotient[k] + part[k] == i[k]``.
    """
    choices = [[(w[:k], w[k:]) for k in range(len(w), -1, -1)] for w in i]
    return [tuple(map(tuple, zip(*combo))) if combo else ((), ())
            for combo in itertools.product(*choices)]


def left_splittings(i: Sentence) -> list[tuple[Sentence, Sentence]]:
    """Pairs ``(K, I/_L K)`` with ``part[k] + quotient[k] == i[k]``."""
    choices = [[(w[:k], w[k:]) for k in range(len(w) + 1)] for w in i]
    return [tuple(map(tuple, zip(*combo))) if combo else ((), ())
            for combo in itertools.product(*choices)]


# -- shuffles ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _shuffle_counts(i: Sentence, j: Sentence, quasi: bool) -> tuple[tuple[Sentence, int], ...]:
    if not i:
        return ((j, 1),)
    if not j:
        return ((i, 1),)
    acc: Counter = Counter()
    for s, c in _shuffle_counts(i[1:], j, quasi):
        acc[(i[0],) + s] += c
    for s, c in _shuffle_counts(i, j[1:], quasi):
        acc[(j[0],) + s] += c
    if quasi:
        for s, c in _shuffle_counts(i[1:], j[1:], quasi):
            acc[(i[0] + j[0],) + s] += c
    return tuple(acc.items())


def shuffles(i: Sentence, j: Sentence) -> Counter:
    """Multiset of shuffles of two sentences."""
    return Counter(dict(_shuffle_counts(tuple(i), tuple(j), False)))


def quasishuffles(i: Sentence, j: Sentence) -> Counter:
    """Multiset of quasishuffles; merged pairs put the word of ``i`` first."""
    return Counter(dict(_shuffle_counts(tuple(i), tuple(j), True)))


# -- multisets of words ------------------------------------------------------

def is_submultiset(q: Sentence, p: Sentence) -> bool:
    return not (Counter(q) - Counter(p))


def multiset_difference(p: Sentence, q: Sentence, alphabet: Alphabet | None = None) -> Sentence:
    if not is_submultiset(q, p):
        raise ContainmentError(f"{fmt_sentence(q)} is not a submultiset of {fmt_sentence(p)}")
    return sort_sentence(tuple((Counter(p) - Counter(q)).elements()), alphabet)


def submultisets(p: Sentence, alphabet: Alphabet | None = None) -> list[Sentence]:
    """Distinct sub-multisets of the words of ``p``, each as a p-sentence."""
    counts = Counter(p)
    words = sorted(counts, key=lambda w: (-len(w), _key_fn(alphabet)(w)))
    out = []
    for picks in itertools.product(*(range(counts[w] + 1) for w in words)):
        out.append(tuple(itertools.chain.from_iterable([w] * k for w, k in zip(words, picks))))
    return out


def r_coefficient(p: Sentence, s: Sentence, q: Sentence, alphabet: Alphabet | None = None) -> int:
    """Number of pairs (Y, Z) of weak sentences with sort(Y)=P, sort(Z)=S and
    Q = (y_1 z_1, ..., y_m z_m).  Brute force over prefix/suffix splits."""
    if size(p) + size(s) != size(q):
        return 0
    p, s = tuple(p), tuple(s)
    count = 0
    for y, z in right_splittings(tuple(q)):
        if sort_sentence(y, alphabet) == p and sort_sentence(z, alphabet) == s:
            count += 1
    return count


# -- enumeration -------------------------------------------------------------

def words_of_size(n: int, alphabet: Alphabet) -> list[Word]:
    """All words of length n in lexicographic order."""
    return ["".join(t) for t in itertools.product(alphabet.colors, repeat=n)]


def compositions(n: int) -> list[tuple[int, ...]]:
    """Compositions of n, ordered by the binary counter on their cut set."""
    if n == 0:
        return [()]
    return [word_lengths(_cut("x" * n, (b + 1 for b in sub))) for sub in _subsets(n - 1)]


def enumerate_sentences(n: int, alphabet: Alphabet) -> list[Sentence]:
    """All sentences of size n: split sets (binary-counter order) outermost,
    maximal words in lexicographic order inside."""
    if n == 0:
        return [()]
    words = words_of_size(n, alphabet)
    return [_cut(w, (b + 1 for b in sub)) for sub in _subsets(n - 1) for w in words]


def enumerate_psentences(n: int, alphabet: Alphabet) -> list[Sentence]:
    """All p-sentences of size n, ordered lexicographically by their words in
    canonical word order."""
    pool = sorted((w for k in range(1, n + 1) for w in words_of_size(k, alphabet)),
                  key=alphabet.psentence_word_key)
    out: list[Sentence] = []

    def grow(prefix: list[Word], start: int, remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for idx in range(start, len(pool)):
            w = pool[idx]
            if len(w) <= remaining:
                prefix.append(w)
                grow(prefix, idx, remaining - len(w))
                prefix.pop()

    grow([], 0, n)
    return out


def rearrangements(p: Sentence) -> list[Sentence]:
    """Distinct orderings of the words of ``p``, in lexicographic order of
    positions relative to the order of first appearance in ``p``."""
    order = list(dict.fromkeys(p))
    counts = Counter(p)
    out: list[Sentence] = []

    def grow(prefix: list[Word], left: int) -> None:
        if left == 0:
            out.append(tuple(prefix))
            return
        for w in order:
            if counts[w]:
                counts[w] -= 1
                prefix.append(w)
                grow(prefix, left - 1)
                prefix.pop()
                counts[w] += 1

    grow([], len(p))
    return out
