"""Colored semistandard tableaux, colored Kostka numbers, and the colored
Schur / dual Schur bases obtained from them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterator, Sequence

from .free_module import FormalSum, Key
from .sentences import Alphabet, Sentence, enumerate_psentences, fmt_sentence, is_psentence, word_lengths


@dataclass(frozen=True)
class ColoredTableau:
    """A filling of the colored diagram of ``shape``.

    Row ``r`` has ``len(shape[r])`` cells and cell ``(r, j)`` has color
    ``shape[r][j]``; ``entries[r][j]`` is its integer.
    """

    shape: Sentence
    entries: tuple[tuple[int, ...], ...]

    def is_valid(self) -> bool:
        if len(self.entries) != len(self.shape):
            return False
        for word, row in zip(self.shape, self.entries):
            if len(row) != len(word) or any(e < 1 for e in row):
                return False
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(self.entries, self.entries[1:]):
            if len(lower) > len(upper):
                return False
            if any(a >= b for a, b in zip(upper, lower)):
                return False
        return True

    @property
    def type(self) -> Sentence:
        return tableau_type(self)

    def render(self) -> str:
        return "\n".join(" ".join(f"{c}{e}" for c, e in zip(word, row))
                         for word, row in zip(self.shape, self.entries))


def tableau_type(t: ColoredTableau) -> Sentence:
    """Weak sentence whose i-th word lists the colors of the cells holding i,
    read bottom row first, each row left to right."""
    top = max((e for row in t.entries for e in row), default=0)
    words = [[] for _ in range(top)]
    for word, row in zip(reversed(t.shape), reversed(t.entries)):
        for color, e in zip(word, row):
            words[e - 1].append(color)
    return tuple("".join(w) for w in words)


def _weak_rows(length: int, lo: int, hi: int, above: Sequence[int] | None) -> Iterator[tuple[int, ...]]:
    row: list[int] = []

    def grow(pos: int, floor: int):
        if pos == length:
            yield tuple(row)
            return
        start = max(floor, above[pos] + 1 if above is not None else lo)
        for v in range(start, hi + 1):
            row.append(v)
            yield from grow(pos + 1, v)
            row.pop()

    yield from grow(0, lo)


def enumerate_cssyt(shape: Sentence, max_entry: int) -> list[ColoredTableau]:
    """All colored semistandard tableaux of ``shape`` with entries in
    ``1..max_entry``; rows are filled top to bottom, each in lexicographic
    order."""
    shape = tuple(shape)
    lengths = word_lengths(shape)
    if any(b > a for a, b in zip(lengths, lengths[1:])):
        raise ValueError(f"shape {fmt_sentence(shape)} is not a partition shape")
    out: list[ColoredTableau] = []
    rows: list[tuple[int, ...]] = []

    def fill(r: int):
        if r == len(shape):
            out.append(ColoredTableau(shape, tuple(rows)))
            return
        above = rows[r - 1] if r else None
        for row in _weak_rows(lengths[r], 1, max_entry, above):
            rows.append(row)
            fill(r + 1)
            rows.pop()

    fill(0)
    return out


@lru_cache(maxsize=None)
def _dual_schur_counts(shape: Sentence, alphabet: Alphabet) -> tuple[tuple[Sentence, int], ...]:
    counts: Counter = Counter()
    # a gap-free type uses at most |shape| distinct entries
    for t in enumerate_cssyt(shape, sum(map(len, shape))):
        q = tableau_type(t)
        if all(q) and is_psentence(q, alphabet):
            counts[q] += 1
    return tuple(counts.items())


def colored_kostka(p: Sentence, q: Sentence, alphabet: Alphabet) -> int:
    """Number of CSSYT of shape ``p`` whose type is exactly ``q``."""
    if sum(map(len, p)) != sum(map(len, q)):
        return 0
    p, q = tuple(p), tuple(q)
    if is_psentence(q, alphabet):
        return dict(_dual_schur_counts(p, alphabet)).get(q, 0)
    return sum(1 for t in enumerate_cssyt(p, len(q)) if tableau_type(t) == q)


def dual_schur_in_m(p: Sentence, alphabet: Alphabet) -> FormalSum:
    return FormalSum({Key("SymA", "m", q): c for q, c in _dual_schur_counts(tuple(p), alphabet)}, "SymA")


def kostka_order(n: int, alphabet: Alphabet) -> list[Sentence]:
    """P-sentences of size n: word-length partitions in decreasing
    lexicographic order, then lexicographically by words."""
    return sorted(enumerate_psentences(n, alphabet),
                  key=lambda p: (tuple(-len(w) for w in p), tuple(alphabet.word_key(w) for w in p)))


def kostka_matrix(n: int, alphabet: Alphabet) -> tuple[list[Sentence], list[list[int]]]:
    order = kostka_order(n, alphabet)
    pos = {p: i for i, p in enumerate(order)}
    rows = []
    for p in order:
        row = [0] * len(order)
        for q, c in _dual_schur_counts(p, alphabet):
            row[pos[q]] = c
        rows.append(row)
    return order, rows


def unitriangular_inverse(order: Sequence[Hashable], entry: Callable[[Hashable, Hashable], int]) -> dict:
    """Inverse of an upper unitriangular integer matrix by back-substitution.

    ``entry(a, b)`` is the matrix entry in row ``a``, column ``b``; the
    result maps ``(a, b)`` to the nonzero inverse entries.
    """
    order = list(order)
    n = len(order)
    upper: dict[int, dict[int, int]] = {}
    for i, a in enumerate(order):
        if entry(a, a) != 1:
            raise ValueError(f"diagonal entry at {a!r} is {entry(a, a)}, not 1")
        for j in range(i):
            if entry(a, order[j]):
                raise ValueError(f"matrix is not upper triangular at {a!r}, {order[j]!r}")
        upper[i] = {j: v for j in range(i + 1, n) if (v := entry(a, order[j]))}
    inv: dict[int, dict[int, int]] = {}
    for i in range(n - 1, -1, -1):
        row = {i: 1}
        for j, u in upper[i].items():
            for k, v in inv[j].items():
                row[k] = row.get(k, 0) - u * v
        inv[i] = {k: v for k, v in row.items() if v}
    return {(order[i], order[k]): v for i, r in inv.items() for k, v in r.items()}


@lru_cache(maxsize=None)
def _inverse_kostka(n: int, alphabet: Alphabet) -> dict:
    order, rows = kostka_matrix(n, alphabet)
    pos = {p: i for i, p in enumerate(order)}
    return unitriangular_inverse(order, lambda a, b: rows[pos[a]][pos[b]])


def m_in_dual_schur(p: Sentence, alphabet: Alphabet) -> FormalSum:
    inv = _inverse_kostka(sum(map(len, p)), alphabet)
    p = tuple(p)
    return FormalSum({Key("SymA", "sstar", q): c for (a, q), c in inv.items() if a == p}, "SymA")


def schur_in_h(p: Sentence, alphabet: Alphabet) -> FormalSum:
    """Colored Schur function: the solution of h_Q = sum_P K[P,Q] s_P."""
    inv = _inverse_kostka(sum(map(len, p)), alphabet)
    p = tuple(p)
    return FormalSum({Key("PSymA", "h", q): c for (q, b), c in inv.items() if b == p}, "PSymA")


def h_in_schur(q: Sentence, alphabet: Alphabet) -> FormalSum:
    q = tuple(q)
    order, rows = kostka_matrix(sum(map(len, q)), alphabet)
    j = order.index(q)
    return FormalSum({Key("PSymA", "s", p): rows[i][j] for i, p in enumerate(order)}, "PSymA")
