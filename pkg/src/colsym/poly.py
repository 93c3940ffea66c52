"""Truncated partially commutative polynomials.

A monomial is a tuple of ``(slot, word)`` pairs with strictly increasing
slots.  Variables in different slots commute; variables in one slot
concatenate their words in multiplication order, so ``x_{a,1} x_{b,1}`` is
``x_{ab,1}``.  This is an independent model of QSym_A and Sym_A used to
check the combinatorial product rules.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from numbers import Rational
from typing import Mapping

from . import sentences as sn
from .errors import NotQuasisymmetricError, NotSymmetricError
from .free_module import FormalSum, Key
from .sentences import Alphabet, Sentence

Monomial = tuple  # tuple[tuple[int, str], ...]


def fmt_monomial(mono: Monomial) -> str:
    return "".join(f"x_{{{w},{j}}}" for j, w in mono) or "1"


def _sentence(mono: Monomial) -> Sentence:
    return tuple(w for _, w in mono)


def _merge(left: Monomial, right: Monomial) -> Monomial:
    merged = dict(left)
    for j, w in right:
        merged[j] = merged.get(j, "") + w
    return tuple(sorted(merged.items()))


class TruncatedPoly:
    """Polynomial in the variables ``x_{w,j}`` with ``1 <= j <= slots``."""

    __slots__ = ("slots", "terms")

    def __init__(self, slots: int, terms: Mapping[Monomial, Rational] = ()):
        if slots < 0:
            raise ValueError("slot count must be non-negative")
        self.slots = slots
        acc: dict = {}
        for mono, c in dict(terms).items():
            mono = tuple(mono)
            slots_used = [j for j, _ in mono]
            if slots_used != sorted(set(slots_used)) or any(not 1 <= j <= slots for j in slots_used):
                raise ValueError(f"monomial {mono} is not canonical for {slots} slots")
            if any(not w for _, w in mono):
                raise ValueError(f"monomial {mono} has an empty word")
            acc[mono] = acc.get(mono, 0) + c
        self.terms = {m: Fraction(c) for m, c in acc.items() if c}

    @classmethod
    def one(cls, slots: int) -> "TruncatedPoly":
        return cls(slots, {(): 1})

    def _same(self, other: "TruncatedPoly") -> None:
        if not isinstance(other, TruncatedPoly):
            raise TypeError(f"expected TruncatedPoly, got {type(other).__name__}")
        if other.slots != self.slots:
            raise ValueError(f"slot counts differ: {self.slots} and {other.slots}")

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._same(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return TruncatedPoly(self.slots, terms)

    def __neg__(self) -> "TruncatedPoly":
        return TruncatedPoly(self.slots, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Rational):
            return TruncatedPoly(self.slots, {m: c * other for m, c in self.terms.items()})
        return poly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self.slots == other.slots and self.terms == other.terms

    def __hash__(self):
        return hash((self.slots, frozenset(self.terms.items())))

    def render(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda mc: (sum(len(w) for _, w in mc[0]), mc[0]))
        return " + ".join(f"{c}*{fmt_monomial(m)}" for m, c in items).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"TruncatedPoly({self.slots}, {self.render()!r})"


def poly_mul(p: TruncatedPoly, q: TruncatedPoly) -> TruncatedPoly:
    """Product; at a shared slot the left factor's word comes first."""
    p._same(q)
    acc: dict = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            m = _merge(m1, m2)
            acc[m] = acc.get(m, 0) + c1 * c2
    return TruncatedPoly(p.slots, acc)


def realize_M(index: Sentence, slots: int) -> TruncatedPoly:
    """Sum of x_{w_1,j_1} ... x_{w_k,j_k} over j_1 < ... < j_k in 1..slots."""
    index = tuple(index)
    return TruncatedPoly(slots, {tuple(zip(js, index)): 1
                                 for js in combinations(range(1, slots + 1), len(index))})


def realize_m(p: Sentence, slots: int) -> TruncatedPoly:
    out = TruncatedPoly(slots)
    for i in sn.rearrangements(tuple(p)):
        out = out + realize_M(i, slots)
    return out


def realize(f: FormalSum, slots: int) -> TruncatedPoly:
    """Realize an element of QSym_A (M basis) or Sym_A (m basis)."""
    rule = {("QSymA", "M"): realize_M, ("SymA", "m"): realize_m}
    out = TruncatedPoly(slots)
    for k, c in f.terms.items():
        try:
            fn = rule[k.algebra, k.basis]
        except KeyError:
            raise ValueError(f"cannot realize {k.algebra} basis {k.basis}") from None
        out = out + fn(k.index, slots) * c
    return out


def _class_coefficients(p: TruncatedPoly) -> dict[Sentence, Fraction]:
    """Coefficient of each sentence, raising if it varies over slot choices."""
    seen: dict[Sentence, tuple[Monomial, Fraction, int]] = {}
    for mono in sorted(p.terms, key=lambda m: (len(m), m)):
        s = _sentence(mono)
        c = p.terms[mono]
        if s in seen:
            first, c0, n = seen[s]
            if c != c0:
                raise NotQuasisymmetricError(
                    f"not quasisymmetric: {fmt_monomial(first)} has coefficient {c0} "
                    f"but {fmt_monomial(mono)} has {c}", witness=(first, mono))
            seen[s] = (first, c0, n + 1)
        else:
            seen[s] = (mono, c, 1)
    for s, (first, c0, n) in seen.items():
        if n != comb(p.slots, len(s)):
            missing = next(tuple(zip(js, s)) for js in combinations(range(1, p.slots + 1), len(s))
                           if tuple(zip(js, s)) not in p.terms)
            raise NotQuasisymmetricError(
                f"not quasisymmetric: {fmt_monomial(first)} has coefficient {c0} "
                f"but {fmt_monomial(missing)} has 0", witness=(first, missing))
    return {s: c for s, (_, c, _) in seen.items()}


def is_quasisymmetric(p: TruncatedPoly) -> bool:
    try:
        _class_coefficients(p)
    except NotQuasisymmetricError:
        return False
    return True


def to_M(p: TruncatedPoly) -> FormalSum:
    """Inverse of :func:`realize_M` on sentences with at most ``slots`` words."""
    return FormalSum({Key("QSymA", "M", s): c for s, c in _class_coefficients(p).items()}, "QSymA")


def _symmetric_classes(p: TruncatedPoly, alphabet: Alphabet | None) -> dict[Sentence, Fraction]:
    coeffs = _class_coefficients(p)
    out: dict[Sentence, Fraction] = {}
    for s in sorted(coeffs, key=lambda s: (sn.size(s), s)):
        key = sn.sort_sentence(s, alphabet)
        if key in out:
            continue
        for other in sn.rearrangements(key):
            if len(other) <= p.slots and coeffs.get(other, 0) != coeffs[s]:
                first = tuple(enumerate(s, 1))
                second = tuple(enumerate(other, 1))
                raise NotSymmetricError(
                    f"not symmetric: {fmt_monomial(first)} has coefficient {coeffs[s]} "
                    f"but {fmt_monomial(second)} has {coeffs.get(other, 0)}", witness=(first, second))
        out[key] = coeffs[s]
    return out


def is_symmetric(p: TruncatedPoly, alphabet: Alphabet | None = None) -> bool:
    try:
        _symmetric_classes(p, alphabet)
    except NotSymmetricError:
        return False
    return True


def to_m(p: TruncatedPoly, alphabet: Alphabet | None = None) -> FormalSum:
    """Inverse of :func:`realize_m`; ``alphabet`` fixes the p-sentence order
    (code-point order when omitted)."""
    return FormalSum({Key("SymA", "m", s): c for s, c in _symmetric_classes(p, alphabet).items()}, "SymA")
