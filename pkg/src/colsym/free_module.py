"""Finite exact-rational linear combinations of basis keys, and tensors of them."""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Union

from .errors import AlgebraMismatchError, BasisError
from .sentences import fmt_sentence

COLORED = ("NSymA", "QSymA", "SymA", "PSymA")
CLASSICAL = ("Sym", "QSym", "NSym")

LEGAL_BASES = {
    "NSymA": ("H",),
    "QSymA": ("M",),
    "SymA": ("m", "sstar"),
    "PSymA": ("h", "s"),
    "Sym": ("m", "h", "e", "s"),
    "QSym": ("M", "F"),
    "NSym": ("H", "R", "E"),
}


class Key(NamedTuple):
    """A basis element: ``index`` is a tuple of words (colored algebras) or a
    tuple of positive integers (classical algebras)."""

    algebra: str
    basis: str
    index: tuple

    @property
    def degree(self) -> int:
        if self.algebra in COLORED:
            return sum(len(w) for w in self.index)
        return sum(self.index)

    def text(self) -> str:
        if self.algebra in COLORED:
            return f"{self.basis}{fmt_sentence(self.index)}"
        return f"{self.basis}({','.join(map(str, self.index))})"

    def sort_key(self) -> tuple:
        return (self.degree, self.text())

    def __str__(self) -> str:
        return self.text()


def make_key(algebra: str, basis: str, index: Iterable) -> Key:
    """Validated key constructor for user-facing code."""
    if algebra not in LEGAL_BASES:
        raise BasisError(f"unknown algebra {algebra!r}")
    if basis not in LEGAL_BASES[algebra]:
        raise BasisError(f"{algebra} has no basis {basis!r}")
    index = tuple(index)
    if algebra in COLORED:
        if not all(isinstance(w, str) and w for w in index):
            raise BasisError(f"{algebra} indices are sentences of non-empty words")
    else:
        if not all(isinstance(p, int) and p > 0 for p in index):
            raise BasisError(f"{algebra} indices are sequences of positive integers")
        if basis in ("m", "h", "e", "s") and list(index) != sorted(index, reverse=True):
            raise BasisError(f"{basis} is indexed by partitions, got {index}")
    return Key(algebra, basis, index)


Coefficient = Union[int, Fraction]


def fmt_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render(items: list[tuple[str, Fraction]]) -> str:
    if not items:
        return "0"
    parts = []
    for n, (text, c) in enumerate(items):
        mag = f"{fmt_coefficient(abs(c))}*{text}"
        if n == 0:
            parts.append(mag if c > 0 else "-" + mag)
        else:
            parts.append(("+ " if c > 0 else "- ") + mag)
    return " ".join(parts)


class _Combination:
    """Shared dict-backed arithmetic; subclasses fix the key type."""

    __slots__ = ("terms", "algebra")

    def __init__(self, terms: Mapping | Iterable = (), algebra=None):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            if not isinstance(c, Rational):
                raise TypeError(f"coefficients must be exact rationals, got {c!r}")
            acc[k] = acc.get(k, 0) + c
        self.terms = {k: Fraction(c) for k, c in acc.items() if c != 0}
        found = {self._algebra_of(k) for k in self.terms}
        if len(found) > 1:
            raise AlgebraMismatchError(f"mixed algebras {sorted(map(str, found))}")
        if found:
            (tag,) = found
            if algebra is not None and algebra != tag:
                raise AlgebraMismatchError(f"expected {algebra}, got {tag}")
            algebra = tag
        self.algebra = algebra

    @staticmethod
    def _algebra_of(key):
        raise NotImplementedError

    def _new(self, terms, algebra):
        return type(self)(terms, algebra)

    def _check(self, other):
        if type(other) is not type(self):
            raise AlgebraMismatchError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if self.algebra and other.algebra and self.algebra != other.algebra:
            raise AlgebraMismatchError(f"cannot combine {self.algebra} with {other.algebra}")
        return self.algebra or other.algebra

    def __add__(self, other):
        algebra = self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return self._new(terms, algebra)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()}, self.algebra)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if not isinstance(c, Rational):
            return NotImplemented
        return self._new({k: v * c for k, v in self.terms.items()}, self.algebra)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, _Combination):
            return type(other) is type(self) and other.terms == self.terms
        if isinstance(other, Rational) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def __contains__(self, key):
        return key in self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kc: self._sort_key(kc[0]))

    def keys(self):
        return [k for k, _ in self.items()]

    def coefficient(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __repr__(self):
        return f"{type(self).__name__}({self.render()!r})"

    def __str__(self):
        return self.render()


class FormalSum(_Combination):
    """Element of one algebra: a finite map ``Key -> Fraction``."""

    __slots__ = ()

    @staticmethod
    def _algebra_of(key: Key):
        return key.algebra

    @staticmethod
    def _sort_key(key: Key):
        return key.sort_key()

    @classmethod
    def singleton(cls, key: Key, c: Coefficient = 1) -> "FormalSum":
        return cls({key: c})

    @classmethod
    def zero(cls, algebra: str | None = None) -> "FormalSum":
        return cls({}, algebra)

    def bases(self) -> set[str]:
        return {k.basis for k in self.terms}

    def homogeneous_components(self) -> dict[int, "FormalSum"]:
        out: dict[int, dict] = {}
        for k, c in self.terms.items():
            out.setdefault(k.degree, {})[k] = c
        return {d: FormalSum(t, self.algebra) for d, t in sorted(out.items())}

    def map_keys(self, fn: Callable[[Key], Key]) -> "FormalSum":
        return FormalSum(((fn(k), c) for k, c in self.terms.items()))

    def render(self) -> str:
        return _render([(k.text(), c) for k, c in self.items()])

    def to_json_obj(self) -> list[dict]:
        return [
            {"algebra": k.algebra, "basis": k.basis, "index": k.text()[len(k.basis):],
             "num": c.numerator, "den": c.denominator}
            for k, c in self.items()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


class TensorSum(_Combination):
    """Element of a tensor power: a finite map ``(Key, ..., Key) -> Fraction``.

    All slots share one algebra; the arity is fixed by the first term.
    """

    __slots__ = ()

    @staticmethod
    def _algebra_of(key: tuple):
        tags = {k.algebra for k in key}
        if len(tags) != 1:
            raise AlgebraMismatchError(f"tensor slots mix algebras {sorted(tags)}")
        return tags.pop()

    @staticmethod
    def _sort_key(key: tuple):
        return (sum(k.degree for k in key), tuple(k.sort_key() for k in key))

    @property
    def arity(self) -> int | None:
        return len(next(iter(self.terms))) if self.terms else None

    def render(self) -> str:
        return _render([(" ⊗ ".join(k.text() for k in key), c) for key, c in self.items()])

    def to_json_obj(self) -> list[dict]:
        return [
            {"factors": [{"algebra": k.algebra, "basis": k.basis, "index": k.text()[len(k.basis):]}
                         for k in key],
             "num": c.numerator, "den": c.denominator}
            for key, c in self.items()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def tensor(*factors: FormalSum) -> TensorSum:
    """Tensor product of elements of one algebra."""
    terms: dict = {(): Fraction(1)}
    for f in factors:
        nxt: dict = {}
        for key, c in terms.items():
            for k, d in f.terms.items():
                nk = key + (k,)
                nxt[nk] = nxt.get(nk, 0) + c * d
        terms = nxt
    return TensorSum(terms)


def add(f, g):
    return f + g


def scale(c: Coefficient, f):
    return f * c


def extend_linear(op: Callable, f: _Combination):
    """``sum(c * op(k))`` over the terms of ``f``.

    ``op`` may return a FormalSum, a TensorSum or a rational; the result has
    the same kind.  An empty ``f`` yields ``Fraction(0)`` unless ``op``'s
    kind can be inferred, in which case callers should special-case zero.
    """
    total = None
    for k, c in f.terms.items():
        v = op(k)
        part = v * c
        total = part if total is None else total + part
    if total is None:
        return Fraction(0)
    return total


def linear_map(op: Callable[[object], _Combination], f: _Combination, kind=FormalSum) -> _Combination:
    """Accumulating linear extension that keeps the result type for zero input."""
    acc: dict = {}
    for k, c in f.terms.items():
        for k2, d in op(k).terms.items():
            acc[k2] = acc.get(k2, 0) + c * d
    return kind(acc)


def pair_diagonal(f: _Combination, g: _Combination, dual: Callable) -> Fraction:
    """``sum f[k] * g[dual(k)]`` -- the diagonal pairing of dual bases."""
    return sum((c * g.terms.get(dual(k), 0) for k, c in f.terms.items()), Fraction(0))
