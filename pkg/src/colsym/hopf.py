"""The colored Hopf algebras NSym_A, QSym_A, PSym_A and Sym_A.

Every algebra is a :class:`HopfAlgebra` whose structure maps are given on
one or more *native* bases by combinatorial rules; other bases are reached
through registered change-of-basis maps.  Results come back in the basis
of the input whenever the input lives in a single basis.
"""

from __future__ import annotations

from collections import Counter, deque
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping

from . import sentences as sn
from . import tableaux
from .errors import AlgebraMismatchError, BasisError, NotSymmetricError
from .free_module import LEGAL_BASES, FormalSum, Key, TensorSum, make_key
from .sentences import Alphabet, Sentence, fmt_sentence

KeyRule = Callable[[Key], Mapping]


class HopfAlgebra:
    """Generic graded connected Hopf algebra over exact rationals.

    Subclasses fill ``_natives`` with ``basis -> (product, coproduct,
    antipode)`` key rules and ``_conversions`` with ``(src, dst) -> rule``.
    """

    tag: str = ""
    default_basis: str = ""

    def __init__(self):
        self._natives: dict[str, tuple[Callable, Callable, Callable]] = {}
        self._conversions: dict[tuple[str, str], KeyRule] = {}
        self._cache: dict = {}
        self._paths: dict = {}

    # -- construction ------------------------------------------------------

    @property
    def bases(self) -> tuple[str, ...]:
        return LEGAL_BASES[self.tag]

    def key(self, basis: str, index: Iterable) -> Key:
        key = make_key(self.tag, basis, index)
        self._validate_index(key)
        return key

    def _validate_index(self, key: Key) -> None:
        pass

    def element(self, basis: str, index: Iterable, c=1) -> FormalSum:
        return FormalSum.singleton(self.key(basis, index), c)

    def unit(self, basis: str | None = None) -> FormalSum:
        return FormalSum.singleton(Key(self.tag, basis or self.default_basis, ()))

    def zero(self) -> FormalSum:
        return FormalSum.zero(self.tag)

    def basis_keys(self, n: int, basis: str | None = None) -> list[Key]:
        raise NotImplementedError

    # -- helpers -----------------------------------------------------------

    def _check(self, f) -> None:
        if f.algebra is not None and f.algebra != self.tag:
            raise AlgebraMismatchError(f"{self.tag} operation applied to a {f.algebra} element")

    def _cached(self, name: str, rule: Callable, *args):
        slot = self._cache.setdefault(name, {})
        try:
            return slot[args]
        except KeyError:
            value = slot[args] = dict(rule(*args))
            return value

    @staticmethod
    def _single_basis(*fs: FormalSum) -> str | None:
        found = set().union(*(f.bases() for f in fs))
        return found.pop() if len(found) == 1 else None

    # -- change of basis ---------------------------------------------------

    def _path(self, src: str, dst: str) -> list[str]:
        if (src, dst) in self._paths:
            return self._paths[src, dst]
        prev = {src: None}
        queue = deque([src])
        while queue:
            b = queue.popleft()
            for (a, c) in self._conversions:
                if a == b and c not in prev:
                    prev[c] = b
                    queue.append(c)
        if dst not in prev:
            raise BasisError(f"no conversion from {src} to {dst} in {self.tag}")
        path = [dst]
        while path[-1] != src:
            path.append(prev[path[-1]])
        path.reverse()
        self._paths[src, dst] = path
        return path

    def _convert_key(self, key: Key, basis: str) -> Mapping[Key, Fraction]:
        if key.basis == basis:
            return {key: 1}

        def rule(key, basis):
            current = {key: Fraction(1)}
            path = self._path(key.basis, basis)
            for a, b in zip(path, path[1:]):
                step = self._conversions[a, b]
                nxt: dict = {}
                for k, c in current.items():
                    for k2, d in self._cached(f"conv:{a}>{b}", step, k).items():
                        nxt[k2] = nxt.get(k2, 0) + c * d
                current = nxt
            return current

        return self._cached(f"conv>{basis}", rule, key, basis)

    def convert(self, f: FormalSum, basis: str) -> FormalSum:
        self._check(f)
        if basis not in self.bases:
            raise BasisError(f"{self.tag} has no basis {basis!r}")
        acc: dict = {}
        for k, c in f.terms.items():
            for k2, d in self._convert_key(k, basis).items():
                acc[k2] = acc.get(k2, 0) + c * d
        return FormalSum(acc, self.tag)

    def convert_tensor(self, t: TensorSum, basis: str) -> TensorSum:
        acc: dict = {}
        for key, c in t.terms.items():
            partial = {(): c}
            for k in key:
                conv = self._convert_key(k, basis)
                partial = {p + (k2,): v * d for p, v in partial.items() for k2, d in conv.items()}
            for k, v in partial.items():
                acc[k] = acc.get(k, 0) + v
        return TensorSum(acc, self.tag)

    def _native_for(self, *fs: FormalSum) -> tuple[str, str | None]:
        """(basis to compute in, basis to return in or None)."""
        b = self._single_basis(*fs)
        if b in self._natives:
            return b, None
        return self.default_basis, b

    # -- structure maps ----------------------------------------------------

    def product(self, f: FormalSum, g: FormalSum) -> FormalSum:
        self._check(f)
        self._check(g)
        if not f or not g:
            return self.zero()
        work, back = self._native_for(f, g)
        f, g = self.convert(f, work), self.convert(g, work)
        rule = self._natives[work][0]
        acc: dict = {}
        for k1, c1 in f.terms.items():
            for k2, c2 in g.terms.items():
                for k, d in self._cached(f"prod:{work}", rule, k1, k2).items():
                    acc[k] = acc.get(k, 0) + c1 * c2 * d
        out = FormalSum(acc, self.tag)
        return self.convert(out, back) if back else out

    def product_many(self, *fs: FormalSum) -> FormalSum:
        out = self.unit()
        for f in fs:
            out = self.product(out, f)
        return out

    def coproduct(self, f: FormalSum) -> TensorSum:
        self._check(f)
        work, back = self._native_for(f)
        f = self.convert(f, work)
        rule = self._natives[work][1]
        acc: dict = {}
        for k, c in f.terms.items():
            for pair, d in self._cached(f"coprod:{work}", rule, k).items():
                acc[pair] = acc.get(pair, 0) + c * d
        out = TensorSum(acc, self.tag)
        return self.convert_tensor(out, back) if back else out

    def antipode(self, f: FormalSum) -> FormalSum:
        self._check(f)
        work, back = self._native_for(f)
        f = self.convert(f, work)
        rule = self._natives[work][2]
        acc: dict = {}
        for k, c in f.terms.items():
            for k2, d in self._cached(f"anti:{work}", rule, k).items():
                acc[k2] = acc.get(k2, 0) + c * d
        out = FormalSum(acc, self.tag)
        return self.convert(out, back) if back else out

    def counit(self, f: FormalSum) -> Fraction:
        self._check(f)
        return sum((c for k, c in f.terms.items() if not k.index), Fraction(0))

    # -- tensor helpers ----------------------------------------------------

    def tensor_product(self, s: TensorSum, t: TensorSum) -> TensorSum:
        """Slotwise product in the tensor-power algebra."""
        acc: dict = {}
        for k1, c1 in s.terms.items():
            for k2, c2 in t.terms.items():
                partial = {(): c1 * c2}
                for a, b in zip(k1, k2):
                    prod = self.product(FormalSum.singleton(a), FormalSum.singleton(b))
                    partial = {p + (k,): v * d for p, v in partial.items() for k, d in prod.terms.items()}
                for k, v in partial.items():
                    acc[k] = acc.get(k, 0) + v
        return TensorSum(acc, self.tag)

    def apply_slot(self, t: TensorSum, slot: int, op: Callable[[FormalSum], object]) -> TensorSum:
        """Apply a linear map to one slot; ``op`` returns a FormalSum,
        TensorSum (slot expands) or rational (slot disappears)."""
        acc: dict = {}
        for key, c in t.terms.items():
            v = op(FormalSum.singleton(key[slot]))
            left, right = key[:slot], key[slot + 1:]
            if isinstance(v, FormalSum):
                items = ((left + (k,) + right, d) for k, d in v.terms.items())
            elif isinstance(v, TensorSum):
                items = ((left + k + right, d) for k, d in v.terms.items())
            else:
                items = [(left + right, Fraction(v))] if v else []
            for k, d in items:
                acc[k] = acc.get(k, 0) + c * d
        if acc and all(len(k) == 1 for k in acc):
            return FormalSum({k[0]: v for k, v in acc.items()}, self.tag)
        return TensorSum(acc, self.tag)

    def multiply_out(self, t: TensorSum) -> FormalSum:
        """The multiplication map applied to a tensor of any arity."""
        acc = self.zero()
        for key, c in t.terms.items():
            acc = acc + self.product_many(*(FormalSum.singleton(k) for k in key)) * c
        return acc


# -- colored algebras ---------------------------------------------------------

class _Colored(HopfAlgebra):
    psentence_bases: tuple[str, ...] = ()

    def __init__(self, alphabet: Alphabet):
        super().__init__()
        self.alphabet = alphabet

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self.alphabet)!r})"

    def _validate_index(self, key: Key) -> None:
        self.alphabet.check_sentence(key.index)
        if key.basis in self.psentence_bases and not sn.is_psentence(key.index, self.alphabet):
            canon = sn.sort_sentence(key.index, self.alphabet)
            raise BasisError(f"{key.basis}{fmt_sentence(key.index)} is not indexed by a p-sentence; "
                             f"did you mean {key.basis}{fmt_sentence(canon)}?")

    def sort(self, sentence) -> Sentence:
        return sn.sort_sentence(sentence, self.alphabet)

    def __call__(self, basis: str, *words: str, c=1) -> FormalSum:
        """Shorthand: ``alg("h", "aba", "c")``."""
        return self.element(basis, words, c)


class NSymA(_Colored):
    tag = "NSymA"
    default_basis = "H"

    def __init__(self, alphabet: Alphabet):
        super().__init__(alphabet)
        self._natives["H"] = (self._product_H, self._coproduct_H, self._antipode_H)

    def basis_keys(self, n, basis=None):
        return [Key(self.tag, basis or "H", i) for i in sn.enumerate_sentences(n, self.alphabet)]

    def _product_H(self, k1, k2):
        return {Key(self.tag, "H", k1.index + k2.index): 1}

    def _coproduct_H(self, k):
        out: dict = {}
        for q, p in sn.right_splittings(k.index):
            pair = (Key(self.tag, "H", sn.flatten(q)), Key(self.tag, "H", sn.flatten(p)))
            out[pair] = out.get(pair, 0) + 1
        return out

    def _antipode_H(self, k):
        out: dict = {}
        for j in sn.refinements(sn.reversal(k.index)):
            key = Key(self.tag, "H", j)
            out[key] = out.get(key, 0) + (-1) ** len(j)
        return out


class QSymA(_Colored):
    tag = "QSymA"
    default_basis = "M"

    def __init__(self, alphabet: Alphabet):
        super().__init__(alphabet)
        self._natives["M"] = (self._product_M, self._coproduct_M, self._antipode_M)

    def basis_keys(self, n, basis=None):
        return [Key(self.tag, "M", i) for i in sn.enumerate_sentences(n, self.alphabet)]

    def _product_M(self, k1, k2):
        return {Key(self.tag, "M", s): c for s, c in sn.quasishuffles(k1.index, k2.index).items()}

    def _coproduct_M(self, k):
        i = k.index
        return {(Key(self.tag, "M", i[:n]), Key(self.tag, "M", i[n:])): 1 for n in range(len(i) + 1)}

    def _antipode_M(self, k):
        sign = (-1) ** len(k.index)
        out: dict = {}
        for c in sn.coarsenings(k.index):
            key = Key(self.tag, "M", sn.reversal(c))
            out[key] = out.get(key, 0) + sign
        return out


class PSymA(_Colored):
    tag = "PSymA"
    default_basis = "h"
    psentence_bases = ("h", "s")

    def __init__(self, alphabet: Alphabet):
        super().__init__(alphabet)
        self._natives["h"] = (self._product_h, self._coproduct_h, self._antipode_h)
        self._conversions["s", "h"] = lambda k: tableaux.schur_in_h(k.index, self.alphabet).terms
        self._conversions["h", "s"] = lambda k: tableaux.h_in_schur(k.index, self.alphabet).terms

    def basis_keys(self, n, basis=None):
        return [Key(self.tag, basis or "h", p) for p in sn.enumerate_psentences(n, self.alphabet)]

    def _product_h(self, k1, k2):
        return {Key(self.tag, "h", self.sort(k1.index + k2.index)): 1}

    def _coproduct_h(self, k):
        out: dict = {}
        for q, p in sn.right_splittings(k.index):
            pair = (Key(self.tag, "h", self.sort(q)), Key(self.tag, "h", self.sort(p)))
            out[pair] = out.get(pair, 0) + 1
        return out

    def _antipode_h(self, k):
        out: dict = {}
        for j in sn.refinements(k.index):
            key = Key(self.tag, "h", self.sort(j))
            out[key] = out.get(key, 0) + (-1) ** len(j)
        return out


class SymA(_Colored):
    tag = "SymA"
    default_basis = "m"
    psentence_bases = ("m", "sstar")

    def __init__(self, alphabet: Alphabet, qsym: QSymA | None = None):
        super().__init__(alphabet)
        self.qsym = qsym or QSymA(alphabet)
        self._natives["m"] = (self._product_m, self._coproduct_m, self._antipode_m)
        self._conversions["sstar", "m"] = lambda k: tableaux.dual_schur_in_m(k.index, self.alphabet).terms
        self._conversions["m", "sstar"] = lambda k: tableaux.m_in_dual_schur(k.index, self.alphabet).terms

    def basis_keys(self, n, basis=None):
        return [Key(self.tag, basis or "m", p) for p in sn.enumerate_psentences(n, self.alphabet)]

    def product_candidates(self, p: Sentence, s: Sentence) -> set[Sentence]:
        """P-sentences Q that can have r(P, S, Q) > 0: each word of Q is a
        word of P, a word of S, or a word of P followed by a word of S."""
        out: set[Sentence] = set()

        def match(idx: int, used: frozenset, words: tuple):
            if idx == len(p):
                rest = tuple(w for n, w in enumerate(s) if n not in used)
                out.add(self.sort(words + rest))
                return
            match(idx + 1, used, words + (p[idx],))
            for n, w in enumerate(s):
                if n not in used:
                    match(idx + 1, used | {n}, words + (p[idx] + w,))

        match(0, frozenset(), ())
        return out

    def _product_m(self, k1, k2):
        p, s = k1.index, k2.index
        out = {}
        for q in self.product_candidates(p, s):
            r = sn.r_coefficient(p, s, q, self.alphabet)
            if r:
                out[Key(self.tag, "m", q)] = r
        return out

    def _coproduct_m(self, k):
        p = k.index
        return {(Key(self.tag, "m", q), Key(self.tag, "m", sn.multiset_difference(p, q, self.alphabet))): 1
                for q in sn.submultisets(p, self.alphabet)}

    def _antipode_m(self, k):
        # the QSym_A antipode restricts to Sym_A; no closed m-basis rule is used
        return m_from_M(self.qsym.antipode(iota(FormalSum.singleton(k), self)), self).terms


# -- morphisms ------------------------------------------------------------------

def chi(f: FormalSum, target: PSymA) -> FormalSum:
    """Forgetful map NSym_A -> PSym_A, H_I -> h_sort(I)."""
    if f.algebra not in (None, "NSymA"):
        raise AlgebraMismatchError(f"chi expects an NSymA element, got {f.algebra}")
    return FormalSum(((Key("PSymA", "h", target.sort(k.index)), c) for k, c in f.terms.items()), "PSymA")


def iota(f: FormalSum, source: SymA) -> FormalSum:
    """Inclusion Sym_A -> QSym_A, m_P -> sum of M_I over rearrangements I of P."""
    if f.algebra not in (None, "SymA"):
        raise AlgebraMismatchError(f"iota expects a SymA element, got {f.algebra}")
    f = source.convert(f, "m")
    acc: dict = {}
    for k, c in f.terms.items():
        for i in sn.rearrangements(k.index):
            key = Key("QSymA", "M", i)
            acc[key] = acc.get(key, 0) + c
    return FormalSum(acc, "QSymA")


def m_from_M(g: FormalSum, target: SymA) -> FormalSum:
    """Inverse of :func:`iota` on symmetric elements.

    Raises NotSymmetricError naming two sentences of one sort-class whose
    coefficients differ.
    """
    if g.algebra not in (None, "QSymA"):
        raise AlgebraMismatchError(f"m_from_M expects a QSymA element, got {g.algebra}")
    classes: dict[Sentence, Fraction] = {}
    for k in sorted(g.terms, key=Key.sort_key):
        p = target.sort(k.index)
        if p in classes:
            continue
        coeff = g.terms[k]
        for i in sn.rearrangements(p):
            other = g.coefficient(Key("QSymA", "M", i))
            if other != coeff:
                raise NotSymmetricError(
                    f"not symmetric: M{fmt_sentence(k.index)} has coefficient {coeff} "
                    f"but M{fmt_sentence(i)} has {other}",
                    witness=(k.index, i))
        classes[p] = coeff
    return FormalSum({Key("SymA", "m", p): c for p, c in classes.items()}, "SymA")


def tensor_m_from_M(t: TensorSum, target: SymA) -> TensorSum:
    """Re-express a QSym_A tensor of any arity in the m basis, slot by slot."""
    classes: dict[tuple, Fraction] = {}
    for key in sorted(t.terms, key=lambda k: tuple(x.sort_key() for x in k)):
        sorted_key = tuple(target.sort(k.index) for k in key)
        if sorted_key in classes:
            continue
        coeff = t.terms[key]
        combos = [()]
        for p in sorted_key:
            combos = [c + (i,) for c in combos for i in sn.rearrangements(p)]
        for combo in combos:
            other = t.coefficient(tuple(Key("QSymA", "M", i) for i in combo))
            if other != coeff:
                raise NotSymmetricError(
                    "tensor not symmetric in every slot: "
                    f"{' ⊗ '.join(fmt_sentence(k.index) for k in key)} vs "
                    f"{' ⊗ '.join(map(fmt_sentence, combo))}",
                    witness=(tuple(k.index for k in key), combo))
        classes[sorted_key] = coeff
    return TensorSum({tuple(Key("SymA", "m", p) for p in key): c for key, c in classes.items()}, "SymA")


_UNCOLORED = {"NSymA": ("NSym", "H"), "QSymA": ("QSym", "M"), "PSymA": ("Sym", "h"), "SymA": ("Sym", "m")}


def _arrangements(parts: Iterable) -> int:
    parts = tuple(parts)
    out = factorial(len(parts))
    for n in Counter(parts).values():
        out //= factorial(n)
    return out


def restriction_factor(p: Sentence) -> int:
    """Number of rearrangements of ``p`` over that of its word lengths.

    The uncoloring of QSym_A sends the m_P summands of Sym_A to this many
    copies of m_{wℓ(P)}."""
    return _arrangements(p) // _arrangements(sn.word_lengths(p))


def uncolor_index(f: FormalSum, source: _Colored) -> FormalSum:
    """Index map I -> wℓ(I) into the classical algebra, on the default basis."""
    if f.algebra is None:
        return FormalSum.zero()
    if f.algebra != source.tag:
        raise AlgebraMismatchError(f"uncolor: element of {f.algebra} given with {source.tag}")
    tag, basis = _UNCOLORED[source.tag]
    f = source.convert(f, source.default_basis)
    return FormalSum(((Key(tag, basis, sn.word_lengths(k.index)), c) for k, c in f.terms.items()), tag)


def uncolor(f: FormalSum, source: _Colored) -> FormalSum:
    """Uncoloring into the classical algebra.

    H_I, M_I and h_P go to the basis element indexed by their word lengths.
    On Sym_A the map is the restriction of the QSym_A one, so m_P goes to
    ``restriction_factor(P)`` times m_{wℓ(P)}; the factor is 1 for one color.
    """
    if f.algebra != "SymA":
        return uncolor_index(f, source)
    f = source.convert(f, "m")
    return FormalSum(((Key("Sym", "m", sn.word_lengths(k.index)), c * restriction_factor(k.index))
                      for k, c in f.terms.items()), "Sym")
