"""Classical Sym, QSym and NSym.

The m, h, M and H structure maps run through the colored kernel over the
one-letter alphabet (compositions correspond to unary sentences through
their word lengths).  The ``direct_*`` functions implement the classical
formulas independently and exist to cross-check that correspondence.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from typing import Iterator

from . import sentences as sn
from .errors import AlgebraMismatchError, BasisError
from .free_module import FormalSum, Key
from .hopf import HopfAlgebra, NSymA, PSymA, QSymA, SymA
from .sentences import Alphabet
from .tableaux import unitriangular_inverse

Composition = tuple  # tuple[int, ...]
Partition = tuple

UNARY = Alphabet("a")


# -- compositions and partitions ---------------------------------------------

def partial_sums(alpha: Composition) -> set[int]:
    return set(itertools.accumulate(alpha))


def composition_refines(alpha: Composition, beta: Composition) -> bool:
    """alpha ⪯ beta: the partial sums of beta are among those of alpha."""
    return sum(alpha) == sum(beta) and partial_sums(beta) <= partial_sums(alpha)


def composition_refinements(beta: Composition) -> list[Composition]:
    return [sn.word_lengths(s) for s in sn.refinements(tuple("a" * k for k in beta))]


def composition_coarsenings(alpha: Composition) -> list[Composition]:
    return [sn.word_lengths(s) for s in sn.coarsenings(tuple("a" * k for k in alpha))]


def compositions(n: int) -> list[Composition]:
    return sn.compositions(n)


def sort_partition(alpha: Composition) -> Partition:
    return tuple(sorted(alpha, reverse=True))


def partitions(n: int, largest: int | None = None) -> list[Partition]:
    """Partitions of n in decreasing lexicographic order."""
    if n == 0:
        return [()]
    largest = n if largest is None else largest
    return [(k,) + rest for k in range(min(n, largest), 0, -1) for rest in partitions(n - k, k)]


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0])) if lam else ()


def _unary(alpha: Composition) -> tuple[str, ...]:
    return tuple("a" * k for k in alpha)


# -- Kostka numbers by horizontal strips ---------------------------------------

def _horizontal_strips(lam: Partition, k: int) -> Iterator[Partition]:
    """Partitions nu inside lam with lam/nu a horizontal strip of size k."""
    lam = list(lam)

    def grow(i: int, left: int, nu: list[int]):
        if i == len(lam):
            if left == 0:
                yield tuple(p for p in nu if p)
            return
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        for take in range(0, min(left, lam[i] - lower) + 1):
            yield from grow(i + 1, left - take, nu + [lam[i] - take])

    yield from grow(0, k, [])


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Composition) -> int:
    """Number of SSYT of shape lam and content mu (mu a weak composition)."""
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    return sum(kostka(nu, mu[:-1]) for nu in _horizontal_strips(lam, mu[-1]))


def ssyt(lam: Partition, max_entry: int) -> list[tuple[tuple[int, ...], ...]]:
    """All semistandard Young tableaux of shape lam with entries <= max_entry."""
    out = []

    def rows_below(r: int, acc: list):
        if r == len(lam):
            out.append(tuple(acc))
            return
        above = acc[-1] if acc else None
        for row in itertools.combinations_with_replacement(range(1, max_entry + 1), lam[r]):
            if above is None or all(a < b for a, b in zip(above, row)):
                rows_below(r + 1, acc + [row])

    rows_below(0, [])
    return out


@lru_cache(maxsize=None)
def _inverse_kostka(n: int) -> dict:
    order = partitions(n)
    return unitriangular_inverse(order, kostka)


# -- the classical algebras -----------------------------------------------------

class _Classical(HopfAlgebra):
    """Classical algebra whose native bases delegate to a unary colored one."""

    def __init__(self):
        super().__init__()

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"

    def __call__(self, basis: str, *parts: int, c=1) -> FormalSum:
        return self.element(basis, parts, c)

    def _bridge(self, kernel, kernel_basis: str, basis: str):
        """Native rules for ``basis`` computed by ``kernel`` on unary indices."""
        tag = self.tag

        def down(k: Key) -> FormalSum:
            return FormalSum.singleton(Key(kernel.tag, kernel_basis, _unary(k.index)))

        def up(key: Key) -> Key:
            return Key(tag, basis, sn.word_lengths(key.index))

        def product(k1, k2):
            return {up(k): c for k, c in kernel.product(down(k1), down(k2)).terms.items()}

        def coproduct(k):
            return {(up(a), up(b)): c for (a, b), c in kernel.coproduct(down(k)).terms.items()}

        def antipode(k):
            return {up(k2): c for k2, c in kernel.antipode(down(k)).terms.items()}

        self._natives[basis] = (product, coproduct, antipode)


class QSym(_Classical):
    tag = "QSym"
    default_basis = "M"

    def __init__(self):
        super().__init__()
        self.kernel = QSymA(UNARY)
        self._bridge(self.kernel, "M", "M")
        self._conversions["F", "M"] = lambda k: {Key(self.tag, "M", b): 1 for b in composition_refinements(k.index)}
        self._conversions["M", "F"] = lambda k: {
            Key(self.tag, "F", b): (-1) ** (len(b) - len(k.index)) for b in composition_refinements(k.index)}

    def basis_keys(self, n, basis=None):
        return [Key(self.tag, basis or "M", a) for a in compositions(n)]


class NSym(_Classical):
    tag = "NSym"
    default_basis = "H"

    def __init__(self):
        super().__init__()
        self.kernel = NSymA(UNARY)
        self._bridge(self.kernel, "H", "H")
        t = self.tag
        self._conversions["R", "H"] = lambda k: {
            Key(t, "H", b): (-1) ** (len(k.index) - len(b)) for b in composition_coarsenings(k.index)}
        self._conversions["H", "R"] = lambda k: {Key(t, "R", b): 1 for b in composition_coarsenings(k.index)}
        self._conversions["E", "H"] = lambda k: {
            Key(t, "H", b): (-1) ** (sum(k.index) - len(b)) for b in composition_refinements(k.index)}
        self._conversions["H", "E"] = lambda k: {
            Key(t, "E", a): (-1) ** (sum(k.index) - len(a)) for a in composition_refinements(k.index)}
        self._natives["R"] = (self._ribbon_product, self._via_H_coproduct("R"), self._via_H_antipode("R"))

    def basis_keys(self, n, basis=None):
        return [Key(self.tag, basis or "H", a) for a in compositions(n)]

    def _ribbon_product(self, k1, k2):
        a, b = k1.index, k2.index
        if not a or not b:
            return {Key(self.tag, "R", a + b): 1}
        out = {Key(self.tag, "R", a + b): 1}
        near = Key(self.tag, "R", a[:-1] + (a[-1] + b[0],) + b[1:])
        out[near] = out.get(near, 0) + 1
        return out

    def _via_H_coproduct(self, basis):
        def rule(k):
            return self.convert_tensor(self.coproduct(self.convert(FormalSum.singleton(k), "H")), basis).terms
        return rule

    def _via_H_antipode(self, basis):
        def rule(k):
            return self.convert(self.antipode(self.convert(FormalSum.singleton(k), "H")), basis).terms
        return rule


class Sym(_Classical):
    tag = "Sym"
    default_basis = "m"

    def __init__(self):
        super().__init__()
        self.kernel_m = SymA(UNARY)
        self.kernel_h = PSymA(UNARY)
        self._bridge(self.kernel_m, "m", "m")
        self._bridge(self.kernel_h, "h", "h")
        t = self.tag
        self._conversions["s", "m"] = lambda k: {
            Key(t, "m", mu): kostka(k.index, mu) for mu in partitions(sum(k.index)) if kostka(k.index, mu)}
        self._conversions["m", "s"] = lambda k: {
            Key(t, "s", b): v for (a, b), v in _inverse_kostka(sum(k.index)).items() if a == k.index}
        self._conversions["h", "s"] = lambda k: {
            Key(t, "s", lam): kostka(lam, k.index) for lam in partitions(sum(k.index)) if kostka(lam, k.index)}
        self._conversions["s", "h"] = lambda k: {
            Key(t, "h", a): v for (a, b), v in _inverse_kostka(sum(k.index)).items() if b == k.index}
        self._conversions["e", "h"] = lambda k: self._swap_eh(k, "h")
        self._conversions["h", "e"] = lambda k: self._swap_eh(k, "e")

    def basis_keys(self, n, basis=None):
        return [Key(self.tag, basis or "m", lam) for lam in partitions(n)]

    def _swap_eh(self, k: Key, target: str) -> dict:
        # e_n = sum over compositions a of n of (-1)^(n - len(a)) h_sort(a), and symmetrically
        # with e and h exchanged; the product is taken in h and relabelled to avoid recursion
        out = self.unit("h")
        for part in k.index:
            single = FormalSum(((Key(self.tag, "h", sort_partition(a)), (-1) ** (part - len(a)))
                                for a in compositions(part)), self.tag)
            out = self.product(out, single)
        return {Key(self.tag, target, k2.index): c for k2, c in out.terms.items()}


SYM, QSYM, NSYM = Sym(), QSym(), NSym()


def omega(f: FormalSum) -> FormalSum:
    """The involution e_λ <-> h_λ, s_λ -> s_λ'."""
    if f.algebra not in (None, "Sym"):
        raise AlgebraMismatchError(f"omega acts on Sym, got {f.algebra}")
    swap = {"e": "h", "h": "e"}
    out = {}
    for k, c in f.terms.items():
        if k.basis in swap:
            out[Key("Sym", swap[k.basis], k.index)] = c
        elif k.basis == "s":
            out[Key("Sym", "s", conjugate(k.index))] = c
        else:
            raise BasisError(f"omega is defined here on the e, h and s bases, not {k.basis}")
    return FormalSum(out, "Sym")


def chi_classical(f: FormalSum) -> FormalSum:
    """NSym -> Sym, H_α -> h_sort(α)."""
    if f.algebra not in (None, "NSym"):
        raise AlgebraMismatchError(f"chi expects an NSym element, got {f.algebra}")
    f = NSYM.convert(f, "H")
    return FormalSum(((Key("Sym", "h", sort_partition(k.index)), c) for k, c in f.terms.items()), "Sym")


def iota_classical(f: FormalSum) -> FormalSum:
    """Sym -> QSym, m_λ -> sum of M_α over rearrangements α of λ."""
    if f.algebra not in (None, "Sym"):
        raise AlgebraMismatchError(f"iota expects a Sym element, got {f.algebra}")
    f = SYM.convert(f, "m")
    acc: dict = {}
    for k, c in f.terms.items():
        for alpha in sn.rearrangements(k.index):
            key = Key("QSym", "M", alpha)
            acc[key] = acc.get(key, 0) + c
    return FormalSum(acc, "QSym")


# -- direct classical formulas (independent cross-checks) -----------------------

def direct_m_product(lam: Partition, mu: Partition) -> Counter:
    """m_λ m_μ = Σ r m_ν, r counting pairs of weak sequences (α, β) with
    sort(α)=λ, sort(β)=μ and ν = α + β entrywise."""
    length = len(lam) + len(mu)
    alphas = set(itertools.permutations(lam + (0,) * (length - len(lam))))
    betas = set(itertools.permutations(mu + (0,) * (length - len(mu))))
    # count only sequences whose sum is a partition in decreasing order
    out: Counter = Counter()
    for a in alphas:
        for b in betas:
            nu = tuple(x + y for x, y in zip(a, b))
            stripped = tuple(x for x in nu if x)
            if stripped == nu[:len(stripped)] and list(stripped) == sorted(stripped, reverse=True):
                out[stripped] += 1
    return out


def direct_m_coproduct(lam: Partition) -> Counter:
    """Δ m_λ = Σ over splits of the multiset of parts."""
    counts = Counter(lam)
    parts = sorted(counts, reverse=True)
    out: Counter = Counter()
    for picks in itertools.product(*(range(counts[p] + 1) for p in parts)):
        left = tuple(itertools.chain.from_iterable([p] * k for p, k in zip(parts, picks)))
        right = tuple(itertools.chain.from_iterable([p] * (counts[p] - k) for p, k in zip(parts, picks)))
        out[left, right] += 1
    return out


def direct_h_product(lam: Partition, mu: Partition) -> Counter:
    return Counter({sort_partition(lam + mu): 1})


def direct_h_coproduct(lam: Partition) -> Counter:
    """Δ h_n = Σ h_k ⊗ h_{n-k}, extended multiplicatively."""
    out: Counter = Counter()
    for ks in itertools.product(*(range(n + 1) for n in lam)):
        left = sort_partition(tuple(k for k in ks if k))
        right = sort_partition(tuple(n - k for n, k in zip(lam, ks) if n - k))
        out[left, right] += 1
    return out


def direct_M_product(alpha: Composition, beta: Composition) -> Counter:
    """Quasishuffle of compositions; consecutive α_i, β_j may merge to α_i + β_j."""
    if not alpha:
        return Counter({beta: 1})
    if not beta:
        return Counter({alpha: 1})
    out: Counter = Counter()
    for c, n in direct_M_product(alpha[1:], beta).items():
        out[(alpha[0],) + c] += n
    for c, n in direct_M_product(alpha, beta[1:]).items():
        out[(beta[0],) + c] += n
    for c, n in direct_M_product(alpha[1:], beta[1:]).items():
        out[(alpha[0] + beta[0],) + c] += n
    return out


def direct_M_coproduct(alpha: Composition) -> Counter:
    return Counter({(alpha[:k], alpha[k:]): 1 for k in range(len(alpha) + 1)})


def direct_H_product(alpha: Composition, beta: Composition) -> Counter:
    return Counter({alpha + beta: 1})


def direct_H_coproduct(alpha: Composition) -> Counter:
    """Δ H_n = Σ H_k ⊗ H_{n-k}, extended multiplicatively (zero parts dropped)."""
    out: Counter = Counter()
    for ks in itertools.product(*(range(n + 1) for n in alpha)):
        left = tuple(k for k in ks if k)
        right = tuple(n - k for n, k in zip(alpha, ks) if n - k)
        out[left, right] += 1
    return out
