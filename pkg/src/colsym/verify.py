"""Exhaustive verification of the Hopf-algebra identities at bounded degree.

Every check walks all basis elements (or pairs, or triples) in increasing
total degree and then canonical order, and stops at the first failure, so
a reported witness is the smallest counterexample.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Iterator

from . import classical as cl
from . import hopf
from . import poly
from . import sentences as sn
from . import tableaux
from .algebras import Algebras
from .errors import AlphabetError, ColsymError, ConfigError
from .free_module import FormalSum, Key, TensorSum
from .sentences import Alphabet

DEFAULT_CAP = 100_000


@dataclass
class CheckResult:
    name: str
    statement: str
    passed: bool
    cases: int
    witness: str | None = None
    detail: str | None = None


@dataclass
class Report:
    alphabet: str
    max_degree: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_text(self) -> str:
        lines = [f"verify alphabet={self.alphabet} max-degree={self.max_degree}"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status} {r.name} [{r.cases} cases] {r.statement}")
            if not r.passed:
                lines.append(f"  witness: {r.witness}")
                if r.detail:
                    lines.append(f"  {r.detail}")
        failed = sum(not r.passed for r in self.results)
        lines.append(f"{len(self.results) - failed} passed, {failed} failed")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"alphabet": self.alphabet, "max_degree": self.max_degree, "passed": self.passed,
                           "checks": [asdict(r) for r in self.results]}, indent=2) + "\n"


class _Failure(Exception):
    def __init__(self, witness: str, detail: str):
        super().__init__(witness)
        self.witness = witness
        self.detail = detail


class _Context:
    def __init__(self, algebras: Algebras, max_degree: int):
        self.A = algebras
        self.d = max_degree
        self.colored = (algebras.nsym, algebras.qsym, algebras.psym, algebras.sym)
        self._keys: dict = {}

    def keys(self, alg, n: int) -> list[Key]:
        if (alg.tag, n) not in self._keys:
            self._keys[alg.tag, n] = sorted(alg.basis_keys(n), key=Key.sort_key)
        return self._keys[alg.tag, n]

    def upto(self, alg) -> Iterator[FormalSum]:
        for n in range(self.d + 1):
            for k in self.keys(alg, n):
                yield FormalSum.singleton(k)

    def tuples(self, algs: tuple, total: int | None = None) -> Iterator[tuple[FormalSum, ...]]:
        """Tuples of basis elements, one per algebra, by increasing total degree."""
        totals = range(self.d + 1) if total is None else [total]
        for t in totals:
            for degs in _weak_compositions(t, len(algs)):
                yield from _product_of(
                    [[FormalSum.singleton(k) for k in self.keys(a, n)] for a, n in zip(algs, degs)])


def _weak_compositions(t: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (t,)
        return
    for first in range(t + 1):
        for rest in _weak_compositions(t - first, parts - 1):
            yield (first,) + rest


def _product_of(lists: list[list]) -> Iterator[tuple]:
    if not lists:
        yield ()
        return
    for x in lists[0]:
        for rest in _product_of(lists[1:]):
            yield (x,) + rest


def _show(*xs) -> str:
    return ", ".join(x.render() if hasattr(x, "render") else str(x) for x in xs)


def _expect(lhs, rhs, *witness, what: str = "") -> None:
    if lhs != rhs:
        lhs_s = lhs.render() if hasattr(lhs, "render") else str(lhs)
        rhs_s = rhs.render() if hasattr(rhs, "render") else str(rhs)
        raise _Failure(_show(*witness), f"{what}: {lhs_s} != {rhs_s}" if what else f"{lhs_s} != {rhs_s}")


def _tensor_map(t: TensorSum, fn: Callable[[FormalSum], FormalSum]) -> TensorSum:
    """Apply a linear map to every slot of a tensor."""
    acc: dict = {}
    for key, c in t.terms.items():
        partial = {(): c}
        for k in key:
            img = fn(FormalSum.singleton(k))
            partial = {p + (k2,): v * d for p, v in partial.items() for k2, d in img.terms.items()}
        for k, v in partial.items():
            acc[k] = acc.get(k, 0) + v
    return TensorSum(acc)


# -- the checks --------------------------------------------------------------

def _assoc(ctx: _Context) -> Iterator[None]:
    for alg in ctx.colored:
        for x, y, z in ctx.tuples((alg, alg, alg)):
            _expect(alg.product(alg.product(x, y), z), alg.product(x, alg.product(y, z)), x, y, z)
            yield


def _coassoc(ctx: _Context) -> Iterator[None]:
    for alg in ctx.colored:
        for x in ctx.upto(alg):
            d = alg.coproduct(x)
            _expect(alg.apply_slot(d, 0, alg.coproduct), alg.apply_slot(d, 1, alg.coproduct), x)
            yield


def _counit_laws(ctx: _Context) -> Iterator[None]:
    for alg in ctx.colored:
        one = alg.unit()
        _expect(alg.counit(one), 1, one, what="counit of the unit")
        for x in ctx.upto(alg):
            d = alg.coproduct(x)
            _expect(alg.apply_slot(d, 0, alg.counit), x, x, what="(ε⊗id)Δ")
            _expect(alg.apply_slot(d, 1, alg.counit), x, x, what="(id⊗ε)Δ")
            _expect(alg.product(one, x), x, x, what="1·x")
            _expect(alg.product(x, one), x, x, what="x·1")
            yield


def _bialgebra(ctx: _Context) -> Iterator[None]:
    for alg in ctx.colored:
        for x, y in ctx.tuples((alg, alg)):
            xy = alg.product(x, y)
            _expect(alg.coproduct(xy), alg.tensor_product(alg.coproduct(x), alg.coproduct(y)), x, y, what="Δ(xy)")
            _expect(alg.counit(xy), alg.counit(x) * alg.counit(y), x, y, what="ε(xy)")
            yield


def _antipode_axiom(ctx: _Context) -> Iterator[None]:
    for alg in ctx.colored:
        for x in ctx.upto(alg):
            d = alg.coproduct(x)
            expected = alg.unit() * alg.counit(x)
            _expect(alg.multiply_out(alg.apply_slot(d, 0, alg.antipode)), expected, x, what="μ(S⊗id)Δ")
            _expect(alg.multiply_out(alg.apply_slot(d, 1, alg.antipode)), expected, x, what="μ(id⊗S)Δ")
            yield


def _antipode_squared(ctx: _Context) -> Iterator[None]:
    # PSymA and SymA are commutative; with one color NSymA is cocommutative and QSymA commutative
    A = ctx.A
    algs = ctx.colored if len(A.alphabet) == 1 else (A.psym, A.sym)
    for alg in algs:
        for x in ctx.upto(alg):
            _expect(alg.antipode(alg.antipode(x)), x, x)
            yield


def _dual_pairs(ctx: _Context):
    A = ctx.A
    return ((A.nsym, A.qsym), (A.psym, A.sym))


def _duality_product(ctx: _Context) -> Iterator[None]:
    A = ctx.A
    for b_alg, a_alg in _dual_pairs(ctx):
        for n in range(ctx.d + 1):
            cop_a = {x: a_alg.coproduct(x) for x in (FormalSum.singleton(k) for k in ctx.keys(a_alg, n))}
            for b1, b2 in ctx.tuples((b_alg, b_alg), n):
                prod = b_alg.product(b1, b2)
                bb = TensorSum({tuple(next(iter(f.terms)) for f in (b1, b2)): 1})
                for a, da in cop_a.items():
                    _expect(A.pair(prod, a), A.pair(bb, da), b1, b2, a, what="<b1·b2, a> vs <b1⊗b2, Δa>")
                    yield
            cop_b = {x: b_alg.coproduct(x) for x in (FormalSum.singleton(k) for k in ctx.keys(b_alg, n))}
            for a1, a2 in ctx.tuples((a_alg, a_alg), n):
                prod = a_alg.product(a1, a2)
                aa = TensorSum({tuple(next(iter(f.terms)) for f in (a1, a2)): 1})
                for b, db in cop_b.items():
                    _expect(A.pair(db, aa), A.pair(b, prod), b, a1, a2, what="<Δb, a1⊗a2> vs <b, a1·a2>")
                    yield


def _duality_antipode(ctx: _Context) -> Iterator[None]:
    A = ctx.A
    for b_alg, a_alg in _dual_pairs(ctx):
        for n in range(ctx.d + 1):
            s_a = {a: a_alg.antipode(a) for a in (FormalSum.singleton(k) for k in ctx.keys(a_alg, n))}
            for k in ctx.keys(b_alg, n):
                b = FormalSum.singleton(k)
                sb = b_alg.antipode(b)
                for a, sa in s_a.items():
                    _expect(A.pair(sb, a), A.pair(b, sa), b, a, what="<S b, a> vs <b, S a>")
                    yield


def _chi_morphism(ctx: _Context) -> Iterator[None]:
    A = ctx.A
    for x, y in ctx.tuples((A.nsym, A.nsym)):
        _expect(A.chi(A.nsym.product(x, y)), A.psym.product(A.chi(x), A.chi(y)), x, y, what="χ(xy)")
        yield
    for x in ctx.upto(A.nsym):
        _expect(_tensor_map(A.nsym.coproduct(x), A.chi), A.psym.coproduct(A.chi(x)), x, what="Δχ")
        _expect(A.chi(A.nsym.antipode(x)), A.psym.antipode(A.chi(x)), x, what="χS")
        yield


def _adjointness(ctx: _Context) -> Iterator[None]:
    A = ctx.A
    for n in range(ctx.d + 1):
        for ki in ctx.keys(A.nsym, n):
            h = FormalSum.singleton(ki)
            ch = A.chi(h)
            for kp in ctx.keys(A.sym, n):
                m = FormalSum.singleton(kp)
                _expect(A.pair(ch, m), A.pair(h, A.iota(m)), h, m, what="<χ(H), m> vs <H, ι(m)>")
                yield


def _diagram(ctx: _Context) -> Iterator[None]:
    A = ctx.A
    for x in ctx.upto(A.nsym):
        _expect(A.uncolor(A.chi(x)), A.chi(A.uncolor(x)), x, what="υχ vs χυ")
        yield
    for x in ctx.upto(A.sym):
        _expect(A.uncolor(A.iota(x)), A.iota(A.uncolor(x)), x, what="υι vs ιυ")
        yield


def _syma_closure(ctx: _Context) -> Iterator[None]:
    A = ctx.A
    try:
        for x in ctx.upto(A.sym):
            ix = A.iota(x)
            _expect(A.m_from_M(A.qsym.antipode(ix)), A.sym.antipode(x), x, what="S")
            _expect(hopf.tensor_m_from_M(A.qsym.coproduct(ix), A.sym), A.sym.coproduct(x), x, what="Δ")
            yield
        for x, y in ctx.tuples((A.sym, A.sym)):
            _expect(A.m_from_M(A.qsym.product(A.iota(x), A.iota(y))), A.sym.product(x, y), x, y, what="product")
            yield
    except ColsymError as err:
        raise _Failure(str(getattr(err, "witness", "")), str(err)) from err


def _classical_of(counter: Counter, tag: str, basis: str) -> FormalSum:
    return FormalSum({Key(tag, basis, k): c for k, c in counter.items()}, tag)


def _classical_tensor(counter: Counter, tag: str, basis: str) -> TensorSum:
    return TensorSum({(Key(tag, basis, a), Key(tag, basis, b)): c for (a, b), c in counter.items()}, tag)


def _unary_specialization(ctx: _Context) -> Iterator[None]:
    U = Algebras(next(iter(ctx.A.alphabet)))
    direct = {
        "NSymA": ("NSym", "H", cl.direct_H_product, cl.direct_H_coproduct),
        "QSymA": ("QSym", "M", cl.direct_M_product, cl.direct_M_coproduct),
        "PSymA": ("Sym", "h", cl.direct_h_product, cl.direct_h_coproduct),
        "SymA": ("Sym", "m", cl.direct_m_product, cl.direct_m_coproduct),
    }
    uctx = _Context(U, ctx.d)
    for alg in uctx.colored:
        tag, basis, prod, coprod = direct[alg.tag]
        for x, y in uctx.tuples((alg, alg)):
            wx, wy = (sn.word_lengths(next(iter(f.terms)).index) for f in (x, y))
            _expect(U.uncolor(alg.product(x, y)), _classical_of(prod(wx, wy), tag, basis), x, y, what="product")
            yield
        for x in uctx.upto(alg):
            wx = sn.word_lengths(next(iter(x.terms)).index)
            _expect(_tensor_map(alg.coproduct(x), U.uncolor), _classical_tensor(coprod(wx), tag, basis), x,
                    what="coproduct")
            yield
    for n in range(ctx.d + 1):
        order = tableaux.kostka_order(n, U.alphabet)
        for p in order:
            lam = sn.word_lengths(p)
            tableaux_of_shape = cl.ssyt(lam, n)
            for q in order:
                mu = sn.word_lengths(q)
                by_enum = sum(1 for t in tableaux_of_shape if _content(t, len(mu)) == mu)
                colored = tableaux.colored_kostka(p, q, U.alphabet)
                _expect(colored, by_enum, FormalSum.singleton(Key("SymA", "sstar", p)),
                        FormalSum.singleton(Key("SymA", "m", q)), what="colored vs enumerated Kostka")
                _expect(cl.kostka(lam, mu), by_enum, f"K{lam},{mu}", what="strip vs enumerated Kostka")
                yield


def _content(t: tuple, length: int) -> tuple:
    counts = Counter(e for row in t for e in row)
    if any(e > length for e in counts):
        return ()
    return tuple(counts.get(i, 0) for i in range(1, length + 1))


def _oracle(ctx: _Context) -> Iterator[None]:
    A = ctx.A
    for x, y in ctx.tuples((A.qsym, A.qsym)):
        i, j = (next(iter(f.terms)).index for f in (x, y))
        slots = len(i) + len(j)
        p = poly.poly_mul(poly.realize_M(i, slots), poly.realize_M(j, slots))
        _expect(poly.to_M(p), A.qsym.product(x, y), x, y, what="realized product")
        yield
    for x, y in ctx.tuples((A.sym, A.sym)):
        p_, q_ = (next(iter(f.terms)).index for f in (x, y))
        slots = len(p_) + len(q_)
        p = poly.poly_mul(poly.realize_m(p_, slots), poly.realize_m(q_, slots))
        _expect(poly.to_m(p, A.alphabet), A.sym.product(x, y), x, y, what="realized product")
        yield


def _kostka_unitriangular(ctx: _Context) -> Iterator[None]:
    for n in range(ctx.d + 1):
        order, rows = tableaux.kostka_matrix(n, ctx.A.alphabet)
        for i, p in enumerate(order):
            for j, q in enumerate(order):
                expected = 1 if i == j else rows[i][j] if j > i else 0
                _expect(rows[i][j], expected, FormalSum.singleton(Key("SymA", "sstar", p)),
                        FormalSum.singleton(Key("SymA", "m", q)), what="Kostka entry")
                yield


def _schur_duality(ctx: _Context) -> Iterator[None]:
    A = ctx.A
    for n in range(ctx.d + 1):
        order = tableaux.kostka_order(n, A.alphabet)
        for p in order:
            s = A.psym.element("s", p)
            for q in order:
                dual = A.sym.element("sstar", q)
                _expect(A.pair(s, dual), Fraction(p == q), s, dual, what="<s_P, s*_Q>")
                yield


CHECKS: dict[str, tuple[str, Callable[[_Context], Iterator[None]]]] = {
    "assoc": ("(xy)z = x(yz) in NSymA, QSymA, PSymA, SymA", _assoc),
    "coassoc": ("(Δ⊗id)Δ = (id⊗Δ)Δ, compared as expanded triple tensors", _coassoc),
    "counit-laws": ("(ε⊗id)Δ = id = (id⊗ε)Δ, ε(1) = 1 and 1·x = x = x·1", _counit_laws),
    "bialgebra-compat": ("Δ(xy) = Δ(x)Δ(y) and ε(xy) = ε(x)ε(y)", _bialgebra),
    "antipode-axiom": ("μ(S⊗id)Δ = ηε = μ(id⊗S)Δ", _antipode_axiom),
    "antipode-squared-commutative": ("S∘S = id on the commutative algebras (and their duals when |A| = 1)",
                                     _antipode_squared),
    "duality-product-coproduct": ("<b1·b2, a> = <b1⊗b2, Δa> and <Δb, a1⊗a2> = <b, a1·a2> for H/M and h/m",
                                  _duality_product),
    "duality-antipode": ("<S b, a> = <b, S a> for H/M and h/m", _duality_antipode),
    "chi-morphism": ("χ: NSymA -> PSymA preserves product, coproduct and antipode", _chi_morphism),
    "adjointness": ("<χ(H_I), m_P> = <H_I, ι(m_P)>", _adjointness),
    "diagram-commute": ("υ∘χ = χ∘υ and υ∘ι = ι∘υ", _diagram),
    "syma-closure": ("ι(m_P) products, antipodes and coproducts re-express in the m basis", _syma_closure),
    "unary-specialization": ("one-color H, M, h, m structure constants and Kostka numbers match the "
                             "classical ones", _unary_specialization),
    "oracle-product-equivalence": ("M_I·M_J and m_P·m_Q agree with truncated polynomial products",
                                   _oracle),
    "kostka-unitriangular": ("colored Kostka matrix is upper unitriangular", _kostka_unitriangular),
    "schur-duality": ("<s_P, s*_Q> = δ_{P,Q}", _schur_duality),
}


def _count_psentences(n: int, k: int) -> int:
    """Multisets of words of total size n over k colors: the coefficient of
    x^n in the product over s of (1 - x^s)^(-k^s)."""
    ways = [1] + [0] * n
    for s in range(1, n + 1):
        kinds = k ** s
        ways = [sum(ways[t - s * j] * comb(kinds + j - 1, j) for j in range(t // s + 1)) for t in range(n + 1)]
    return ways[n]


def basis_size(alphabet: Alphabet, max_degree: int) -> int:
    """Number of basis keys the four colored algebras have up to ``max_degree``."""
    k = len(alphabet)
    sentences = sum(k ** n * 2 ** max(n - 1, 0) for n in range(max_degree + 1))
    psentences = sum(_count_psentences(n, k) for n in range(max_degree + 1))
    return 2 * sentences + 2 * psentences


def parse_checks(selection: str | Iterable[str]) -> list[str]:
    names = [c.strip() for c in selection.split(",")] if isinstance(selection, str) else list(selection)
    if names == ["all"]:
        return list(CHECKS)
    unknown = [c for c in names if c not in CHECKS]
    if unknown or not names:
        raise ConfigError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)} or 'all'")
    return [c for c in CHECKS if c in names]


def run_suite(alphabet: Alphabet | str, max_degree: int, checks: str | Iterable[str] = "all",
              cap: int = DEFAULT_CAP) -> Report:
    try:
        alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
    except AlphabetError as err:
        raise ConfigError(str(err)) from err
    if max_degree < 0:
        raise ConfigError("max degree must be non-negative")
    names = parse_checks(checks)
    size = basis_size(alphabet, max_degree)
    if size > cap:
        raise ConfigError(f"configuration enumerates {size} basis keys, above the cap of {cap}")
    ctx = _Context(Algebras(alphabet), max_degree)
    report = Report(str(alphabet), max_degree)
    for name in names:
        statement, fn = CHECKS[name]
        cases = 0
        try:
            for _ in fn(ctx):
                cases += 1
        except _Failure as fail:
            report.results.append(CheckResult(name, statement, False, cases + 1, fail.witness, fail.detail))
            continue
        report.results.append(CheckResult(name, statement, True, cases))
    return report
