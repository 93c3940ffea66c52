"""One object holding every algebra over a fixed alphabet, with dispatch by
element tag and the dual pairings."""

from __future__ import annotations

from fractions import Fraction

from . import classical as cl
from . import hopf
from .errors import AlgebraMismatchError
from .free_module import FormalSum, Key, TensorSum, pair_diagonal
from .sentences import Alphabet

# (left algebra, right algebra) -> bases in which the pairing is diagonal
DUAL_PAIRS = {
    ("NSymA", "QSymA"): ("H", "M"),
    ("PSymA", "SymA"): ("h", "m"),
    ("NSym", "QSym"): ("H", "M"),
    ("Sym", "Sym"): ("h", "m"),
}


class Algebras:
    """The colored algebras over ``alphabet`` together with classical Sym,
    QSym and NSym.

    >>> A = Algebras("abc")
    >>> A.product(A.psym("h", "aba", "c"), A.psym("h", "bb", "a")).render()
    '1*h(aba,bb,a,c)'
    """

    def __init__(self, alphabet: Alphabet | str):
        self.alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
        self.nsym = hopf.NSymA(self.alphabet)
        self.qsym = hopf.QSymA(self.alphabet)
        self.psym = hopf.PSymA(self.alphabet)
        self.sym = hopf.SymA(self.alphabet, self.qsym)
        self.Sym = cl.Sym()
        self.QSym = cl.QSym()
        self.NSym = cl.NSym()
        self._by_tag = {a.tag: a for a in
                        (self.nsym, self.qsym, self.psym, self.sym, self.Sym, self.QSym, self.NSym)}

    def __repr__(self) -> str:
        return f"Algebras({str(self.alphabet)!r})"

    def __getitem__(self, tag: str) -> hopf.HopfAlgebra:
        try:
            return self._by_tag[tag]
        except KeyError:
            raise AlgebraMismatchError(f"unknown algebra {tag!r}") from None

    def of(self, f) -> hopf.HopfAlgebra:
        if f.algebra is None:
            raise AlgebraMismatchError("the zero element carries no algebra")
        return self[f.algebra]

    # -- structure maps ----------------------------------------------------

    def product(self, f, g):
        if f.algebra is None or g.algebra is None:
            return type(f)() if isinstance(f, TensorSum) or isinstance(g, TensorSum) else FormalSum()
        if f.algebra != g.algebra:
            raise AlgebraMismatchError(f"cannot multiply {f.algebra} by {g.algebra}")
        alg = self.of(f)
        if isinstance(f, TensorSum) and isinstance(g, TensorSum):
            if f.arity != g.arity:
                raise AlgebraMismatchError(f"tensor arities differ: {f.arity} and {g.arity}")
            return alg.tensor_product(f, g)
        if isinstance(f, TensorSum) or isinstance(g, TensorSum):
            raise AlgebraMismatchError("cannot multiply a tensor by a single element")
        return alg.product(f, g)

    def coproduct(self, f: FormalSum) -> TensorSum:
        if f.algebra is None:
            return TensorSum()
        return self.of(f).coproduct(f)

    def antipode(self, f: FormalSum) -> FormalSum:
        if f.algebra is None:
            return FormalSum()
        return self.of(f).antipode(f)

    def counit(self, f: FormalSum) -> Fraction:
        if f.algebra is None:
            return Fraction(0)
        return self.of(f).counit(f)

    def convert(self, f: FormalSum, basis: str) -> FormalSum:
        if f.algebra is None:
            return FormalSum()
        return self.of(f).convert(f, basis)

    # -- morphisms ---------------------------------------------------------

    def chi(self, f: FormalSum) -> FormalSum:
        if f.algebra == "NSymA":
            return hopf.chi(f, self.psym)
        if f.algebra == "NSym":
            return cl.chi_classical(f)
        raise AlgebraMismatchError(f"chi is defined on NSymA and NSym, not {f.algebra}")

    def iota(self, f: FormalSum) -> FormalSum:
        if f.algebra == "SymA":
            return hopf.iota(f, self.sym)
        if f.algebra == "Sym":
            return cl.iota_classical(f)
        raise AlgebraMismatchError(f"iota is defined on SymA and Sym, not {f.algebra}")

    def m_from_M(self, g: FormalSum) -> FormalSum:
        return hopf.m_from_M(g, self.sym)

    def uncolor(self, f: FormalSum) -> FormalSum:
        if f.algebra not in ("NSymA", "QSymA", "PSymA", "SymA"):
            raise AlgebraMismatchError(f"uncolor is defined on colored algebras, not {f.algebra}")
        return hopf.uncolor(f, self.of(f))

    def omega(self, f: FormalSum) -> FormalSum:
        return cl.omega(f)

    # -- pairing -----------------------------------------------------------

    def _orient(self, left: str, right: str) -> tuple[bool, str, str]:
        if (left, right) in DUAL_PAIRS:
            lb, rb = DUAL_PAIRS[left, right]
            return False, lb, rb
        if (right, left) in DUAL_PAIRS:
            lb, rb = DUAL_PAIRS[right, left]
            return True, lb, rb
        raise AlgebraMismatchError(f"{left} and {right} are not in duality")

    def pair(self, f, g) -> Fraction:
        """Dual pairing making (H, M) and (h, m) Kronecker-dual; tensors pair
        slot by slot."""
        if f.algebra is None or g.algebra is None:
            return Fraction(0)
        if isinstance(f, TensorSum) != isinstance(g, TensorSum):
            raise AlgebraMismatchError("cannot pair a tensor with a single element")
        swap, lb, rb = self._orient(f.algebra, g.algebra)
        if swap:
            f, g = g, f
        lalg, ralg = self.of(f), self.of(g)
        if isinstance(f, FormalSum):
            f, g = lalg.convert(f, lb), ralg.convert(g, rb)
            return pair_diagonal(f, g, lambda k: Key(ralg.tag, rb, k.index))
        if f.arity != g.arity:
            raise AlgebraMismatchError(f"tensor arities differ: {f.arity} and {g.arity}")
        f, g = lalg.convert_tensor(f, lb), ralg.convert_tensor(g, rb)
        return pair_diagonal(f, g, lambda key: tuple(Key(ralg.tag, rb, k.index) for k in key))
