"""Expression language over the algebras.

Grammar (whitespace is ignored)::

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := "-" unary | primary
    primary := number | atom | call | "(" expr ")"
    number  := INT ("/" INT)?
    atom    := BASIS "(" [item ("," item)*] ")"      items all words or all integers
    call    := NAME "(" expr [";" arg] ")"

Integer indices select the classical algebras, word indices the colored
ones; an empty index is the unit of the colored algebra.  Parsing also
infers the algebra of every node, so mixed-algebra arithmetic is rejected
with a position before anything is computed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebras import DUAL_PAIRS, Algebras
from .errors import AlphabetError, BasisError, ParseError
from .free_module import LEGAL_BASES, FormalSum, Key, TensorSum, make_key

COLORED_ALGEBRA = {"H": "NSymA", "M": "QSymA", "m": "SymA", "sstar": "SymA", "h": "PSymA", "s": "PSymA"}
CLASSICAL_ALGEBRA = {"m": "Sym", "h": "Sym", "e": "Sym", "s": "Sym", "M": "QSym", "F": "QSym",
                     "H": "NSym", "R": "NSym", "E": "NSym"}
BASES = set(COLORED_ALGEBRA) | set(CLASSICAL_ALGEBRA)
UNARY_CALLS = ("coproduct", "antipode", "counit", "chi", "iota", "uncolor", "omega")
BINARY_CALLS = ("pair", "convert")

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[^\W\d]\w*)|(?P<op>[-+*/(),;]))")

Value = Union[Fraction, FormalSum, TensorSum]


# -- syntax tree -----------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    pos: int


@dataclass(frozen=True)
class Number(Node):
    value: Fraction


@dataclass(frozen=True)
class Atom(Node):
    key: Key


@dataclass(frozen=True)
class Neg(Node):
    arg: Node


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Call(Node):
    name: str
    arg: Node
    extra: Union[Node, str, None] = None


# -- lexer and parser ------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = match.lastgroup
        out.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, algebras: Algebras):
        self.tokens = tokenize(text)
        self.i = 0
        self.algebras = algebras

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self, text: str | None = None, kind: str | None = None) -> Token:
        tok = self.tok
        if (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            want = repr(text) if text is not None else kind
            got = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"expected {want}, found {got}", tok.pos)
        self.i += 1
        return tok

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.text in ("+", "-"):
            op = self.take()
            node = BinOp(op.pos, op.text, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.tok.text == "*":
            op = self.take()
            node = BinOp(op.pos, "*", node, self.unary())
        return node

    def unary(self) -> Node:
        if self.tok.text == "-":
            op = self.take()
            return Neg(op.pos, self.unary())
        return self.primary()

    def primary(self) -> Node:
        tok = self.tok
        if tok.kind == "int":
            self.take()
            value = Fraction(int(tok.text))
            if self.tok.text == "/":
                self.take()
                den = self.take(kind="int")
                if int(den.text) == 0:
                    raise ParseError("division by zero", den.pos)
                value /= int(den.text)
            return Number(tok.pos, value)
        if tok.text == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if tok.kind == "name":
            self.take()
            if tok.text in BASES:
                return self.atom(tok)
            if tok.text in UNARY_CALLS or tok.text in BINARY_CALLS:
                return self.call(tok)
            raise ParseError(f"unknown name {tok.text!r}", tok.pos)
        got = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"expected an expression, found {got}", tok.pos)

    def atom(self, name: Token) -> Atom:
        self.take("(")
        items: list[Token] = []
        if self.tok.text != ")":
            items.append(self.take_item())
            while self.tok.text == ",":
                self.take()
                items.append(self.take_item())
        self.take(")")
        kinds = {t.kind for t in items}
        if not items and name.text not in COLORED_ALGEBRA:
            kinds = {"int"}
        if kinds == {"int"}:
            algebra = CLASSICAL_ALGEBRA.get(name.text)
            index = tuple(int(t.text) for t in items)
            if any(p == 0 for p in index):
                raise ParseError("composition parts must be positive", name.pos)
        elif kinds <= {"name"}:
            algebra = COLORED_ALGEBRA.get(name.text)
            index = tuple(t.text for t in items)
        else:
            raise ParseError("an index mixes words and integers", name.pos)
        if algebra is None:
            layer = "classical" if kinds == {"int"} else "colored"
            raise ParseError(f"basis {name.text!r} has no {layer} version", name.pos)
        try:
            if algebra in CLASSICAL_ALGEBRA.values():
                key = make_key(algebra, name.text, index)
            else:
                key = self.algebras[algebra].key(name.text, index)
        except (AlphabetError, BasisError) as err:
            raise ParseError(str(err), name.pos) from err
        return Atom(name.pos, key)

    def take_item(self) -> Token:
        if self.tok.kind not in ("int", "name"):
            raise ParseError(f"expected a word or an integer, found {self.tok.text!r}", self.tok.pos)
        return self.take()

    def call(self, name: Token) -> Call:
        self.take("(")
        arg = self.expr()
        extra = None
        if name.text in BINARY_CALLS:
            self.take(";")
            if name.text == "convert":
                extra = self.take(kind="name").text
            else:
                extra = self.expr()
        self.take(")")
        return Call(name.pos, name.text, arg, extra)


# -- static typing ---------------------------------------------------------------

_CHI = {"NSymA": "PSymA", "NSym": "Sym"}
_IOTA = {"SymA": "QSymA", "Sym": "QSym"}
_UNCOLOR = {"NSymA": "NSym", "QSymA": "QSym", "PSymA": "Sym", "SymA": "Sym"}

SCALAR = ("scalar", 0)


def infer(node: Node) -> tuple[str, int]:
    """(algebra, arity) of a node; arity 0 is a scalar, 1 an element and
    2 or more a tensor."""
    if isinstance(node, Number):
        return SCALAR
    if isinstance(node, Atom):
        return (node.key.algebra, 1)
    if isinstance(node, Neg):
        return infer(node.arg)
    if isinstance(node, BinOp):
        left, right = infer(node.left), infer(node.right)
        if SCALAR in (left, right):
            other = right if left == SCALAR else left
            if node.op in "+-" and other[1] > 1:
                raise ParseError(f"cannot add a scalar and {_describe(other)}", node.pos)
            return other
        if left != right:
            what = "add" if node.op in "+-" else "multiply"
            raise ParseError(f"cannot {what} {_describe(left)} and {_describe(right)}", node.pos)
        return left
    assert isinstance(node, Call)
    tag, arity = infer(node.arg)
    name = node.name
    if name == "pair":
        other = infer(node.extra)
        if arity == 0 or other[1] != arity or ((tag, other[0]) not in DUAL_PAIRS
                                              and (other[0], tag) not in DUAL_PAIRS):
            raise ParseError(f"cannot pair {_describe((tag, arity))} with {_describe(other)}", node.pos)
        return SCALAR
    if arity == 0:
        raise ParseError(f"{name} needs an algebra element, not a scalar", node.pos)
    if name == "convert":
        if node.extra not in LEGAL_BASES[tag]:
            raise ParseError(f"{tag} has no basis {node.extra!r}", node.pos)
        return (tag, arity)
    if arity != 1:
        raise ParseError(f"{name} is not defined on tensors", node.pos)
    if name == "coproduct":
        return (tag, 2)
    if name == "antipode":
        return (tag, 1)
    if name == "counit":
        return SCALAR
    table = {"chi": _CHI, "iota": _IOTA, "uncolor": _UNCOLOR, "omega": {"Sym": "Sym"}}[name]
    if tag not in table:
        raise ParseError(f"{name} is not defined on {tag}", node.pos)
    return (table[tag], 1)


def _describe(t: tuple[str, int]) -> str:
    tag, arity = t
    if arity == 0:
        return "a scalar"
    if arity == 1:
        return f"an element of {tag}"
    return f"a tensor of arity {arity} over {tag}"


def parse(text: str, algebras: Algebras) -> Node:
    node = _Parser(text, algebras).parse()
    infer(node)
    return node


# -- evaluation ------------------------------------------------------------------

def _lift(c: Fraction, like: FormalSum) -> FormalSum:
    """A scalar as a multiple of the unit of ``like``'s algebra."""
    if like.algebra is None:
        return FormalSum.zero() if c == 0 else FormalSum({Key("NSymA", "H", ()): c})
    bases = like.bases()
    basis = next(iter(bases)) if len(bases) == 1 else LEGAL_BASES[like.algebra][0]
    return FormalSum({Key(like.algebra, basis, ()): c}, like.algebra)


def evaluate(node: Node, algebras: Algebras) -> Value:
    A = algebras
    if isinstance(node, Number):
        return node.value
    if isinstance(node, Atom):
        return FormalSum.singleton(node.key)
    if isinstance(node, Neg):
        return -evaluate(node.arg, A)
    if isinstance(node, BinOp):
        left, right = evaluate(node.left, A), evaluate(node.right, A)
        if node.op == "*":
            if isinstance(left, Fraction) or isinstance(right, Fraction):
                return left * right
            return A.product(left, right)
        if isinstance(left, Fraction) and not isinstance(right, Fraction):
            left = _lift(left, right)
        elif isinstance(right, Fraction) and not isinstance(left, Fraction):
            right = _lift(right, left)
        return left + right if node.op == "+" else left - right
    assert isinstance(node, Call)
    arg = evaluate(node.arg, A)
    if node.name == "pair":
        return A.pair(arg, evaluate(node.extra, A))
    if node.name == "convert":
        if isinstance(arg, TensorSum):
            return A.of(arg).convert_tensor(arg, node.extra) if arg.algebra else arg
        return A.convert(arg, node.extra)
    return getattr(A, node.name)(arg)


def run(text: str, algebras: Algebras) -> Value:
    return evaluate(parse(text, algebras), algebras)


def render(value: Value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return value.render()


def to_json_obj(value: Value):
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    return value.to_json_obj()

