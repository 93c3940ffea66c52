import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from colsym.errors import AlgebraMismatchError, BasisError
from colsym.free_module import (FormalSum, Key, TensorSum, add, extend_linear, linear_map, make_key, scale,
                                tensor)


def H(*words, c=1):
    return FormalSum.singleton(Key("NSymA", "H", words), c)


def test_addition_and_cancellation():
    assert add(H("a", c=2), H("a", c=3)) == H("a", c=5)
    zero = add(H("a"), H("a", c=-1))
    assert zero == 0 and not zero and zero.render() == "0"
    m = FormalSum.singleton(Key("SymA", "m", ("ab",)), 2)
    assert scale(Fraction(1, 2), m) == FormalSum.singleton(Key("SymA", "m", ("ab",)))


def test_coefficients_stay_exact():
    f = H("a") * Fraction(1, 3) + H("a") * Fraction(1, 6)
    assert f.coefficient(Key("NSymA", "H", ("a",))) == Fraction(1, 2)
    with pytest.raises(TypeError):
        FormalSum({Key("NSymA", "H", ("a",)): 0.5})


def test_mixed_algebras_are_rejected():
    with pytest.raises(AlgebraMismatchError):
        H("a") + FormalSum.singleton(Key("QSymA", "M", ("a",)))


def test_render_order_and_signs():
    f = H("c", "ab") - H("ab", "c") * 2 + H("b")
    assert f.render() == "1*H(b) - 2*H(ab,c) + 1*H(c,ab)"
    assert (-H("a")).render() == "-1*H(a)"
    assert (H("a") * Fraction(3, 2)).render() == "3/2*H(a)"


def test_json_schema():
    obj = json.loads((H("ab", "c") * Fraction(-1, 2)).to_json())
    assert obj == [{"algebra": "NSymA", "basis": "H", "index": "(ab,c)", "num": -1, "den": 2}]
    t = tensor(H("a"), H())
    assert json.loads(t.to_json())[0]["factors"][1]["index"] == "()"


def test_tensor_render_and_arity():
    t = tensor(H("a") + H("b"), H())
    assert t.arity == 2
    assert t.render() == "1*H(a) ⊗ H() + 1*H(b) ⊗ H()"
    assert tensor(H("a"), H("b"), H("c")).arity == 3


def test_make_key_validation():
    with pytest.raises(BasisError):
        make_key("NSymA", "m", ("a",))
    with pytest.raises(BasisError):
        make_key("Sym", "m", (1, 2))
    with pytest.raises(BasisError):
        make_key("QSymA", "M", ("a", ""))
    assert make_key("QSym", "F", (1, 2)).text() == "F(1,2)"


def test_linear_extension():
    f = H("a") * 2 + H("b")
    assert extend_linear(FormalSum.singleton, f) == f
    assert extend_linear(lambda k: 0, f) == 0
    dup = linear_map(lambda k: TensorSum({(k, k): 1}), f, TensorSum)
    assert dup.coefficient((Key("NSymA", "H", ("a",)),) * 2) == 2


keys = st.sampled_from([Key("NSymA", "H", i) for i in [(), ("a",), ("b",), ("a", "b"), ("ab",)]])
elements = st.dictionaries(keys, st.fractions(max_denominator=5), max_size=4).map(lambda d: FormalSum(d, "NSymA"))


@given(elements, elements, elements)
def test_module_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert f - f == 0
    assert (f + g) * 3 == f * 3 + g * 3


@given(elements)
def test_render_is_deterministic(f):
    assert f.render() == FormalSum(dict(reversed(list(f.terms.items()))), "NSymA").render()
