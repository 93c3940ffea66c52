from itertools import product as cartesian

import pytest

from colsym import Algebras
from colsym import sentences as sn
from colsym.errors import NotQuasisymmetricError, NotSymmetricError
from colsym.poly import (TruncatedPoly, is_quasisymmetric, is_symmetric, poly_mul, realize, realize_M,
                         realize_m, to_M, to_m)

A = Algebras("ab")


def x(*pairs, slots=3):
    """x("a", 1, "b", 2) is the monomial x_{a,1} x_{b,2}."""
    mono = tuple((pairs[i + 1], pairs[i]) for i in range(0, len(pairs), 2))
    return TruncatedPoly(slots, {mono: 1})


def test_realize_M_three_slots():
    expected = x("ab", 1, "c", 2) + x("ab", 1, "c", 3) + x("ab", 2, "c", 3)
    assert realize_M(("ab", "c"), 3) == expected
    assert realize_M(("ab", "c"), 3).render() == "1*x_{ab,1}x_{c,2} + 1*x_{ab,1}x_{c,3} + 1*x_{ab,2}x_{c,3}"


def test_trivial_realizations():
    assert realize_M(("a", "b", "a"), 2) == TruncatedPoly(2)
    assert realize_M((), 4) == TruncatedPoly.one(4)


def test_same_slot_variables_concatenate():
    assert poly_mul(x("a", 1), x("b", 1)) == x("ab", 1)
    assert poly_mul(x("b", 1), x("a", 1)) == x("ba", 1)
    assert poly_mul(x("a", 1), x("b", 2)) == x("a", 1, "b", 2)
    assert poly_mul(x("b", 2), x("a", 1)) == x("a", 1, "b", 2)


def test_singleton_product():
    lhs = poly_mul(realize_M(("a",), 2), realize_M(("b",), 2))
    assert lhs == realize(A.qsym("M", "a", "b") + A.qsym("M", "b", "a") + A.qsym("M", "ab"), 2)


def test_symmetry_predicates():
    assert is_symmetric(realize_m(("ab", "c"), 4))
    assert not is_symmetric(realize_M(("a", "b"), 4))
    with pytest.raises(NotSymmetricError) as info:
        to_m(realize_M(("a", "b"), 4))
    first, second = info.value.witness
    assert [w for _, w in first] == ["a", "b"] and [w for _, w in second] == ["b", "a"]


def test_quasisymmetry_predicate():
    assert is_quasisymmetric(realize_M(("ab", "c"), 4))
    assert not is_quasisymmetric(x("a", 1))
    with pytest.raises(NotQuasisymmetricError):
        to_M(x("a", 1) + x("a", 2) * 2)


def test_round_trips():
    assert to_M(realize_M(("ab", "c"), 5)) == Algebras("abc").qsym("M", "ab", "c")
    assert to_m(realize_m(("ab", "a"), 3), A.alphabet) == A.sym("m", "ab", "a")
    for n in range(4):
        for i in sn.enumerate_sentences(n, A.alphabet):
            assert to_M(realize_M(i, 3)) == A.qsym("M", *i)


def test_realize_rejects_other_bases():
    with pytest.raises(ValueError):
        realize(A.nsym("H", "a"), 2)


def test_canonical_form_is_enforced():
    with pytest.raises(ValueError):
        TruncatedPoly(2, {((2, "a"), (1, "b")): 1})
    with pytest.raises(ValueError):
        TruncatedPoly(2, {((3, "a"),): 1})
    with pytest.raises(ValueError):
        x("a", 1, slots=2) + x("a", 1, slots=3)


def test_products_agree_with_the_quasishuffle_rule():
    slots = 4
    small = [i for n in range(4) for i in sn.enumerate_sentences(n, A.alphabet)]
    for i, j in cartesian(small, repeat=2):
        if sn.size(i) + sn.size(j) > 4 or len(i) + len(j) > slots:
            continue
        lhs = poly_mul(realize_M(i, slots), realize_M(j, slots))
        assert to_M(lhs) == A.qsym.product(A.qsym("M", *i), A.qsym("M", *j))


def test_realize_m_is_symmetric():
    for n in range(4):
        for p in sn.enumerate_psentences(n, A.alphabet):
            assert is_symmetric(realize_m(p, 3), A.alphabet)
