from itertools import product as cartesian

import pytest
from hypothesis import given, strategies as st

from colsym import classical as cl
from colsym import Algebras
from colsym.errors import BasisError
from colsym.free_module import FormalSum, Key, TensorSum

A = Algebras("a")
SYM, QSYM, NSYM = A.Sym, A.QSym, A.NSym


def as_sum(counter, tag, basis):
    return FormalSum({Key(tag, basis, k): c for k, c in counter.items()}, tag)


def as_tensor(counter, tag, basis):
    return TensorSum({(Key(tag, basis, a), Key(tag, basis, b)): c for (a, b), c in counter.items()}, tag)


def test_composition_order_and_conjugate():
    assert cl.composition_refines((1, 2), (3,))
    assert cl.composition_refines((3,), (3,))
    assert not cl.composition_refines((3,), (1, 2))
    assert cl.conjugate((3, 2)) == (2, 2, 1)
    assert cl.partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_fundamental_in_monomial():
    assert QSYM.convert(QSYM("F", 3), "M") == QSYM("M", 3) + QSYM("M", 2, 1) + QSYM("M", 1, 2) + QSYM("M", 1, 1, 1)


def test_complete_in_ribbon():
    # H_(2,1) = R_(2,1) + R_(3): complete functions sum the ribbons of their coarsenings
    assert NSYM.convert(NSYM("H", 2, 1), "R") == NSYM("R", 2, 1) + NSYM("R", 3)


def test_schur_in_monomial():
    expected = (SYM("m", 3, 2) + SYM("m", 3, 1, 1) + SYM("m", 2, 2, 1) * 2 + SYM("m", 2, 1, 1, 1) * 3
                + SYM("m", 1, 1, 1, 1, 1) * 5)
    assert SYM.convert(SYM("s", 3, 2), "m") == expected
    assert cl.kostka((3, 2), (3, 1, 1)) == 1


def test_products():
    assert QSYM.product(QSYM("M", 1), QSYM("M", 2, 1)) == (QSYM("M", 1, 2, 1) + QSYM("M", 2, 1, 1) * 2
                                                            + QSYM("M", 3, 1) + QSYM("M", 2, 2))
    assert NSYM.product(NSYM("R", 2), NSYM("R", 1)) == NSYM("R", 2, 1) + NSYM("R", 3)


def test_coproducts():
    assert QSYM.coproduct(QSYM("M", 2, 1, 1)) == as_tensor(
        {((), (2, 1, 1)): 1, ((2,), (1, 1)): 1, ((2, 1), (1,)): 1, ((2, 1, 1), ()): 1}, "QSym", "M")
    assert SYM.coproduct(SYM("h", 3)) == as_tensor({((k,) if k else (), (3 - k,) if k < 3 else ()): 1
                                                    for k in range(4)}, "Sym", "h")


def test_omega():
    assert cl.omega(SYM("e", 2, 1)) == SYM("h", 2, 1)
    assert cl.omega(cl.omega(SYM("s", 3, 2))) == SYM("s", 3, 2)
    assert cl.omega(SYM("s", 2, 1)) == SYM("s", 2, 1)
    assert cl.omega(SYM("s", 3)) == SYM("s", 1, 1, 1)
    with pytest.raises(BasisError):
        cl.omega(SYM("m", 2))


def test_omega_matches_conjugation_through_h():
    for n in range(1, 6):
        for lam in cl.partitions(n):
            via_e = SYM.convert(cl.omega(SYM.convert(SYM("s", *lam), "h")), "s")
            assert via_e == SYM("s", *cl.conjugate(lam))


def test_chi_and_iota():
    assert A.chi(NSYM("H", 1, 2)) == SYM("h", 2, 1)
    assert A.iota(SYM("m", 2, 1)) == QSYM("M", 2, 1) + QSYM("M", 1, 2)
    assert A.pair(A.chi(NSYM("H", 1, 2)), SYM("m", 2, 1)) == 1 == A.pair(NSYM("H", 1, 2), A.iota(SYM("m", 2, 1)))


# -- invariants ---------------------------------------------------------------------

def all_compositions(n_max):
    return [a for n in range(n_max + 1) for a in cl.compositions(n)]


def all_partitions(n_max):
    return [lam for n in range(n_max + 1) for lam in cl.partitions(n)]


def test_bridge_agrees_with_direct_formulas():
    for a, b in cartesian(all_compositions(3), repeat=2):
        assert QSYM.product(QSYM("M", *a), QSYM("M", *b)) == as_sum(cl.direct_M_product(a, b), "QSym", "M")
        assert NSYM.product(NSYM("H", *a), NSYM("H", *b)) == as_sum(cl.direct_H_product(a, b), "NSym", "H")
    for a in all_compositions(6):
        assert QSYM.coproduct(QSYM("M", *a)) == as_tensor(cl.direct_M_coproduct(a), "QSym", "M")
        assert NSYM.coproduct(NSYM("H", *a)) == as_tensor(cl.direct_H_coproduct(a), "NSym", "H")
    for lam, mu in cartesian(all_partitions(3), repeat=2):
        assert SYM.product(SYM("m", *lam), SYM("m", *mu)) == as_sum(cl.direct_m_product(lam, mu), "Sym", "m")
        assert SYM.product(SYM("h", *lam), SYM("h", *mu)) == as_sum(cl.direct_h_product(lam, mu), "Sym", "h")
    for lam in all_partitions(6):
        assert SYM.coproduct(SYM("m", *lam)) == as_tensor(cl.direct_m_coproduct(lam), "Sym", "m")
        assert SYM.coproduct(SYM("h", *lam)) == as_tensor(cl.direct_h_coproduct(lam), "Sym", "h")


@pytest.mark.parametrize("alg,bases", [(QSYM, "MF"), (NSYM, "HRE"), (SYM, "mhes")])
def test_conversions_round_trip(alg, bases):
    for n in range(7):
        for src in bases:
            for key in alg.basis_keys(n, src):
                f = FormalSum.singleton(key)
                for dst in bases:
                    assert alg.convert(alg.convert(f, dst), src) == f


def test_ribbons_and_fundamentals_are_dual():
    for n in range(6):
        comps = cl.compositions(n)
        for a in comps:
            for b in comps:
                assert A.pair(NSYM("R", *a), QSYM("F", *b)) == (a == b)


def test_ribbon_rule_matches_complete_expansion():
    for a, b in cartesian(all_compositions(5), repeat=2):
        if sum(a) + sum(b) > 5:
            continue
        via_h = NSYM.convert(NSYM.product(NSYM.convert(NSYM("R", *a), "H"), NSYM.convert(NSYM("R", *b), "H")), "R")
        assert NSYM.product(NSYM("R", *a), NSYM("R", *b)) == via_h


def test_omega_preserves_the_hall_pairing():
    for n in range(6):
        for lam in cl.partitions(n):
            for mu in cl.partitions(n):
                f, g = SYM("h", *lam), SYM.convert(SYM("h", *mu), "e")
                lhs = A.pair(cl.omega(f), SYM.convert(cl.omega(g), "m"))
                assert lhs == A.pair(f, SYM.convert(g, "m"))


def test_kostka_methods_agree():
    for n in range(7):
        for lam in cl.partitions(n):
            tableaux = cl.ssyt(lam, n)
            for mu in cl.partitions(n):
                by_enum = sum(1 for t in tableaux
                              if all(sum(row.count(i + 1) for row in t) == m for i, m in enumerate(mu))
                              and all(e <= len(mu) for row in t for e in row))
                assert cl.kostka(lam, mu) == by_enum


@given(st.lists(st.integers(1, 3), max_size=4).map(tuple), st.lists(st.integers(1, 3), max_size=3).map(tuple))
def test_quasishuffle_is_commutative(a, b):
    assert cl.direct_M_product(a, b) == cl.direct_M_product(b, a)
