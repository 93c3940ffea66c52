import pytest

from colsym import Algebras
from colsym import sentences as sn
from colsym.classical import partitions, ssyt
from colsym.tableaux import (ColoredTableau, colored_kostka, dual_schur_in_m, enumerate_cssyt, h_in_schur,
                             kostka_matrix, kostka_order, schur_in_h, tableau_type, unitriangular_inverse)

ABC = sn.Alphabet("abc")
UNARY = sn.Alphabet("a")


def test_tableau_type_reads_bottom_row_first():
    assert tableau_type(ColoredTableau(("abb", "ca"), ((1, 1, 1), (2, 2)))) == ("abb", "ca")
    assert tableau_type(ColoredTableau(("abb", "ca"), ((1, 1, 2), (2, 3)))) == ("ab", "cb", "a")
    assert tableau_type(ColoredTableau(("a",), ((3,),))) == ("", "", "a")


def test_validity():
    assert ColoredTableau(("ab", "c"), ((1, 2), (2,))).is_valid()
    assert not ColoredTableau(("ab", "c"), ((1, 2), (1,))).is_valid()
    assert not ColoredTableau(("ab", "c"), ((2, 1), (3,))).is_valid()


def test_cssyt_of_abb_ca_with_psentence_types():
    found = [t for t in enumerate_cssyt(("abb", "ca"), 3)
             if all(t.type) and sn.is_psentence(t.type, ABC)]
    assert sorted(t.type for t in found) == sorted([("abb", "ca"), ("ab", "cb", "a"), ("ab", "ca", "b")])
    assert all(t.is_valid() for t in enumerate_cssyt(("abb", "ca"), 3))


def test_cssyt_counts():
    assert len(enumerate_cssyt(("a",), 1)) == 1
    assert len(enumerate_cssyt(("aa", "a"), 3)) == 8 == len(ssyt((2, 1), 3))
    with pytest.raises(ValueError):
        enumerate_cssyt(("a", "aa"), 2)


def test_colored_kostka_numbers():
    assert colored_kostka(("abb", "ca"), ("ab", "cb", "a"), ABC) == 1
    assert colored_kostka(("aaa", "aa"), ("a", "a", "a", "a", "a"), UNARY) == 5
    for p in kostka_order(3, sn.Alphabet("ab")):
        assert colored_kostka(p, p, sn.Alphabet("ab")) >= 1


def test_dual_schur_examples():
    A = Algebras("abc")
    assert dual_schur_in_m(("abb", "ca"), ABC) == (A.sym("m", "abb", "ca") + A.sym("m", "ab", "cb", "a")
                                                   + A.sym("m", "ab", "ca", "b"))
    assert dual_schur_in_m(("a",), ABC) == A.sym("m", "a")


def test_dual_schur_aaa_aa():
    U = Algebras("a")
    m = lambda *w: U.sym("m", *w)
    got = dual_schur_in_m(("aaa", "aa"), UNARY)
    # the four printed coefficients, plus the (3,1,1) term with Kostka number 1
    assert got.coefficient(next(iter(m("aaa", "aa").terms))) == 1
    assert got.coefficient(next(iter(m("aa", "aa", "a").terms))) == 2
    assert got.coefficient(next(iter(m("aa", "a", "a", "a").terms))) == 3
    assert got.coefficient(next(iter(m("a", "a", "a", "a", "a").terms))) == 5
    assert got == m("aaa", "aa") + m("aaa", "a", "a") + m("aa", "aa", "a") * 2 + m("aa", "a", "a", "a") * 3 \
        + m("a", "a", "a", "a", "a") * 5
    assert U.Sym.convert(U.uncolor(U.sym("sstar", "aaa", "aa")), "s") == U.Sym("s", 3, 2)


def test_unary_schur_of_a_a():
    U = Algebras("a")
    assert schur_in_h(("a", "a"), UNARY) == U.psym("h", "a", "a") - U.psym("h", "aa")


def test_kostka_matrix_is_unitriangular():
    for alphabet in (sn.Alphabet("ab"), UNARY):
        for n in range(5):
            order, rows = kostka_matrix(n, alphabet)
            for i in range(len(order)):
                assert rows[i][i] == 1
                assert all(rows[i][j] == 0 for j in range(i))


def test_h_and_s_are_inverse_changes_of_basis():
    A = Algebras("ab")
    for p in kostka_order(3, A.alphabet):
        s = schur_in_h(p, A.alphabet)
        back = A.psym.convert(s, "s")
        assert back == A.psym("s", *p)
        assert A.psym.convert(h_in_schur(p, A.alphabet), "h") == A.psym("h", *p)


def test_unary_schur_uncolors_to_classical_schur():
    U = Algebras("a")
    for n in range(6):
        for lam in partitions(n):
            p = tuple("a" * k for k in lam)
            assert U.uncolor(U.psym.convert(U.psym("s", *p), "h")) == U.Sym.convert(U.Sym("s", *lam), "h")


def test_unitriangular_inverse():
    order = ["x", "y", "z"]
    mat = {("x", "x"): 1, ("x", "y"): 2, ("x", "z"): 3, ("y", "y"): 1, ("y", "z"): 4, ("z", "z"): 1}
    inv = unitriangular_inverse(order, lambda a, b: mat.get((a, b), 0))
    for a in order:
        for c in order:
            total = sum(mat.get((a, b), 0) * inv.get((b, c), 0) for b in order)
            assert total == (a == c)
    with pytest.raises(ValueError):
        unitriangular_inverse(order, lambda a, b: 2 if a == b else 0)
