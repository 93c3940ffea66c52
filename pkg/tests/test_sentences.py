from collections import Counter
from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from colsym import sentences as sn
from colsym.errors import AlphabetError, ContainmentError, UndefinedOperandError
from colsym.sentences import Alphabet

ABC = Alphabet("abc")
ABCDEF = Alphabet("abcdef")

words = st.text(alphabet="abc", min_size=1, max_size=3)
sentences = st.lists(words, max_size=3).map(tuple)
small_sentences = st.lists(st.text(alphabet="ab", min_size=1, max_size=2), max_size=3).map(tuple)


def test_alphabet_rejects_bad_colors():
    for bad in ("a1", "a-", "aa", ""):
        with pytest.raises(AlphabetError):
            Alphabet(bad)


def test_alphabet_declared_order_is_the_color_order():
    ba = Alphabet("ba")
    assert ba.word_key("b") < ba.word_key("a")
    assert sn.sort_sentence(("a", "b"), ba) == ("b", "a")


def test_graded_lex_comparison():
    assert sn.cmp_graded_lex("abc", "acb", ABC) == -1
    assert sn.cmp_graded_lex("acb", "bac", ABC) == -1
    assert sn.cmp_graded_lex("ab", "ab", ABC) == 0
    assert sn.cmp_graded_lex("b", "aa", ABC) == -1


def test_concatenation_and_near_concatenation():
    i, j = ("bc", "a"), ("b", "ac")
    assert sn.concat(i, j) == ("bc", "a", "b", "ac")
    assert sn.concat((), ("ab",)) == ("ab",)
    assert sn.near_concat(i, j) == ("bc", "ab", "ac")
    assert sn.near_concat(("a",), ("b",)) == ("ab",)
    assert sn.near_concat(("ab",), ("c", "d")) == ("abc", "d")
    with pytest.raises(UndefinedOperandError):
        sn.near_concat((), ("a",))


def test_reversal_and_complement():
    i = ("ab", "cde")
    assert sn.reversal(i) == ("cde", "ab")
    assert sn.complement(i) == ("a", "bc", "d", "e")
    assert sn.complement(sn.complement(("bc", "a", "b", "ac"))) == ("bc", "a", "b", "ac")


def test_flatten_and_sort():
    assert sn.flatten(("", "ab", "", "c")) == ("ab", "c")
    assert sn.flatten(("", "")) == ()
    assert sn.sort_sentence(("c", "aba", "bc"), ABC) == ("aba", "bc", "c")
    assert sn.sort_sentence(("b", "a", "cc"), ABC) == ("cc", "a", "b")
    assert sn.is_psentence(("abb", "cab", "ba", "cc", "a", "b"), ABC)


def test_refinements_of_bac():
    assert set(sn.refinements(("bac",))) == {("bac",), ("b", "ac"), ("ba", "c"), ("b", "a", "c")}
    assert set(sn.coarsenings(("a", "b"))) == {("a", "b"), ("ab",)}
    assert len(sn.refinements(("ab", "cde"))) == 8


def test_right_splittings():
    pairs = sn.right_splittings(("abc", "def"))
    assert dict((p, q) for q, p in pairs)[("c", "ef")] == ("ab", "d")
    assert len(sn.right_splittings(("ab", "bc"))) == 9
    assert set(sn.right_splittings(("a",))) == {(("a",), ("",)), (("",), ("a",))}


def test_left_splittings_follow_the_prefix_rule():
    pairs = dict(sn.left_splittings(("abc", "def")))
    # w_i = v_i q_i read literally
    assert pairs[("a", "de")] == ("bc", "f")
    assert dict(sn.left_splittings(("ab",)))[("a",)] == ("b",)


def test_quasishuffle_of_a_bc_and_d_e():
    expected = [
        ("a", "bc", "d", "e"), ("a", "bcd", "e"), ("a", "d", "bc", "e"), ("ad", "bc", "e"), ("a", "d", "bce"),
        ("ad", "bce"), ("d", "a", "bc", "e"), ("d", "a", "bce"), ("a", "d", "e", "bc"), ("ad", "e", "bc"),
        ("d", "a", "e", "bc"), ("d", "ae", "bc"), ("d", "e", "a", "bc"),
    ]
    assert sn.quasishuffles(("a", "bc"), ("d", "e")) == Counter(expected)
    assert sn.shuffles(("a",), ("b",)) == Counter({("a", "b"): 1, ("b", "a"): 1})
    assert sn.quasishuffles((), ("a", "b")) == Counter({("a", "b"): 1})


def test_multisets():
    p, q = ("aaa", "ab", "ab", "ab", "ca", "ca"), ("aaa", "ab", "ab")
    assert sn.is_submultiset(q, p)
    assert sn.multiset_difference(p, q, ABC) == ("ab", "ca", "ca")
    assert sn.multiset_difference(p, (), ABC) == p
    assert sn.multiset_difference(p, p, ABC) == ()
    with pytest.raises(ContainmentError):
        sn.multiset_difference(q, p, ABC)


def test_r_coefficient():
    assert sn.r_coefficient(("bc", "a"), ("b",), ("ab", "bc"), ABC) == 1
    assert sn.r_coefficient(("a",), (), ("a",), ABC) == 1
    assert sn.r_coefficient(("a",), (), ("b",), ABC) == 0
    assert sn.r_coefficient(("a",), ("a",), ("a", "a"), ABC) == 2


def test_enumeration():
    ab = Alphabet("ab")
    assert set(sn.enumerate_sentences(2, ab)) == {("aa",), ("ab",), ("ba",), ("bb",), ("a", "a"), ("a", "b"),
                                                  ("b", "a"), ("b", "b")}
    assert sn.enumerate_sentences(0, ab) == [()]
    assert [len(sn.enumerate_sentences(n, ab)) for n in range(5)] == [1, 2, 8, 32, 128]
    assert set(sn.rearrangements(("ab", "c", "c"))) == {("ab", "c", "c"), ("c", "ab", "c"), ("c", "c", "ab")}


# -- properties ----------------------------------------------------------------

@given(sentences)
def test_complement_is_an_involution(i):
    assert sn.complement(sn.complement(i)) == i


@given(sentences)
def test_refinement_count(i):
    assert len(sn.refinements(i)) == prod(2 ** (len(w) - 1) for w in i)
    assert all(sn.refines(j, i) for j in sn.refinements(i))


@given(sentences)
def test_right_splitting_count_and_concatenation(i):
    pairs = sn.right_splittings(i)
    assert len(pairs) == prod(len(w) + 1 for w in i)
    for quotient, part in pairs:
        assert tuple(q + p for q, p in zip(quotient, part)) == i


@given(small_sentences, small_sentences)
def test_shuffle_sizes(i, j):
    assert sum(sn.shuffles(i, j).values()) == comb(len(i) + len(j), len(i))
    # every shuffle is a quasishuffle; the rest merge at least one pair
    q = sn.quasishuffles(i, j)
    assert all(q[s] >= c for s, c in sn.shuffles(i, j).items())


@given(sentences)
def test_sort_is_idempotent_and_canonical(i):
    p = sn.sort_sentence(i, ABC)
    assert sn.sort_sentence(p, ABC) == p
    assert sn.is_psentence(p, ABC)
    assert Counter(p) == Counter(i)


@given(sentences.map(lambda s: sn.sort_sentence(s, ABC)))
def test_rearrangements_are_the_sort_class(p):
    rs = sn.rearrangements(p)
    assert len(rs) == len(set(rs))
    assert all(sn.sort_sentence(r, ABC) == p for r in rs)


@given(sentences.map(lambda s: sn.sort_sentence(s, ABC)))
def test_submultisets_and_differences(p):
    for q in sn.submultisets(p, ABC):
        assert Counter(q) + Counter(sn.multiset_difference(p, q, ABC)) == Counter(p)
