from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from pccfl import (BudgetExhausted, GrammarError, closure_member, enumerate_words, letter_independence,
                   member, trace_class, trace_normal_form, word_trace_equivalent)
from pccfl.acceptance import l6_formula
from pccfl.gallery import EX2, L3_CFG, L6_CFG, L6_INDEPENDENCE, l3_predicate, l6_predicate
from pccfl.trace_closure import read_letter_independence
from pccfl.traces import swap_class
from pccfl.words import format_word

BC = letter_independence("b c")


def test_equivalence_examples():
    assert word_trace_equivalent("abc", "acb", BC)
    assert not word_trace_equivalent("abc", "bac", BC)
    assert word_trace_equivalent("abab", "abab", letter_independence())
    assert not word_trace_equivalent("ab", "abb", BC)


def test_trace_classes():
    assert {format_word(w) for w in trace_class("abc", BC)} == {"abc", "acb"}
    assert trace_class("abab", ()) == {tuple("abab")}
    word = ("a", "b", "abar", "dbar", "c", "d")
    cls = trace_class(word, L6_INDEPENDENCE)
    assert cls == swap_class(word, L6_INDEPENDENCE)
    assert ("a", "abar", "b", "dbar", "c", "d") in cls
    assert all(sorted(w) == sorted(word) for w in cls)


def test_class_cap():
    with pytest.raises(BudgetExhausted):
        trace_class("a" * 15, BC)
    assert trace_class("a" * 15, BC, cap=20) == {tuple("a" * 15)}


def test_irreflexive_independence():
    with pytest.raises(ValueError):
        letter_independence([("a", "a")])


def test_closure_membership_of_l3():
    assert closure_member(L3_CFG, BC, "ascb")
    assert closure_member(L3_CFG, BC, "aascbbc")
    assert not closure_member(L3_CFG, BC, "asbb")
    assert not closure_member(L3_CFG, BC, "ascbb")


def test_closure_membership_of_l6():
    assert closure_member(L6_CFG, L6_INDEPENDENCE, "a b abar dbar c d")
    assert closure_member(L6_CFG, L6_INDEPENDENCE, "a abar b dbar c d")
    assert not closure_member(L6_CFG, L6_INDEPENDENCE, "a abar dbar b c d")


def test_closure_requires_plain_grammar():
    with pytest.raises(GrammarError):
        closure_member(EX2, BC, "s")


def test_closure_with_empty_relation_is_membership():
    for w in product("abcs", repeat=4):
        assert closure_member(L3_CFG, (), w) == member(L3_CFG, w)


def closure_language(cfg, indep, n):
    out = set()
    for w in enumerate_words(cfg, n):
        out |= trace_class(w, indep)
    return out


def test_l3_closure_matches_predicate():
    words = closure_language(L3_CFG, BC, 9)
    assert words == {w for n in range(10) for w in product("abcs", repeat=n) if l3_predicate(w)}


def test_l6_closure_matches_formula():
    words = closure_language(L6_CFG, L6_INDEPENDENCE, 14)
    assert words == l6_formula(14)
    assert all(l6_predicate(w) for w in words)


def test_letter_independence_line():
    text = "S -a->\nletter-independence: b c, a d\n"
    assert read_letter_independence(text) == letter_independence([("b", "c"), ("a", "d")])
    assert read_letter_independence("S -a->") is None


words = st.lists(st.sampled_from("abc"), min_size=0, max_size=6).map(tuple)
relations = st.sets(st.sampled_from([("a", "b"), ("a", "c"), ("b", "c")])).map(letter_independence)


@settings(max_examples=200, deadline=None)
@given(words, words, words, relations)
def test_trace_equivalence_is_an_equivalence(u, v, w, indep):
    assert word_trace_equivalent(u, u, indep)
    assert word_trace_equivalent(u, v, indep) == word_trace_equivalent(v, u, indep)
    if word_trace_equivalent(u, v, indep) and word_trace_equivalent(v, w, indep):
        assert word_trace_equivalent(u, w, indep)
    assert word_trace_equivalent(u, v, indep) == (v in trace_class(u, indep))
    assert trace_normal_form(u, indep) == min(trace_class(u, indep))


@settings(max_examples=150, deadline=None)
@given(st.lists(st.sampled_from(["a", "s", "b", "c"]), min_size=1, max_size=10), relations)
def test_closure_search_agrees_with_class_enumeration(word, indep):
    by_class = any(member(L3_CFG, v) for v in trace_class(word, indep))
    assert closure_member(L3_CFG, indep, word) == by_class
