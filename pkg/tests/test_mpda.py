import random

import pytest
from hypothesis import given, settings, strategies as st

from pccfl import (MpdaError, Mpda, NotTransitiveError, Transition, UnknownLetterError, accepts,
                   enumerate_mpda, enumerate_words, format_mpda, from_transitive_grammar, parse_mpda,
                   parse_pcg, threads, to_grammar)
from pccfl.gallery import ANBN, EQUAL_ABC, EX1, EX2, L3_GRAMMAR
from pccfl.generate import random_grammar

EX2_MPDA = from_transitive_grammar(EX2)


def transition(m, pop, letter):
    (t,) = [t for t in m.transitions if t.pop == pop and t.letter == letter]
    return t


def test_ex2_projection():
    m = EX2_MPDA
    assert m.k == 3
    home = {x: m.home[x] for x in ("S", "A", "B", "A'", "B'")}
    assert home["S"] == home["A"] == home["B"]
    assert len({home["S"], home["A'"], home["B'"]}) == 3
    assert transition(m, "S", "a").pushes[home["S"]] == ("S", "A")
    pushed = transition(m, "A", "c").pushes
    assert pushed[home["A'"]] == ("A'",) and sum(map(len, pushed)) == 1
    assert transition(m, "A'", "a").pushes == ((), (), ())


def test_single_thread_is_plain_pushdown():
    g = parse_pcg("S -a-> S B\nS -s->\nB -b->")
    m = from_transitive_grammar(g)
    assert m.k == 1
    assert [(t.pop, t.letter, t.pushes[0]) for t in m.transitions] == [(p.lhs, p.letter, p.rhs) for p in g.productions]


def test_non_transitive_rejected():
    with pytest.raises(NotTransitiveError) as info:
        from_transitive_grammar(EX1)
    assert info.value.witness == ("B", "P", "C")


@pytest.mark.parametrize("word, expected", [("absccab", True), ("s", True), ("abscbca", True), ("abs", False)])
def test_acceptance(word, expected):
    assert accepts(EX2_MPDA, word) is expected


def test_empty_word_and_unknown_letters():
    assert accepts(EX2_MPDA, "") is False
    with pytest.raises(UnknownLetterError):
        accepts(EX2_MPDA, "abz")


@pytest.mark.parametrize("g", [EX2, L3_GRAMMAR, ANBN, EQUAL_ABC])
def test_thread_projection_preserves_language(g):
    m = from_transitive_grammar(g)
    assert set(enumerate_mpda(m, 8)) == set(enumerate_words(g, 8))
    assert set(enumerate_words(to_grammar(m), 8)) == set(enumerate_words(g, 8))


def test_one_stack_gives_dependent_grammar():
    m = Mpda((("S", "B"),), "S", (Transition("S", "a", (("S", "B"),)), Transition("S", "s", ((),)),
                                     Transition("B", "b", ((),))))
    g = to_grammar(m)
    assert g.independence == frozenset()
    assert {"".join(w) for w in enumerate_words(g, 5)} == {"s", "asb", "aasbb"}


def test_untouched_stack_is_isolated_thread():
    m = Mpda((("S",), ("Z",)), "S", (Transition("S", "a", ((), ())),))
    g = to_grammar(m)
    assert frozenset({"Z"}) in threads(g)


def test_invalid_automata():
    with pytest.raises(MpdaError):
        Mpda((("S",), ("S",)), "S", ())
    with pytest.raises(MpdaError):
        Mpda((("S",), ("A",)), "S", (Transition("S", "a", (("A",), ())),))
    with pytest.raises(MpdaError):
        Mpda((("S",),), "X", ())
    with pytest.raises(MpdaError):
        parse_mpda("stacks: 2\nstack 1: S\ninitial: S\n")


def test_text_round_trip():
    text = format_mpda(EX2_MPDA)
    assert parse_mpda(text) == EX2_MPDA
    assert "S -s-> eps ; eps ; eps" in text


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_round_trips_on_random_transitive_grammars(seed):
    g = random_grammar(random.Random(seed), n_nonterminals=4, letters="ab")
    try:
        m = from_transitive_grammar(g)
    except NotTransitiveError:
        return
    words = set(enumerate_words(g, 6))
    assert set(enumerate_mpda(m, 6)) == words
    back = from_transitive_grammar(to_grammar(m))
    assert set(enumerate_mpda(back, 6)) == words
