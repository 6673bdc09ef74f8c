import random

import pytest
from hypothesis import given, settings, strategies as st

from pccfl import (EMPTY, Atom, GrammarError, PaGrammar, PaProduction, Par, Seq, UnknownLetterError,
                   enumerate_words, format_pag, normalize, pa_enumerate, pa_member, pa_successors, par,
                   parse_pag, parse_term, seq)
from pccfl.gallery import ANBN, L3_CFG, PA_EXAMPLE, PA_NESTED
from pccfl.generate import random_term
from pccfl.words import format_word


def test_normalize_flattens_and_sorts():
    assert normalize(par(par("X", "Y"), "Z")) == Par((Atom("X"), Atom("Y"), Atom("Z")))
    assert normalize(seq(EMPTY, "X")) == Atom("X")
    assert normalize(seq("X", seq("Y", "Z"))) == Seq((Atom("X"), Atom("Y"), Atom("Z")))
    assert normalize(par("Z", "X")) == normalize(par("X", "Z"))
    assert normalize(par(EMPTY, EMPTY)) == EMPTY


def test_parse_term_precedence():
    assert parse_term("A ; B || C") == normalize(par(seq("A", "B"), "C"))
    assert parse_term("A ; (B || C)") == normalize(seq("A", par("B", "C")))
    assert parse_term("eps") == EMPTY
    with pytest.raises(GrammarError):
        parse_term("(A ; B")


def grammar(*prods):
    return PaGrammar("S", tuple(PaProduction(x, a, parse_term(t)) for x, a, t in prods))


def test_successors_of_sequence():
    g = grammar(("X", "a", "eps"), ("Y", "b", "eps"))
    assert pa_successors(g, seq("X", "Y")) == {("a", Atom("Y"))}


def test_successors_of_parallel():
    g = grammar(("X", "a", "eps"), ("Y", "b", "eps"))
    assert pa_successors(g, par("X", "Y")) == {("a", Atom("Y")), ("b", Atom("X"))}


def test_only_leftmost_of_sequence_enabled():
    g = grammar(("A", "a", "eps"), ("B", "b", "eps"), ("C", "c", "eps"))
    fired = {a for a, _ in pa_successors(g, par(seq("A", "B"), "C"))}
    assert fired == {"a", "c"}


def test_pa_example_language():
    assert {format_word(w) for w in pa_enumerate(PA_EXAMPLE, 4)} == {"abcd", "abdc", "adbc"}
    assert not pa_member(PA_EXAMPLE, "acbd")
    assert pa_member(PA_EXAMPLE, "adbc")


def test_single_letter_grammar():
    g = grammar(("S", "a", "eps"))
    assert pa_enumerate(g, 5) == [("a",)]


def test_unknown_letter():
    with pytest.raises(UnknownLetterError):
        pa_member(PA_EXAMPLE, "az")


def test_nested_recursion():
    words = {format_word(w) for w in pa_enumerate(PA_NESTED, 5)}
    assert words == {"s", "asbc", "ascb", "acsb"}
    for w in pa_enumerate(PA_NESTED, 7):
        assert pa_member(PA_NESTED, w)


def test_sequential_only_matches_context_free():
    for cfg in (ANBN, L3_CFG):
        text = "\n".join(f"{p.lhs} -{p.letter}-> {' ; '.join(p.rhs) or 'eps'}" for p in cfg.productions)
        g = parse_pag(f"start: {cfg.start}\n{text}")
        assert set(pa_enumerate(g, 8)) == set(enumerate_words(cfg, 8))


def test_text_round_trip():
    for g in (PA_EXAMPLE, PA_NESTED):
        assert parse_pag(format_pag(g)) == g


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 100_000))
def test_normalize_is_idempotent_and_order_blind(seed):
    t = random_term(random.Random(seed))
    n = normalize(t)
    assert normalize(n) == n
    if isinstance(t, Par):
        assert normalize(Par(tuple(reversed(t.parts)))) == n
    assert parse_term(str(n)) == n


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_member_agrees_with_enumeration(seed):
    rng = random.Random(seed)
    words = pa_enumerate(PA_NESTED, 7)
    w = rng.choice(words)
    assert pa_member(PA_NESTED, w)
    scrambled = list(w)
    rng.shuffle(scrambled)
    assert pa_member(PA_NESTED, scrambled) == (tuple(scrambled) in set(words))
