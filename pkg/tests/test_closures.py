from itertools import product

import pytest

from pccfl import (GrammarError, NotTransitiveError, concat, enumerate_words, hom_image, is_transitive,
                   parse_pcg, shuffle, substitute_letters, threads, union, validate, word_grammar)
from pccfl.gallery import ANBN, EQUAL_ABC, EX1, EX2, INVHOM_H, L3_GRAMMAR
from pccfl.words import concat_sets, format_word, shuffle_sets


def lang(g, n):
    return set(enumerate_words(g, n))


def strs(g, n):
    return {format_word(w) for w in lang(g, n)}


def finite(*words):
    """Grammar for a finite set of words: a union of word grammars."""
    g = word_grammar(words[0])
    for w in words[1:]:
        g = union(g, word_grammar(w))
    return g


A_PLUS = parse_pcg("S -a-> S\nS -a->")


def test_union_basic():
    assert strs(union(finite("a"), finite("b")), 3) == {"a", "b"}
    assert lang(union(EX2, EX2), 7) == lang(EX2, 7)


def test_union_of_ex1_and_ex2():
    g = union(EX1, EX2)
    assert validate(g) == []
    assert lang(g, 6) == lang(EX1, 6) | lang(EX2, 6)


def test_shuffle_basic():
    assert strs(shuffle(finite("ab"), finite("c")), 4) == {"abc", "acb", "cab"}
    assert strs(shuffle(finite("a"), finite("b")), 3) == {"ab", "ba"}


def test_shuffle_with_single_letter():
    g = shuffle(EX2, parse_pcg("D -d->"))
    assert lang(g, 5) == shuffle_sets(lang(EX2, 4), [("d",)], 5)


def test_concat_basic():
    assert strs(concat(finite("a"), finite("b")), 3) == {"ab"}
    assert strs(concat(finite("a", "aa"), finite("b")), 4) == {"ab", "aab"}


def test_concat_of_ex2_with_itself():
    assert lang(concat(EX2, EX2), 8) == concat_sets(lang(EX2, 7), lang(EX2, 7), 8)


def test_substitution_expands_letters():
    g = substitute_letters(finite("ab"), {"a": finite("c", "d"), "b": finite("e")})
    assert strs(g, 3) == {"ce", "de"}
    identity = {a: finite(a) for a in EX2.alphabet}
    assert lang(substitute_letters(EX2, identity), 8) == lang(EX2, 8)


def test_substitution_missing_letter():
    with pytest.raises(GrammarError):
        substitute_letters(finite("ab"), {"a": finite("c")})


def test_homomorphic_image():
    g = hom_image(A_PLUS, {"a": "bc"})
    assert strs(g, 8) == {"bc" * n for n in range(1, 5)}
    assert lang(hom_image(EX2, {a: a for a in EX2.alphabet}), 8) == lang(EX2, 8)


def test_inverse_homomorphism_gallery_map():
    g = hom_image(word_grammar("a s b t c"), INVHOM_H)
    assert lang(g, 10) == {("A", "S", "S", "B", "B", "T", "T", "C")}


def test_self_combination_is_renamed_apart():
    g = concat(ANBN, ANBN)
    assert len(set(g.nonterminals)) == len(g.nonterminals) == 2 * len(ANBN.nonterminals) + 1
    assert lang(g, 8) == concat_sets(lang(ANBN, 6), lang(ANBN, 6), 8)


@pytest.mark.parametrize("op", [union, shuffle])
def test_union_and_shuffle_keep_transitivity(op):
    g = op(EX2, L3_GRAMMAR)
    assert is_transitive(g)
    assert len(threads(g)) == len(threads(EX2)) + len(threads(L3_GRAMMAR)) + 1


def test_concat_and_substitution_can_lose_transitivity():
    assert is_transitive(EQUAL_ABC) and is_transitive(ANBN)
    with pytest.raises(NotTransitiveError):
        threads(concat(EQUAL_ABC, ANBN))
    g = substitute_letters(EQUAL_ABC, {"a": ANBN, "b": finite("b"), "c": finite("c")})
    assert not is_transitive(g)


SMALL = {"ex2": EX2, "l3": L3_GRAMMAR, "anbn": ANBN, "abc": EQUAL_ABC}


@pytest.mark.parametrize("left, right", list(product(SMALL, repeat=2)))
def test_constructions_match_set_operations(left, right):
    g1, g2, n = SMALL[left], SMALL[right], 6
    l1, l2 = lang(g1, n), lang(g2, n)
    assert lang(union(g1, g2), n) == l1 | l2
    assert lang(concat(g1, g2), n) == concat_sets(l1, l2, n)
    assert lang(shuffle(g1, g2), n) == shuffle_sets(l1, l2, n)


def test_word_grammar_rejects_empty():
    with pytest.raises(GrammarError):
        word_grammar("")
