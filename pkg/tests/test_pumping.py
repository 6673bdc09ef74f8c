import random

import pytest
from hypothesis import given, settings, strategies as st

from pccfl import (PumpDecomposition, check_decomposition, find_decomposition, grammar_oracle,
                   interleaving_member, mpda_oracle, pa_oracle, predicate_oracle)
from pccfl.gallery import EX1, EX2, PA_NESTED, anbn, anbncn, ex1_predicate, gallery_get
from pccfl.mpda import from_transitive_grammar
from pccfl.words import format_word

ANBN_ORACLE = predicate_oracle(anbn, "ab", "anbn")
ANBNCN_ORACLE = predicate_oracle(anbncn, "abc", "anbncn")
A4B4 = "aaaabbbb"


@pytest.mark.parametrize("w, u, v, expected", [
    ("abc", "ab", "c", True),
    ("abc", "ac", "b", True),
    ("abc", "ba", "c", False),
    ("abc", "ab", "cd", False),
])
def test_interleaving_member(w, u, v, expected):
    assert interleaving_member(w, u, v) is expected


def test_given_decomposition_of_anbn():
    d = PumpDecomposition(x="aaa", s="a", y="", t="b", z="bbb")
    check = check_decomposition(ANBN_ORACLE, A4B4, d, N=2, M=2)
    assert check.ok
    assert [format_word(w) for _, w, _ in check.pumped] == ["aaabbb", "aaaabbbb", "aaaaabbbbb"]


def test_two_letter_pump_breaks_order():
    w = "a" * 5 + "b" * 5 + "c" * 5
    d = PumpDecomposition(x="aaaa", s="ab", y="", t="c", z="bbbbcccc")
    check = check_decomposition(ANBNCN_ORACLE, w, d, N=4, M=2)
    assert check.structure and check.lengths and not check.ok
    assert not ANBNCN_ORACLE(d.pumped(2))


def test_concat_needs_nonempty_pump():
    d = PumpDecomposition(x="aaaa", y="", z="bbbb", s="", t="", mode="concat")
    check = check_decomposition(ANBN_ORACLE, A4B4, d, N=3)
    assert not check.lengths and not check.ok


def test_structure_violation_detected():
    d = PumpDecomposition(x="b", s="a", y="", t="b", z="aaabbb")
    assert not check_decomposition(ANBN_ORACLE, A4B4, d, N=2).structure


def test_ccfl_and_alternative_modes():
    d = PumpDecomposition(x="", s="ab", y="aaabbb", z="", t="", mode="ccfl")
    assert check_decomposition(ANBN_ORACLE, A4B4, d, N=2).structure
    alt = PumpDecomposition(x="aaa", s="a", y="", t="b", z="bbb", mode="shuffle_alt", y_prime="ab")
    assert check_decomposition(ANBN_ORACLE, A4B4, alt, N=2).ok
    bad = PumpDecomposition(x="aaa", s="a", y="", t="b", z="bbb", mode="shuffle_alt", y_prime="ba")
    assert not check_decomposition(ANBN_ORACLE, A4B4, bad, N=2).structure


def test_unknown_mode():
    with pytest.raises(ValueError):
        PumpDecomposition("", "", "", "a", "", mode="sideways")
    with pytest.raises(ValueError):
        find_decomposition(ANBN_ORACLE, "ab", 2, mode="sideways")


def test_search_finds_anbn_decomposition():
    report = find_decomposition(ANBN_ORACLE, A4B4, N=2, mode="shuffle")
    assert report.found
    assert check_decomposition(ANBN_ORACLE, A4B4, report.decomposition, 2, 2).ok
    data = report.as_dict()
    assert data["outcome"] == "found" and len(data["pumped"]) == 3


def test_search_is_deterministic():
    a = find_decomposition(ANBN_ORACLE, A4B4, N=3, mode="concat")
    b = find_decomposition(ANBN_ORACLE, A4B4, N=3, mode="concat")
    assert a.as_dict() == b.as_dict() and a.found


def test_anbncn_has_no_shuffle_decomposition():
    report = find_decomposition(ANBNCN_ORACLE, "a" * 5 + "b" * 5 + "c" * 5, N=4, mode="shuffle")
    assert report.outcome == "none"
    assert "not a proof" in report.note


def test_ex1_has_no_concat_decomposition():
    oracle = predicate_oracle(ex1_predicate, EX1.alphabet)
    w = ["a"] * 4 + ["abar"] + ["b"] * 4 + ["bbar", "cbar"] + ["c"] * 4
    assert oracle(w)
    assert find_decomposition(oracle, w, N=3, mode="concat").outcome == "none"


def test_budget_is_an_outcome():
    report = find_decomposition(ANBNCN_ORACLE, "aaabbbccc", N=4, budget=10)
    assert report.outcome == "budget-exhausted" and report.candidates == 10


def test_oracle_adapters_agree():
    g, m = grammar_oracle(EX2), mpda_oracle(from_transitive_grammar(EX2))
    for w in ["absccab", "abs", "s", "bscb", "asac"]:
        assert g(w) == m(w)
    assert not g("") and not g("xyz")
    p = pa_oracle(PA_NESTED)
    assert p("asbc") and not p("abcs")


def test_gallery_oracles_match_predicates():
    for name in ("ex2", "anbn", "pa-example", "l3-cfg+indep"):
        entry = gallery_get(name)
        oracle = entry.oracle()
        for w in ["s", "ab", "aabb", "abcd", "ascb", "absccab"]:
            word = tuple(w)
            if set(word) <= set(entry.alphabet):
                assert oracle(word) == bool(entry.predicate(word)), (name, w)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(0, 3))
def test_check_is_monotone_in_m(seed, smaller):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    w = "a" * n + "b" * n
    cut = rng.randint(0, n - 1)
    d = PumpDecomposition(x="a" * cut, s="a" * rng.randint(1, 2), y="", t="b" * rng.randint(0, 2),
                          z="", mode="concat")
    d = PumpDecomposition(x=d.x, y=w[cut + len(d.s):len(w) - len(d.t)], z="", s=d.s, t=d.t, mode="concat")
    d = PumpDecomposition(x=d.x, y=d.y, z=w[len(d.x) + len(d.s) + len(d.y) + len(d.t):], s=d.s, t=d.t,
                          mode="concat")
    if check_decomposition(ANBN_ORACLE, w, d, N=4, M=3):
        assert check_decomposition(ANBN_ORACLE, w, d, N=4, M=smaller)
