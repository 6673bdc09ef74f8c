from itertools import product

import pytest

from pccfl import (enumerate_mpda, enumerate_words, gallery_get, gallery_list, pa_enumerate, parse_mpda,
                   parse_pag, parse_pcg, trace_class, validate, validate_pa)
from pccfl.gallery import EX2, L3_GRAMMAR, entries
from pccfl.trace_closure import read_letter_independence

REQUIRED = ["ex1", "ex2", "l3-grammar", "l3-cfg+indep", "l6-cfg+indep", "anbncn", "equal-abc",
            "concat-witness", "invhom-witness"]


def language(entry, n):
    if entry.kind == "grammar":
        return set(enumerate_words(entry.payload, n))
    if entry.kind == "mpda":
        return set(enumerate_mpda(entry.payload, n))
    if entry.kind == "pa-grammar":
        return set(pa_enumerate(entry.payload, n))
    out = set()
    for w in enumerate_words(entry.payload, n):
        out |= trace_class(w, entry.letter_independence, cap=n)
    return out


def brute_length(entry, limit=120_000):
    """Longest length whose full word space stays below ``limit``."""
    n = 0
    while n < entry.check_len and len(entry.alphabet) ** (n + 1) <= limit:
        n += 1
    return n


def test_required_entries_present():
    assert set(REQUIRED) <= set(gallery_list())


def test_lookup():
    assert gallery_get("ex2").payload == EX2 and EX2.start == "S"
    l3 = gallery_get("l3-grammar").payload
    assert l3 == L3_GRAMMAR and len(l3.productions) == 6
    with pytest.raises(KeyError, match="available: ex1"):
        gallery_get("nope")


@pytest.mark.parametrize("name", gallery_list())
def test_entries_are_well_formed(name):
    e = gallery_get(name)
    if e.kind in ("grammar", "cfg+letter-independence"):
        assert validate(e.payload) == []
    elif e.kind == "pa-grammar":
        assert validate_pa(e.payload) == []
    if e.kind == "cfg+letter-independence":
        assert not e.payload.independence and e.letter_independence is not None


CHECKED = [e.name for e in entries() if e.predicate is not None and e.check_len]


@pytest.mark.parametrize("name", CHECKED)
def test_language_matches_predicate(name):
    e = gallery_get(name)
    n = brute_length(e)
    expected = {w for k in range(1, n + 1) for w in product(e.alphabet, repeat=k) if e.predicate(w)}
    assert language(e, n) == expected
    found = language(e, e.check_len) if e.kind != "cfg+letter-independence" else language(e, min(e.check_len, 10))
    assert all(e.predicate(w) for w in found)


@pytest.mark.parametrize("name", CHECKED)
def test_oracle_matches_predicate(name):
    e = gallery_get(name)
    oracle = e.oracle()
    n = min(brute_length(e, 5_000), 8)
    for k in range(1, n + 1):
        for w in product(e.alphabet, repeat=k):
            assert oracle(w) == bool(e.predicate(w)), w


@pytest.mark.parametrize("name", [n for n in gallery_list() if gallery_get(n).kind != "predicate"])
def test_export_round_trip(name):
    e = gallery_get(name)
    ext, text = e.export()
    parser = {".pcg": parse_pcg, ".mpda": parse_mpda, ".pag": parse_pag}[ext]
    assert parser(text) == e.payload
    if e.kind == "cfg+letter-independence":
        assert read_letter_independence(text) == e.letter_independence


def test_predicate_entries_have_no_file_form():
    with pytest.raises(ValueError):
        gallery_get("anbncn").export()


def test_witness_parts():
    cw = gallery_get("concat-witness")
    assert set(cw.parts) == {"L1", "L2"}
    ih = gallery_get("invhom-witness")
    assert ih.parts["h"]["s"] == ("S", "S")
    assert ("A", "A", "S", "B", "T", "S", "B", "T", "C") in language(ih, 9)
