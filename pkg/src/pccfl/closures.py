"""Grammar constructions for union, shuffle, concatenation and substitution.

Operands are renamed apart first (``X`` becomes ``X_1``, ``X_2``, ...), so a
grammar may be combined with itself.  The fresh start symbol ``S`` never
appears on a right-hand side (it is primed if ``S`` is already a letter), so its independence is irrelevant to the
language; it is kept independent of everything so that it forms its own
thread and does not break transitivity.
"""
from __future__ import annotations

from typing import Mapping

from .errors import GrammarError
from .grammar import Grammar, Production
from .words import as_word

FRESH_START = "S"


def rename(grammar: Grammar, tag: str) -> Grammar:
    """Suffix every non-terminal with ``_tag``."""
    m = {x: f"{x}_{tag}" for x in grammar.nonterminals}
    prods = tuple(Production(m[p.lhs], p.letter, tuple(m[s] for s in p.rhs)) for p in grammar.productions)
    indep = frozenset(frozenset(m[x] for x in pair) for pair in grammar.independence)
    return Grammar(m[grammar.start], prods, indep, tuple(m[x] for x in grammar.nonterminals))


def _fresh_start(*grammars: Grammar) -> str:
    taken = {a for g in grammars for a in g.alphabet}
    name = FRESH_START
    while name in taken:
        name += "'"
    return name


def _cross(g1: Grammar, g2: Grammar) -> set:
    return {frozenset((x, y)) for x in g1.nonterminals for y in g2.nonterminals}


def _isolated(name: str, *grammars: Grammar) -> set:
    return {frozenset((name, x)) for g in grammars for x in g.nonterminals}


def union(g1: Grammar, g2: Grammar) -> Grammar:
    """Language union.  Dependence is the union of both dependences."""
    a, b = rename(g1, "1"), rename(g2, "2")
    s0 = _fresh_start(a, b)
    start = [Production(s0, p.letter, p.rhs) for p in a.start_productions() + b.start_productions()]
    indep = a.independence | b.independence | _cross(a, b) | _isolated(s0, a, b)
    return Grammar(s0, tuple(start) + a.productions + b.productions, frozenset(indep))


def shuffle(g1: Grammar, g2: Grammar) -> Grammar:
    """All interleavings of a word of ``g1`` with a word of ``g2``."""
    a, b = rename(g1, "1"), rename(g2, "2")
    s0 = _fresh_start(a, b)
    start = [Production(s0, p.letter, p.rhs + (b.start,)) for p in a.start_productions()]
    start += [Production(s0, p.letter, p.rhs + (a.start,)) for p in b.start_productions()]
    indep = a.independence | b.independence | _cross(a, b) | _isolated(s0, a, b)
    return Grammar(s0, tuple(start) + a.productions + b.productions, frozenset(indep))


def concat(g1: Grammar, g2: Grammar) -> Grammar:
    """Concatenation: cross pairs stay dependent, so ``S_2`` waits for ``g1``."""
    a, b = rename(g1, "1"), rename(g2, "2")
    s0 = _fresh_start(a, b)
    start = [Production(s0, p.letter, p.rhs + (b.start,)) for p in a.start_productions()]
    indep = a.independence | b.independence
    return Grammar(s0, tuple(start) + a.productions + b.productions, frozenset(indep))


def substitute_letters(grammar: Grammar, images: Mapping[str, Grammar]) -> Grammar:
    """Grammar for ``L[s]`` where letter ``a`` is replaced by any word of ``images[a]``.

    Each production ``X -a-> alpha`` becomes ``X -b-> beta alpha`` for every
    start production ``S_a -b-> beta`` of the image grammar.  Independence is
    the union of the operands' relations, so image symbols block the rest.
    """
    missing = sorted(set(grammar.alphabet) - set(images))
    if missing:
        raise GrammarError(f"substitution undefined for letters: {', '.join(missing)}")
    base = rename(grammar, "0")
    renamed = {a: rename(images[a], str(i + 1)) for i, a in enumerate(grammar.alphabet)}
    prods = []
    for p in base.productions:
        for q in renamed[p.letter].start_productions():
            prods.append(Production(p.lhs, q.letter, q.rhs + p.rhs))
    indep = set(base.independence)
    for g in renamed.values():
        prods.extend(g.productions)
        indep |= g.independence
    return Grammar(base.start, tuple(prods), frozenset(indep))


def word_grammar(word) -> Grammar:
    """Grammar whose language is exactly ``{word}``."""
    word = as_word(word)
    if not word:
        raise GrammarError("image words must be non-empty")
    names = [f"W{i}" for i in range(len(word))]
    prods = tuple(
        Production(names[i], a, (names[i + 1],) if i + 1 < len(word) else ())
        for i, a in enumerate(word)
    )
    return Grammar(names[0], prods)


def hom_image(grammar: Grammar, h: Mapping[str, object]) -> Grammar:
    """Image under a non-erasing homomorphism given as letter -> word."""
    return substitute_letters(grammar, {a: word_grammar(w) for a, w in h.items()})
