"""Seeded random grammars, words and PA terms for testing."""
from __future__ import annotations

import random
from typing import Callable, Hashable, Iterable

from .engine import successors
from .grammar import Grammar, Production
from .mpda import Mpda
from .pa import EMPTY, Atom, PaGrammar, Par, Seq, atoms, pa_successors


def random_grammar(rng: random.Random, n_nonterminals: int = 4, letters: str = "abc",
                   extra: int | None = None, max_rhs: int = 2, p_indep: float = 0.35) -> Grammar:
    """A productive Greibach grammar with a random independence relation.

    Every non-terminal gets one terminating production, so productivity
    holds by construction; ``extra`` further productions get random
    right-hand sides (twice the number of non-terminals by default).
    """
    if extra is None:
        extra = 2 * n_nonterminals
    names = [f"X{i}" for i in range(n_nonterminals)]
    prods = [Production(x, rng.choice(letters)) for x in names]
    for _ in range(extra):
        rhs = tuple(rng.choice(names) for _ in range(rng.randint(1, max_rhs)))
        prods.append(Production(rng.choice(names), rng.choice(letters), rhs))
    pairs = [(x, y) for i, x in enumerate(names) for y in names[i + 1:] if rng.random() < p_indep]
    return Grammar(names[0], tuple(dict.fromkeys(prods)), frozenset(frozenset(p) for p in pairs))


def random_word(step: Callable, start: Hashable, size: Callable, rng: random.Random,
                min_len: int, max_len: int, attempts: int = 200):
    """Random derivation with rejection on length; None if every attempt fails.

    ``step(config)`` returns ``(letter, next_config)`` pairs and ``size``
    bounds the number of letters a configuration still has to produce.
    """
    for _ in range(attempts):
        config, word = start, []
        while size(config):
            room = max_len - len(word) - 1
            options = sorted((o for o in step(config) if size(o[1]) <= room), key=repr)
            if not options:
                break
            letter, config = rng.choice(options)
            word.append(letter)
        if not size(config) and len(word) >= min_len:
            return tuple(word)
    return None


def sample_words(kind_payload, rng: random.Random, count: int, min_len: int, max_len: int,
                 attempts: int = 2000) -> list[tuple[str, ...]]:
    """Up to ``count`` distinct words from a grammar, automaton or PA grammar."""
    step, start, size = _walker(kind_payload)
    found: list = []
    for _ in range(attempts):
        if len(found) >= count:
            break
        w = random_word(step, start, size, rng, min_len, max_len, attempts=20)
        if w is not None and w not in found:
            found.append(w)
    return found


def _walker(payload):
    if isinstance(payload, Grammar):
        return (lambda c: successors(payload, c)), (payload.start,), len
    if isinstance(payload, PaGrammar):
        return (lambda t: pa_successors(payload, t)), Atom(payload.start), atoms
    if isinstance(payload, Mpda):
        return ((lambda c: [(t.letter, nxt) for t, nxt in payload.moves(c)]),
                payload.initial_config(), lambda c: sum(map(len, c)))
    raise TypeError(f"cannot sample words from {type(payload).__name__}")


def random_term(rng: random.Random, depth: int = 3, names: Iterable[str] = "ABC"):
    """Random un-normalised PA term, possibly with nested and empty parts."""
    names = tuple(names)
    roll = rng.random()
    if depth == 0 or roll < 0.3:
        return EMPTY if rng.random() < 0.1 else Atom(rng.choice(names))
    kind = Seq if roll < 0.65 else Par
    return kind(tuple(random_term(rng, depth - 1, names) for _ in range(rng.randint(1, 3))))


__all__ = ["random_grammar", "random_word", "sample_words", "random_term"]
