"""Trace equivalence over letters and trace closures of context-free languages."""
from __future__ import annotations

from functools import cached_property
from dataclasses import dataclass

from .engine import DEFAULT_BUDGET, _check_word, _steps
from .errors import BudgetExhausted, GrammarError
from .grammar import Grammar
from .traces import lex_normal_form, minimal_positions, pair_set, relation_lookup, swap_class
from .words import as_word

DEFAULT_CLASS_CAP = 14


@dataclass(frozen=True)
class LetterIndependence:
    pairs: frozenset

    def __post_init__(self):
        pairs = pair_set(self.pairs)
        if any(len(p) != 2 for p in pairs):
            raise ValueError("letter independence must be irreflexive")
        object.__setattr__(self, "pairs", pairs)

    @cached_property
    def _table(self):
        return relation_lookup(self.pairs)

    def __call__(self, x: str, y: str) -> bool:
        return y in self._table.get(x, ())

    def __str__(self):
        return ", ".join(" ".join(sorted(p)) for p in sorted(self.pairs, key=sorted))


def letter_independence(pairs=()) -> LetterIndependence:
    """Build from pairs, or from text like ``"b c, a d"``."""
    if isinstance(pairs, LetterIndependence):
        return pairs
    if isinstance(pairs, str):
        pairs = [chunk.split() for chunk in pairs.split(",") if chunk.strip()]
    return LetterIndependence(frozenset(frozenset(p) for p in pairs))


def symmetric_product(left, right) -> LetterIndependence:
    """Independence making every letter of ``left`` commute with ``right``."""
    return letter_independence([(x, y) for x in left for y in right])


def read_letter_independence(text: str) -> LetterIndependence | None:
    """The ``letter-independence:`` line of a grammar file, if any."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        key, sep, value = line.partition(":")
        if sep and key.strip().lower() == "letter-independence":
            return letter_independence(value)
    return None


def trace_normal_form(word, independence) -> tuple[str, ...]:
    return lex_normal_form(as_word(word), letter_independence(independence))


def word_trace_equivalent(u, v, independence) -> bool:
    u, v = as_word(u), as_word(v)
    if sorted(u) != sorted(v):
        return False
    return trace_normal_form(u, independence) == trace_normal_form(v, independence)


def trace_class(word, independence, cap: int = DEFAULT_CLASS_CAP, max_size: int | None = None) -> set:
    """Every word reachable from ``word`` by adjacent independent swaps.

    Raises BudgetExhausted when ``word`` is longer than ``cap`` or the class
    grows past ``max_size``.
    """
    word = as_word(word)
    if len(word) > cap:
        raise BudgetExhausted(cap, f"trace class (word length {len(word)})")
    return swap_class(word, letter_independence(independence), max_size)


def closure_member(cfg: Grammar, independence, word, cap: int = DEFAULT_CLASS_CAP,
                   budget: int = DEFAULT_BUDGET) -> bool:
    """Is ``word`` trace equivalent to some word of the context-free ``cfg``?

    Same answer as running ``member`` on every word of ``trace_class``, but
    the class is walked together with the grammar: the next letter may be
    any minimal letter of the remaining trace, and dead ``(trace,
    configuration)`` pairs are remembered.  ``cap`` bounds the word length
    as for ``trace_class``.
    """
    if cfg.independence:
        raise GrammarError("closure membership expects a plain context-free grammar")
    indep = letter_independence(independence)
    word = _check_word(cfg, word)
    if len(word) > cap:
        raise BudgetExhausted(cap, f"trace class (word length {len(word)})")
    dead: set = set()
    visited = 0

    def run(rest: tuple, config: tuple) -> bool:
        nonlocal visited
        if not rest:
            return not config
        # every non-terminal still owes at least one letter
        if not config or len(config) > len(rest) or (rest, config) in dead:
            return False
        visited += 1
        if visited > budget:
            raise BudgetExhausted(budget, "trace closure search")
        for i in minimal_positions(rest, indep):
            remaining = lex_normal_form(rest[:i] + rest[i + 1:], indep)
            for _, _, nxt in _steps(cfg, config, rest[i]):
                if run(remaining, nxt):
                    return True
        dead.add((rest, config))
        return False

    return run(lex_normal_form(word, indep), (cfg.start,))
