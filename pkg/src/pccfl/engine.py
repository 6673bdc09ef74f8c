"""Derivations, bounded membership and bounded enumeration.

Configurations are explored as traces: a state is the lexicographically
least word of its swap-equivalence class.  An occurrence may fire when every
earlier symbol is independent of it; firing ``X -a-> alpha`` removes the
occurrence and prepends ``alpha``.  This absorbs the explicit swap steps.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import BudgetExhausted, DerivationError, EmptyWordError, UnknownLetterError
from .grammar import Grammar, Production
from .traces import lex_normal_form, minimal_positions
from .words import as_word, sort_words

DEFAULT_BUDGET = 10**7
STEP_CACHE_LIMIT = 500_000


def canonical(grammar: Grammar, config: Sequence[str]) -> tuple[str, ...]:
    """Least representative of the trace class of ``config``."""
    config = tuple(config)
    if len(config) < 2 or not grammar.independence:
        return config
    return lex_normal_form(config, grammar.independent)


def swap_reachable(grammar: Grammar, c1: Sequence[str], c2: Sequence[str]) -> bool:
    return canonical(grammar, c1) == canonical(grammar, c2)


def _fire(grammar: Grammar, config: tuple, letter: str | None = None):
    """Yield ``(production, position, successor)`` for every enabled step."""
    for i in minimal_positions(config, grammar.independent):
        x = config[i]
        rest = config[:i] + config[i + 1:]
        prods = grammar.by_lhs.get(x, ()) if letter is None else grammar.by_lhs_letter.get((x, letter), ())
        for p in prods:
            yield p, i, canonical(grammar, p.rhs + rest)


def _steps(grammar: Grammar, config: tuple, letter: str | None = None) -> tuple:
    """Memoised ``tuple(_fire(...))``; the memo lives on the grammar."""
    memo = grammar.step_cache
    key = (config, letter)
    hit = memo.get(key)
    if hit is None:
        hit = tuple(_fire(grammar, config, letter))
        if len(memo) < STEP_CACHE_LIMIT:
            memo[key] = hit
    return hit


def successors(grammar: Grammar, config: Sequence[str]) -> set[tuple[str, tuple]]:
    """Set of ``(letter, canonical successor)`` reachable by one production step."""
    return {(p.letter, nxt) for p, _, nxt in _steps(grammar, tuple(config))}


def _check_word(grammar: Grammar, word) -> tuple[str, ...]:
    word = as_word(word, grammar.alphabet)
    unknown = set(word) - set(grammar.alphabet)
    if unknown:
        raise UnknownLetterError(unknown)
    if not word:
        raise EmptyWordError()
    return word


class _Search:
    """Memoised depth-first search over ``(position, trace)`` states."""

    def __init__(self, grammar: Grammar, word: tuple, budget: int):
        self.grammar = grammar
        self.word = word
        self.budget = budget
        self.visited = 0
        self.dead: set = set()

    def path(self, pos: int, config: tuple):
        """List of ``(production, position)`` choices reaching the end, or None."""
        n = len(self.word)
        if pos == n:
            return [] if not config else None
        if not config or len(config) > n - pos:
            return None
        key = (pos, config)
        if key in self.dead:
            return None
        self.visited += 1
        if self.visited > self.budget:
            raise BudgetExhausted(self.budget, "membership search")
        for p, i, nxt in _steps(self.grammar, config, self.word[pos]):
            rest = self.path(pos + 1, nxt)
            if rest is not None:
                return [(p, config[i])] + rest
        self.dead.add(key)
        return None


def member(grammar: Grammar, word, budget: int = DEFAULT_BUDGET) -> bool:
    """Does the start symbol derive ``word``?

    Raises UnknownLetterError, EmptyWordError, or BudgetExhausted.
    """
    word = _check_word(grammar, word)
    search = _Search(grammar, word, budget)
    return search.path(0, (grammar.start,)) is not None


def enumerate_words(grammar: Grammar, max_len: int, budget: int = DEFAULT_BUDGET) -> list[tuple[str, ...]]:
    """All words of length at most ``max_len``, sorted by length then tokens."""
    found: set = set()
    frontier = {((), (grammar.start,))} if max_len >= 1 else set()
    visited = 0
    while frontier:
        nxt_frontier = set()
        for prefix, config in frontier:
            visited += 1
            if visited > budget:
                raise BudgetExhausted(budget, "enumeration")
            room = max_len - len(prefix) - 1
            for p, _, nxt in _steps(grammar, config):
                w = prefix + (p.letter,)
                if not nxt:
                    found.add(w)
                elif len(nxt) <= room:
                    nxt_frontier.add((w, nxt))
        frontier = nxt_frontier
    return sort_words(found)


# --- explicit derivations ----------------------------------------------------


@dataclass(frozen=True)
class ProductionStep:
    """Fire ``production`` on the head of the configuration."""

    production: Production
    position: int = 0


@dataclass(frozen=True)
class SwapStep:
    """Swap positions ``index`` and ``index + 1``."""

    index: int


Step = Union[ProductionStep, SwapStep]


@dataclass(frozen=True)
class Derivation:
    start: tuple[str, ...]
    steps: tuple[Step, ...]
    word: tuple[str, ...]

    @property
    def production_steps(self) -> int:
        return sum(isinstance(s, ProductionStep) for s in self.steps)

    @property
    def swap_steps(self) -> int:
        return sum(isinstance(s, SwapStep) for s in self.steps)


def replay(grammar: Grammar, derivation: Derivation) -> list[tuple[str, ...]]:
    """Configurations visited by ``derivation``; checks every step.

    Raises DerivationError naming the first bad step.
    """
    config = tuple(derivation.start)
    configs = [config]
    letters = []
    for k, step in enumerate(derivation.steps):
        if isinstance(step, SwapStep):
            i = step.index
            if not 0 <= i < len(config) - 1:
                raise DerivationError(k, f"swap index {i} out of range")
            if not grammar.independent(config[i], config[i + 1]):
                raise DerivationError(k, f"{config[i]} and {config[i + 1]} are dependent")
            config = config[:i] + (config[i + 1], config[i]) + config[i + 2:]
        else:
            p = step.production
            if step.position != 0:
                raise DerivationError(k, "production steps fire at the head")
            if p not in grammar.productions:
                raise DerivationError(k, f"{p} is not a production")
            if not config or config[0] != p.lhs:
                raise DerivationError(k, f"head is not {p.lhs}")
            config = p.rhs + config[1:]
            letters.append(p.letter)
        configs.append(config)
    if config:
        raise DerivationError(len(derivation.steps), "derivation does not end in the empty configuration")
    if tuple(letters) != tuple(derivation.word):
        raise DerivationError(len(derivation.steps), "emitted letters differ from the recorded word")
    return configs


def derive_witness(grammar: Grammar, word, budget: int = DEFAULT_BUDGET) -> Derivation | None:
    """A concrete derivation of ``word`` with explicit swaps, or None."""
    word = _check_word(grammar, word)
    search = _Search(grammar, word, budget)
    choices = search.path(0, (grammar.start,))
    if choices is None:
        return None
    start = (grammar.start,)
    raw = start
    steps: list[Step] = []
    for production, symbol in choices:
        # the first occurrence of a symbol is the one that was minimal
        j = raw.index(symbol)
        for i in range(j - 1, -1, -1):
            steps.append(SwapStep(i))
            raw = raw[:i] + (raw[i + 1], raw[i]) + raw[i + 2:]
        steps.append(ProductionStep(production))
        raw = production.rhs + raw[1:]
    return Derivation(start, tuple(steps), word)
