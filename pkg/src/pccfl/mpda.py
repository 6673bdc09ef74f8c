"""Stateless multi-pushdown automata.

A transition ``X -a-> alpha_1 ; ... ; alpha_k`` reads ``a``, pops ``X`` from
its home stack and pushes ``alpha_i`` on stack ``i``.  Stack alphabets are
disjoint and acceptance is by empty stacks.  Grammars whose dependence is
transitive translate to such automata with one stack per thread.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .engine import DEFAULT_BUDGET
from .errors import BudgetExhausted, MpdaError, UnknownLetterError
from .grammar import Grammar, Production, threads
from .words import as_word, sort_words


@dataclass(frozen=True)
class Transition:
    pop: str
    letter: str
    pushes: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "pushes", tuple(tuple(a) for a in self.pushes))


@dataclass(frozen=True)
class Mpda:
    stack_alphabets: tuple[tuple[str, ...], ...]
    initial: str
    transitions: tuple[Transition, ...]

    def __post_init__(self):
        alphabets = tuple(tuple(a) for a in self.stack_alphabets)
        object.__setattr__(self, "stack_alphabets", alphabets)
        object.__setattr__(self, "transitions", tuple(self.transitions))
        home = {}
        for i, syms in enumerate(alphabets):
            for x in syms:
                if x in home:
                    raise MpdaError(f"{x} belongs to stacks {home[x] + 1} and {i + 1}")
                home[x] = i
        if self.initial not in home:
            raise MpdaError(f"initial symbol {self.initial} is on no stack")
        for t in self.transitions:
            if t.pop not in home:
                raise MpdaError(f"transition pops unknown symbol {t.pop}")
            if len(t.pushes) != len(alphabets):
                raise MpdaError(f"transition on {t.pop} pushes {len(t.pushes)} sequences, need {len(alphabets)}")
            for i, alpha in enumerate(t.pushes):
                for x in alpha:
                    if home.get(x) != i:
                        raise MpdaError(f"{x} pushed on stack {i + 1} but does not belong there")

    @property
    def k(self) -> int:
        return len(self.stack_alphabets)

    @cached_property
    def home(self) -> dict[str, int]:
        return {x: i for i, syms in enumerate(self.stack_alphabets) for x in syms}

    @cached_property
    def by_pop_letter(self) -> dict:
        table: dict = {}
        for t in self.transitions:
            table.setdefault((t.pop, t.letter), []).append(t)
        return table

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(sorted({t.letter for t in self.transitions}))

    def initial_config(self) -> tuple[tuple[str, ...], ...]:
        stacks = [()] * self.k
        stacks[self.home[self.initial]] = (self.initial,)
        return tuple(stacks)

    def moves(self, config, letter: str | None = None):
        """Yield ``(transition, next_config)`` popping any non-empty stack's top."""
        for i, stack in enumerate(config):
            if not stack:
                continue
            if letter is None:
                ts = [t for t in self.transitions if t.pop == stack[0]]
            else:
                ts = self.by_pop_letter.get((stack[0], letter), ())
            for t in ts:
                yield t, tuple(
                    t.pushes[j] + (s[1:] if j == i else s) for j, s in enumerate(config)
                )


def from_transitive_grammar(grammar: Grammar) -> Mpda:
    """One stack per thread; each rhs is projected onto the threads."""
    blocks = threads(grammar)
    home = {x: i for i, b in enumerate(blocks) for x in b}
    transitions = []
    for p in grammar.productions:
        pushes = tuple(tuple(x for x in p.rhs if home[x] == i) for i in range(len(blocks)))
        transitions.append(Transition(p.lhs, p.letter, pushes))
    return Mpda(tuple(tuple(sorted(b)) for b in blocks), grammar.start, tuple(transitions))


def to_grammar(m: Mpda) -> Grammar:
    """Symbols on different stacks become independent non-terminals."""
    prods = tuple(
        Production(t.pop, t.letter, tuple(x for alpha in t.pushes for x in alpha)) for t in m.transitions
    )
    indep = set()
    for a, b in combinations(m.stack_alphabets, 2):
        indep |= {frozenset((x, y)) for x in a for y in b}
    names = tuple(x for syms in m.stack_alphabets for x in syms)
    return Grammar(m.initial, prods, frozenset(indep), names)


def _check_word(m: Mpda, word):
    word = as_word(word, m.alphabet)
    unknown = set(word) - set(m.alphabet)
    if unknown:
        raise UnknownLetterError(unknown)
    return word


def accepts(m: Mpda, word, budget: int = DEFAULT_BUDGET) -> bool:
    """Can the automaton read ``word`` and empty all stacks?"""
    word = _check_word(m, word)
    n = len(word)
    if n == 0:
        return False
    dead: set = set()
    visited = 0

    def run(pos, config) -> bool:
        nonlocal visited
        size = sum(map(len, config))
        if pos == n:
            return size == 0
        if size == 0 or size > n - pos:
            return False
        if (pos, config) in dead:
            return False
        visited += 1
        if visited > budget:
            raise BudgetExhausted(budget, "automaton run")
        for _, nxt in m.moves(config, word[pos]):
            if run(pos + 1, nxt):
                return True
        dead.add((pos, config))
        return False

    return run(0, m.initial_config())


def enumerate_mpda(m: Mpda, max_len: int, budget: int = DEFAULT_BUDGET) -> list[tuple[str, ...]]:
    found: set = set()
    frontier = {((), m.initial_config())} if max_len >= 1 else set()
    visited = 0
    while frontier:
        nxt_frontier = set()
        for prefix, config in frontier:
            visited += 1
            if visited > budget:
                raise BudgetExhausted(budget, "automaton enumeration")
            room = max_len - len(prefix) - 1
            for t, nxt in m.moves(config):
                w = prefix + (t.letter,)
                size = sum(map(len, nxt))
                if size == 0:
                    found.add(w)
                elif size <= room:
                    nxt_frontier.add((w, nxt))
        frontier = nxt_frontier
    return sort_words(found)


# --- .mpda text format -------------------------------------------------------

_TRANSITION = re.compile(r"^(\S+)\s+-(.+?)->\s*(.*)$")


def parse_mpda(text: str) -> Mpda:
    """Parse::

        stacks: 3
        stack 1: S A B
        stack 2: A'
        stack 3: B'
        initial: S
        S -a-> S A ; eps ; eps
    """
    k = None
    alphabets: dict[int, tuple] = {}
    initial = None
    transitions = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _TRANSITION.match(line)
        if m:
            parts = m.group(3).split(";")
            pushes = tuple(tuple(t for t in part.split() if t != "eps") for part in parts)
            transitions.append((lineno, m.group(1), m.group(2).strip(), pushes))
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise MpdaError(f"line {lineno}: cannot parse {raw!r}")
        key = key.strip().lower()
        if key == "stacks":
            k = int(value)
        elif key.startswith("stack"):
            alphabets[int(key.split()[1])] = tuple(value.split())
        elif key == "initial":
            initial = value.strip()
        else:
            raise MpdaError(f"line {lineno}: unknown directive {key!r}")
    if k is None:
        k = len(alphabets)
    if sorted(alphabets) != list(range(1, k + 1)):
        raise MpdaError(f"expected stack lines 1..{k}")
    trans = []
    for lineno, pop, letter, pushes in transitions:
        if len(pushes) == 1 and k > 1 and not pushes[0]:
            pushes = ((),) * k
        if len(pushes) != k:
            raise MpdaError(f"line {lineno}: {len(pushes)} push sequences for {k} stacks")
        trans.append(Transition(pop, letter, pushes))
    return Mpda(tuple(alphabets[i] for i in range(1, k + 1)), initial, tuple(trans))


def format_mpda(m: Mpda) -> str:
    lines = [f"stacks: {m.k}"]
    lines += [f"stack {i + 1}: {' '.join(syms)}" for i, syms in enumerate(m.stack_alphabets)]
    lines.append(f"initial: {m.initial}")
    for t in m.transitions:
        pushes = " ; ".join(" ".join(a) if a else "eps" for a in t.pushes)
        lines.append(f"{t.pop} -{t.letter}-> {pushes}")
    return "\n".join(lines) + "\n"


def load_mpda(path) -> Mpda:
    with open(path, encoding="utf-8") as fh:
        return parse_mpda(fh.read())
