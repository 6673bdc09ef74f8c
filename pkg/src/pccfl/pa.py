"""PA grammars: productions whose right-hand sides mix ``;`` and ``||``.

Terms are kept in normal form: nested sequences and nested parallel
compositions are flattened, the empty term disappears, and parallel
components are sorted by their rendering.  Structurally equivalent terms
therefore compare equal and can serve as memo keys.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Union

from .engine import DEFAULT_BUDGET
from .errors import BudgetExhausted, EmptyWordError, GrammarError, UnknownLetterError
from .words import as_word, sort_words


@dataclass(frozen=True)
class Empty:
    def __str__(self):
        return "eps"


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Seq:
    parts: tuple

    def __str__(self):
        return "(" + " ; ".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Par:
    parts: tuple

    def __str__(self):
        return "(" + " || ".join(map(str, self.parts)) + ")"


Term = Union[Empty, Atom, Seq, Par]
EMPTY = Empty()


def seq(*parts) -> Seq:
    return Seq(tuple(_coerce(p) for p in parts))


def par(*parts) -> Par:
    return Par(tuple(_coerce(p) for p in parts))


def _coerce(t) -> Term:
    return Atom(t) if isinstance(t, str) else t


def normalize(term) -> Term:
    """Flatten, drop empties, sort parallel parts.  Idempotent."""
    term = _coerce(term)
    if isinstance(term, (Empty, Atom)):
        return term
    kind = type(term)
    flat = []
    for part in term.parts:
        part = normalize(part)
        if isinstance(part, Empty):
            continue
        if isinstance(part, kind):
            flat.extend(part.parts)
        else:
            flat.append(part)
    if not flat:
        return EMPTY
    if len(flat) == 1:
        return flat[0]
    if kind is Par:
        flat.sort(key=str)
    return kind(tuple(flat))


def atoms(term: Term) -> int:
    """Number of atom occurrences, a lower bound on the yield length."""
    if isinstance(term, Atom):
        return 1
    if isinstance(term, Empty):
        return 0
    return sum(atoms(p) for p in term.parts)


@dataclass(frozen=True)
class PaProduction:
    lhs: str
    letter: str
    term: Term

    def __post_init__(self):
        object.__setattr__(self, "term", normalize(self.term))

    def __str__(self):
        return f"{self.lhs} -{self.letter}-> {self.term}"


@dataclass(frozen=True)
class PaGrammar:
    start: str
    productions: tuple[PaProduction, ...]

    def __post_init__(self):
        prods = tuple(p if isinstance(p, PaProduction) else PaProduction(*p) for p in self.productions)
        object.__setattr__(self, "productions", prods)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(sorted({p.letter for p in self.productions}))

    @cached_property
    def nonterminals(self) -> tuple[str, ...]:
        names = {self.start}
        for p in self.productions:
            names.add(p.lhs)
            names.update(_atom_names(p.term))
        return tuple(sorted(names))

    @cached_property
    def by_lhs(self) -> dict:
        table: dict = {}
        for p in self.productions:
            table.setdefault(p.lhs, []).append(p)
        return table

    def __str__(self):
        return format_pag(self)


def _atom_names(term: Term) -> set[str]:
    if isinstance(term, Atom):
        return {term.name}
    if isinstance(term, Empty):
        return set()
    return set().union(*(_atom_names(p) for p in term.parts))


def validate_pa(grammar: PaGrammar) -> list[str]:
    out = []
    done: set = set()
    changed = True
    while changed:
        changed = False
        for p in grammar.productions:
            if p.lhs not in done and _atom_names(p.term) <= done:
                done.add(p.lhs)
                changed = True
    for x in grammar.nonterminals:
        if x not in done:
            out.append(f"unproductive: {x}")
    for p in grammar.productions:
        if p.letter in ("", "eps", "ε"):
            out.append(f"non-greibach: {p}")
    return out


def _steps(grammar: PaGrammar, term: Term, letter: str | None):
    if isinstance(term, Atom):
        for p in grammar.by_lhs.get(term.name, ()):
            if letter is None or p.letter == letter:
                yield p.letter, p.term
    elif isinstance(term, Seq):
        head, rest = term.parts[0], term.parts[1:]
        for a, t in _steps(grammar, head, letter):
            yield a, Seq((t,) + rest)
    elif isinstance(term, Par):
        for i, part in enumerate(term.parts):
            for a, t in _steps(grammar, part, letter):
                yield a, Par(term.parts[:i] + (t,) + term.parts[i + 1:])


def pa_successors(grammar: PaGrammar, term, letter: str | None = None) -> set:
    """``(letter, normalized term)`` pairs reachable in one step."""
    return {(a, normalize(t)) for a, t in _steps(grammar, normalize(term), letter)}


def _check_word(grammar: PaGrammar, word):
    word = as_word(word, grammar.alphabet)
    unknown = set(word) - set(grammar.alphabet)
    if unknown:
        raise UnknownLetterError(unknown)
    if not word:
        raise EmptyWordError()
    return word


def pa_member(grammar: PaGrammar, word, budget: int = DEFAULT_BUDGET) -> bool:
    word = _check_word(grammar, word)
    n = len(word)
    dead: set = set()
    visited = 0

    def run(pos: int, term: Term) -> bool:
        nonlocal visited
        if pos == n:
            return isinstance(term, Empty)
        if isinstance(term, Empty) or atoms(term) > n - pos:
            return False
        if (pos, term) in dead:
            return False
        visited += 1
        if visited > budget:
            raise BudgetExhausted(budget, "PA membership search")
        for _, nxt in pa_successors(grammar, term, word[pos]):
            if run(pos + 1, nxt):
                return True
        dead.add((pos, term))
        return False

    return run(0, Atom(grammar.start))


def pa_enumerate(grammar: PaGrammar, max_len: int, budget: int = DEFAULT_BUDGET) -> list[tuple[str, ...]]:
    found: set = set()
    frontier = {((), Atom(grammar.start))} if max_len >= 1 else set()
    visited = 0
    while frontier:
        nxt_frontier = set()
        for prefix, term in frontier:
            visited += 1
            if visited > budget:
                raise BudgetExhausted(budget, "PA enumeration")
            room = max_len - len(prefix) - 1
            for a, nxt in pa_successors(grammar, term):
                w = prefix + (a,)
                if isinstance(nxt, Empty):
                    found.add(w)
                elif atoms(nxt) <= room:
                    nxt_frontier.add((w, nxt))
        frontier = nxt_frontier
    return sort_words(found)


# --- .pag text format ---------------------------------------------------------

_PRODUCTION = re.compile(r"^(\S+)\s+-(.+?)->\s*(.*)$")
_TOKEN = re.compile(r"\s*(\|\||;|\(|\)|[^\s;()|]+)")


def parse_term(text: str) -> Term:
    """``;`` binds tighter than ``||``; ``eps`` is the empty term."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise GrammarError(f"cannot tokenize term {text!r} at {pos}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    if not tokens:
        return EMPTY
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else None

    def parallel():
        nonlocal i
        parts = [sequential()]
        while peek() == "||":
            i += 1
            parts.append(sequential())
        return Par(tuple(parts)) if len(parts) > 1 else parts[0]

    def sequential():
        nonlocal i
        parts = [primary()]
        while peek() == ";":
            i += 1
            parts.append(primary())
        return Seq(tuple(parts)) if len(parts) > 1 else parts[0]

    def primary():
        nonlocal i
        tok = peek()
        if tok is None:
            raise GrammarError(f"unexpected end of term {text!r}")
        i += 1
        if tok == "(":
            t = parallel()
            if peek() != ")":
                raise GrammarError(f"missing ')' in {text!r}")
            i += 1
            return t
        if tok in (")", ";", "||"):
            raise GrammarError(f"unexpected {tok!r} in {text!r}")
        return EMPTY if tok in ("eps", "ε") else Atom(tok)

    term = parallel()
    if i != len(tokens):
        raise GrammarError(f"trailing input in term {text!r}")
    return normalize(term)


def parse_pag(text: str) -> PaGrammar:
    start = None
    prods = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _PRODUCTION.match(line)
        if m:
            prods.append(PaProduction(m.group(1), m.group(2).strip(), parse_term(m.group(3))))
            continue
        key, sep, value = line.partition(":")
        if sep and key.strip().lower() == "start":
            start = value.strip()
        else:
            raise GrammarError(f"line {lineno}: cannot parse {raw!r}")
    if not prods:
        raise GrammarError("PA grammar has no productions")
    return PaGrammar(start or prods[0].lhs, tuple(prods))


def format_pag(grammar: PaGrammar) -> str:
    lines = [f"start: {grammar.start}"]
    for p in grammar.productions:
        body = str(p.term)
        if isinstance(p.term, (Seq, Par)):
            body = body[1:-1]
        lines.append(f"{p.lhs} -{p.letter}-> {body}")
    return "\n".join(lines) + "\n"


def load_pag(path) -> PaGrammar:
    with open(path, encoding="utf-8") as fh:
        return parse_pag(fh.read())
