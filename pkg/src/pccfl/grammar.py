"""Greibach grammars with an independence relation over non-terminals.

A production ``X -a-> A B`` emits exactly one letter.  Two non-terminals
that form an independence pair may swap places in a configuration; every
other pair (including ``{X, X}``) is dependent.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import GrammarError, NotTransitiveError
from .traces import pair_set, relation_lookup

SILENT_LETTERS = frozenset({"", "eps", "ε"})


@dataclass(frozen=True)
class Production:
    lhs: str
    letter: str
    rhs: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rhs", tuple(self.rhs))

    def __str__(self):
        return f"{self.lhs} -{self.letter}-> {' '.join(self.rhs)}".rstrip()


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str

    def __str__(self):
        return f"{self.kind}: {self.message}"


@dataclass(frozen=True)
class Grammar:
    """Immutable partially-commutative Greibach grammar.

    ``nonterminals`` defaults to every symbol mentioned by the start symbol,
    the productions and the independence pairs.  Productions keep their
    given order; it fixes production indices and exploration order.
    """

    start: str
    productions: tuple[Production, ...]
    independence: frozenset = frozenset()
    nonterminals: tuple[str, ...] = field(default=())

    def __post_init__(self):
        prods = tuple(p if isinstance(p, Production) else Production(*p) for p in self.productions)
        object.__setattr__(self, "productions", prods)
        object.__setattr__(self, "independence", pair_set(self.independence))
        names = set(self.nonterminals)
        if not names:
            names.add(self.start)
            for p in prods:
                names.add(p.lhs)
                names.update(p.rhs)
            for pair in self.independence:
                names.update(pair)
        object.__setattr__(self, "nonterminals", tuple(sorted(names)))

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(sorted({p.letter for p in self.productions}))

    @cached_property
    def _independent_of(self) -> dict:
        return relation_lookup(self.independence)

    @cached_property
    def by_lhs(self) -> dict[str, tuple[Production, ...]]:
        table: dict = {}
        for p in self.productions:
            table.setdefault(p.lhs, []).append(p)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def by_lhs_letter(self) -> dict[tuple[str, str], tuple[Production, ...]]:
        table: dict = {}
        for p in self.productions:
            table.setdefault((p.lhs, p.letter), []).append(p)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def step_cache(self) -> dict:
        """Scratch memo for one-step successors, filled by the engine."""
        return {}

    def independent(self, x: str, y: str) -> bool:
        return x != y and y in self._independent_of.get(x, ())

    def start_productions(self) -> tuple[Production, ...]:
        return self.by_lhs.get(self.start, ())

    def production_index(self, production: Production) -> int:
        return self.productions.index(production)

    def __str__(self):
        return format_pcg(self)


def validate(grammar: Grammar) -> list[Diagnostic]:
    """Every violated grammar invariant; an empty list means valid."""
    out: list[Diagnostic] = []
    declared = set(grammar.nonterminals)
    if grammar.start not in declared:
        out.append(Diagnostic("undeclared", f"start symbol {grammar.start}"))
    for i, p in enumerate(grammar.productions):
        for sym in (p.lhs, *p.rhs):
            if sym not in declared:
                out.append(Diagnostic("undeclared", f"{sym} in production {i} ({p})"))
        if p.letter in SILENT_LETTERS:
            out.append(Diagnostic("non-greibach", f"production {i} ({p}) emits no letter"))
    for pair in sorted(grammar.independence, key=sorted):
        if len(pair) == 1:
            (x,) = pair
            out.append(Diagnostic("reflexive pair", f"({x},{x})"))
        for sym in sorted(pair):
            if sym not in declared:
                out.append(Diagnostic("undeclared", f"{sym} in independence"))
    clash = set(grammar.alphabet) & declared
    for sym in sorted(clash):
        out.append(Diagnostic("letter clash", f"{sym} is both a letter and a non-terminal"))
    for x in sorted(declared - productive(grammar)):
        out.append(Diagnostic("unproductive", x))
    return out


def productive(grammar: Grammar) -> set[str]:
    """Least fixpoint: X is productive if some X-production has a productive rhs."""
    done: set[str] = set()
    changed = True
    while changed:
        changed = False
        for p in grammar.productions:
            if p.lhs not in done and all(s in done for s in p.rhs):
                done.add(p.lhs)
                changed = True
    return done


def dependence(grammar: Grammar) -> frozenset:
    """Unordered dependent pairs; singletons ``{X}`` stand for ``(X, X)``."""
    names = grammar.nonterminals
    pairs = {frozenset([x]) for x in names}
    pairs |= {frozenset(p) for p in combinations(names, 2)}
    return frozenset(pairs - grammar.independence)


def transitivity_witness(grammar: Grammar) -> tuple[str, str, str] | None:
    """First ``(X, Y, Z)`` in name order breaking transitivity of dependence."""
    names = grammar.nonterminals
    for i, x in enumerate(names):
        for z in names[i + 1:]:
            if not grammar.independent(x, z):
                continue
            for y in names:
                if y in (x, z):
                    continue
                if not grammar.independent(x, y) and not grammar.independent(y, z):
                    return (x, y, z)
    return None


def threads(grammar: Grammar) -> tuple[frozenset, ...]:
    """Equivalence classes of dependence, ordered by their least name.

    Raises NotTransitiveError when dependence is not an equivalence.
    """
    witness = transitivity_witness(grammar)
    if witness is not None:
        raise NotTransitiveError(witness)
    blocks: list[set] = []
    for x in grammar.nonterminals:
        for block in blocks:
            if not grammar.independent(x, next(iter(block))):
                block.add(x)
                break
        else:
            blocks.append({x})
    return tuple(sorted((frozenset(b) for b in blocks), key=min))


def is_transitive(grammar: Grammar) -> bool:
    return transitivity_witness(grammar) is None


# --- .pcg text format -------------------------------------------------------

_PRODUCTION = re.compile(r"^(\S+)\s+-(.+?)->\s*(.*)$")
_THREAD_BLOCK = re.compile(r"\{([^}]*)\}")


def _unquote(letter: str) -> str:
    if len(letter) >= 2 and letter[0] == letter[-1] and letter[0] in "'\"":
        return letter[1:-1]
    return letter


def parse_pcg(text: str) -> Grammar:
    """Parse the line-oriented grammar format.

    ::

        start: S
        independence: A B, C D      # or "all" / "none"
        threads: {S A B} {A'} {B'}  # optional; checked, or defines
                                    # independence when that line is absent
        S -a-> A B
        A -b->
    """
    start = None
    indep_line = None
    threads_line = None
    prods: list[Production] = []
    extra: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _PRODUCTION.match(line)
        if m:
            rhs = tuple(t for t in m.group(3).split() if t not in ("eps", "ε"))
            prods.append(Production(m.group(1), _unquote(m.group(2).strip()), rhs))
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise GrammarError(f"line {lineno}: cannot parse {raw!r}")
        if key == "start":
            start = value.strip()
        elif key == "independence":
            indep_line = (lineno, value.strip())
        elif key == "threads":
            threads_line = (lineno, value.strip())
        elif key == "nonterminals":
            extra.update(value.split())
        elif key == "letter-independence":
            pass  # read by trace_closure
        else:
            raise GrammarError(f"line {lineno}: unknown directive {key!r}")
    if not prods:
        raise GrammarError("grammar has no productions")
    if start is None:
        start = prods[0].lhs
    names = {start} | extra
    for p in prods:
        names.add(p.lhs)
        names.update(p.rhs)
    pairs: set = set()
    if indep_line is not None:
        lineno, value = indep_line
        if value == "all":
            pairs = {frozenset(p) for p in combinations(sorted(names), 2)}
        elif value not in ("none", ""):
            for chunk in value.split(","):
                toks = chunk.split()
                if len(toks) != 2:
                    raise GrammarError(f"line {lineno}: independence pair {chunk.strip()!r}")
                pairs.add(frozenset(toks) if toks[0] != toks[1] else frozenset(toks[:1]))
    declared = None
    if threads_line is not None:
        lineno, value = threads_line
        declared = {frozenset(b.split()) for b in _THREAD_BLOCK.findall(value)}
        if indep_line is None:
            # threads alone: symbols in different blocks are independent
            for b1, b2 in combinations(sorted(declared, key=min), 2):
                pairs |= {frozenset((x, y)) for x in b1 for y in b2}
            names |= set().union(*declared)
    grammar = Grammar(start, tuple(prods), frozenset(pairs), tuple(sorted(names)))
    if declared is not None:
        try:
            computed = set(threads(grammar))
        except NotTransitiveError as exc:
            raise GrammarError(f"line {lineno}: threads declared but {exc}") from exc
        if declared != computed:
            shown = " ".join("{" + " ".join(sorted(b)) + "}" for b in threads(grammar))
            raise GrammarError(f"line {lineno}: declared threads differ from computed {shown}")
    return grammar


def format_pcg(grammar: Grammar) -> str:
    lines = [f"start: {grammar.start}"]
    names = grammar.nonterminals
    mentioned = {grammar.start}
    for p in grammar.productions:
        mentioned.add(p.lhs)
        mentioned.update(p.rhs)
    if set(names) - mentioned:
        lines.append("nonterminals: " + " ".join(names))
    all_pairs = {frozenset(p) for p in combinations(names, 2)}
    if not grammar.independence:
        lines.append("independence: none")
    elif len(names) > 2 and grammar.independence == all_pairs:
        lines.append("independence: all")
    else:
        pairs = sorted(tuple(sorted(p)) if len(p) == 2 else (min(p),) * 2 for p in grammar.independence)
        lines.append("independence: " + ", ".join(f"{x} {y}" for x, y in pairs))
    for p in grammar.productions:
        letter = p.letter
        if not re.fullmatch(r"[^\s\-#'\"]+", letter):
            letter = f"'{letter}'"
        lines.append(f"{p.lhs} -{letter}-> {' '.join(p.rhs)}".rstrip())
    return "\n".join(lines) + "\n"


def load_pcg(path) -> Grammar:
    with open(path, encoding="utf-8") as fh:
        return parse_pcg(fh.read())
