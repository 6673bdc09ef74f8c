"""Built-in languages: grammars, automata, PA grammars and membership predicates.

Each entry records which language classes it is known to belong to, so that
tests and the command line can pick the pumping scheme that applies.  Entries
backed by a presentation also carry an independent predicate where one is
known, and ``check_len`` is the length up to which the two were compared.

The Venn-diagram witnesses separating the classes are not all reproduced:
only the two whose definitions are available (``l3-*`` and ``l6-cfg+indep``)
are included.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .closures import concat, shuffle
from .grammar import format_pcg, parse_pcg
from .mpda import format_mpda, from_transitive_grammar
from .pa import format_pag, parse_pag
from .pumping import LanguageOracle, closure_oracle, grammar_oracle, mpda_oracle, pa_oracle, predicate_oracle
from .trace_closure import LetterIndependence, letter_independence
from .words import interleaving_member

KINDS = ("grammar", "mpda", "pa-grammar", "cfg+letter-independence", "predicate")


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    kind: str
    payload: object
    note: str
    classes: tuple[str, ...] = ()
    predicate: Callable | None = None
    alphabet: tuple[str, ...] = ()
    letter_independence: LetterIndependence | None = None
    check_len: int = 0
    parts: dict = field(default_factory=dict)

    def oracle(self) -> LanguageOracle:
        if self.kind == "grammar":
            return grammar_oracle(self.payload, self.name)
        if self.kind == "mpda":
            return mpda_oracle(self.payload, self.name)
        if self.kind == "pa-grammar":
            return pa_oracle(self.payload, self.name)
        if self.kind == "cfg+letter-independence":
            return closure_oracle(self.payload, self.letter_independence, self.name)
        return predicate_oracle(self.predicate, self.alphabet, self.name)

    def export(self) -> tuple[str, str]:
        """``(file extension, text)`` for entries that have a file form."""
        if self.kind == "grammar":
            return ".pcg", format_pcg(self.payload)
        if self.kind == "cfg+letter-independence":
            return ".pcg", format_pcg(self.payload) + f"letter-independence: {self.letter_independence}\n"
        if self.kind == "mpda":
            return ".mpda", format_mpda(self.payload)
        if self.kind == "pa-grammar":
            return ".pag", format_pag(self.payload)
        raise ValueError(f"{self.name} is a predicate and has no file form")


# --- predicates ----------------------------------------------------------------


def _runs(word, letters) -> list[int] | None:
    """Lengths of consecutive blocks of ``letters`` if ``word`` has that shape."""
    counts = []
    i = 0
    for a in letters:
        j = i
        while j < len(word) and word[j] == a:
            j += 1
        counts.append(j - i)
        i = j
    return counts if i == len(word) else None


def anbn(word) -> bool:
    r = _runs(word, "ab")
    return r is not None and r[0] == r[1] >= 1


def anbncn(word) -> bool:
    r = _runs(word, "abc")
    return r is not None and r[0] == r[1] == r[2] >= 1


def equal_abc(word) -> bool:
    c = Counter(word)
    return set(c) <= {"a", "b", "c"} and c["a"] == c["b"] == c["c"] >= 1


def ex1_predicate(word) -> bool:
    """``a^n abar`` followed by an interleaving of ``b^n bbar`` with ``cbar c^n``."""
    word = tuple(word)
    n = 0
    while n < len(word) and word[n] == "a":
        n += 1
    if n == 0 or word[n:n + 1] != ("abar",):
        return False
    return interleaving_member(word[n + 1:], ("b",) * n + ("bbar",), ("cbar",) + ("c",) * n)


def ex2_predicate(word) -> bool:
    """``w s v`` with matching counts and the suffix/prefix dominance condition."""
    word = tuple(word)
    if word.count("s") != 1:
        return False
    k = word.index("s")
    w, v = word[:k], word[k + 1:]
    if set(w) - {"a", "b"} or set(v) - {"a", "b", "c"}:
        return False
    if w.count("a") != v.count("a") or w.count("b") != v.count("b"):
        return False
    if v.count("c") != v.count("a") + v.count("b"):
        return False
    for i in range(len(v) + 1):
        prefix = v[:i]
        cs = prefix.count("c")
        if cs > len(w):
            continue
        suffix = w[len(w) - cs:]
        if suffix.count("a") < prefix.count("a") or suffix.count("b") < prefix.count("b"):
            return False
    return True


def l3_predicate(word) -> bool:
    """``a^n s`` followed by an interleaving of ``b^n`` and ``c^n``."""
    word = tuple(word)
    if word.count("s") != 1:
        return False
    k = word.index("s")
    head, tail = word[:k], word[k + 1:]
    n = len(head)
    return (set(head) <= {"a"} and set(tail) <= {"b", "c"}
            and tail.count("b") == n and tail.count("c") == n)


def l6_predicate(word) -> bool:
    """Interleavings of ``a^n abar dbar d^n`` with ``b^n c^n`` where every b precedes every d and dbar."""
    word = tuple(word)
    c = Counter(word)
    n = c["a"]
    if set(c) - {"a", "abar", "b", "c", "d", "dbar"}:
        return False
    if not (c["abar"] == c["dbar"] == 1 and c["b"] == c["c"] == c["d"] == n):
        return False
    left = tuple(x for x in word if x in ("a", "abar", "d", "dbar"))
    right = tuple(x for x in word if x in ("b", "c"))
    if left != ("a",) * n + ("abar", "dbar") + ("d",) * n or right != ("b",) * n + ("c",) * n:
        return False
    last_b = max((i for i, x in enumerate(word) if x == "b"), default=-1)
    first_d = min(i for i, x in enumerate(word) if x in ("d", "dbar"))
    return last_b < first_d


def concat_witness_predicate(word) -> bool:
    word = tuple(word)
    return len(word) >= 2 and word[-1] == "d" and equal_abc(word[:-1])


def invhom_predicate(word) -> bool:
    """Interleavings of ``A^(n+1) S B^n T`` with ``S B^m T C^m`` for n, m >= 1."""
    word = tuple(word)
    c = Counter(word)
    if set(c) - {"A", "S", "B", "T", "C"} or c["S"] != 2 or c["T"] != 2:
        return False
    n, m = c["A"] - 1, c["C"]
    if n < 1 or m < 1 or c["B"] != n + m:
        return False
    return interleaving_member(word, ("A",) * (n + 1) + ("S",) + ("B",) * n + ("T",),
                               ("S",) + ("B",) * m + ("T",) + ("C",) * m)


# --- entries -------------------------------------------------------------------

EX1 = parse_pcg("""
start: P
independence: B C, B Cbar, Bbar C, Bbar Cbar
P -a-> W B C Bbar
W -a-> W B C
W -abar-> Cbar
Bbar -bbar->
Cbar -cbar->
B -b->
C -c->
""")

EX2 = parse_pcg("""
start: S
threads: {S A B} {A'} {B'}
S -s->
S -a-> S A
S -b-> S B
A -c-> A'
B -c-> B'
A' -a->
B' -b->
""")

L3_GRAMMAR = parse_pcg("""
start: S
threads: {S P} {B} {C}
S -a-> S P
S -s->
P -b-> C
P -c-> B
C -c->
B -b->
""")

L3_CFG = parse_pcg("""
start: S
S -a-> S K
S -s->
K -b-> C
C -c->
""")

L6_CFG = parse_pcg("""
start: S
S -a-> T
S -abar-> Dbar
T -b-> S K
K -c-> D
D -d->
Dbar -dbar->
""")

ANBN = parse_pcg("""
start: S
S -a-> B
S -a-> S B
B -b->
""")

EQUAL_ABC = parse_pcg("""
start: S
independence: all
S -a-> B C
S -b-> A C
S -c-> A B
S -a-> S B C
S -b-> S A C
S -c-> S A B
A -a->
B -b->
C -c->
""")

SINGLE_D = parse_pcg("""
start: D
D -d->
""")

INVHOM_L1 = parse_pcg("""
start: R
R -A-> Q U
Q -A-> Q Y
Q -A-> Z Y
Z -S->
Y -B->
U -T->
""")

INVHOM_L2 = parse_pcg("""
start: R
R -S-> M
M -B-> M K
M -B-> V K
V -T->
K -C->
""")

INVHOM_H = {"a": ("A",), "s": ("S", "S"), "b": ("B", "B"), "t": ("T", "T"), "c": ("C",)}

PA_EXAMPLE = parse_pag("""
start: S
S -a-> (A ; B) || C
A -b->
B -c->
C -d->
""")

PA_NESTED = parse_pag("""
start: S
S -a-> (S ; B) || C
S -s->
B -b->
C -c->
""")

L6_INDEPENDENCE = letter_independence(
    [(x, y) for x in ("a", "abar") for y in ("b", "c")] + [(x, "c") for x in ("dbar", "d")]
)

_ENTRIES = [
    GalleryEntry("ex1", "grammar", EX1,
                 "non-transitive dependence: a^n abar (b^n bbar || cbar c^n), n >= 1",
                 ("PCCFL",), ex1_predicate, EX1.alphabet, check_len=9),
    GalleryEntry("ex2", "grammar", EX2,
                 "transitive dependence, threads {S A B} {A'} {B'}; words w s v",
                 ("PCCFL", "tr-pc-CFL"), ex2_predicate, EX2.alphabet, check_len=10),
    GalleryEntry("ex2-mpda", "mpda", from_transitive_grammar(EX2),
                 "three-stack automaton obtained from ex2 by thread projection",
                 ("PCCFL", "tr-pc-CFL"), ex2_predicate, EX2.alphabet, check_len=8),
    GalleryEntry("l3-grammar", "grammar", L3_GRAMMAR,
                 "a^n s (b^n || c^n), n >= 0; threads {S P} {B} {C}",
                 ("PCCFL", "tr-pc-CFL", "tr-CFL"), l3_predicate, L3_GRAMMAR.alphabet, check_len=9),
    GalleryEntry("l3-cfg+indep", "cfg+letter-independence", L3_CFG,
                 "trace closure of a^n s (bc)^n with b, c independent",
                 ("PCCFL", "tr-pc-CFL", "tr-CFL"), l3_predicate, L3_CFG.alphabet,
                 letter_independence("b c"), check_len=9),
    GalleryEntry("l6-cfg+indep", "cfg+letter-independence", L6_CFG,
                 "trace closure of (ab)^n abar dbar (cd)^n; every b precedes every d and dbar",
                 ("tr-CFL",), l6_predicate, L6_CFG.alphabet, L6_INDEPENDENCE, check_len=12),
    GalleryEntry("anbn", "grammar", ANBN, "a^n b^n, n >= 1 (context-free)",
                 ("CFL", "PCCFL", "tr-pc-CFL", "shuffle-CFL", "tr-CFL"), anbn, ("a", "b"), check_len=12),
    GalleryEntry("anbncn", "predicate", None, "a^n b^n c^n, n >= 1; in none of the classes",
                 (), anbncn, ("a", "b", "c")),
    GalleryEntry("equal-abc", "grammar", EQUAL_ABC,
                 "#a = #b = #c >= 1; all non-terminals commute",
                 ("CCFL", "PCCFL", "tr-pc-CFL", "shuffle-CFL"), equal_abc, ("a", "b", "c"), check_len=9),
    GalleryEntry("concat-witness", "grammar", concat(EQUAL_ABC, SINGLE_D),
                 "L1 L2 with L1 = equal-abc and L2 = {d}; commutative parts cannot express it",
                 ("PCCFL",), concat_witness_predicate, ("a", "b", "c", "d"), check_len=10,
                 parts={"L1": EQUAL_ABC, "L2": SINGLE_D}),
    GalleryEntry("invhom-witness", "grammar", shuffle(INVHOM_L1, INVHOM_L2),
                 "L1 || L2 with L1 = A^(n+1) S B^n T, L2 = S B^n T C^n; h maps a s b t c to A SS BB TT C",
                 ("PCCFL", "tr-pc-CFL", "shuffle-CFL"), invhom_predicate, ("A", "B", "C", "S", "T"),
                 check_len=12, parts={"L1": INVHOM_L1, "L2": INVHOM_L2, "h": INVHOM_H}),
    GalleryEntry("pa-example", "pa-grammar", PA_EXAMPLE, "S -a-> (A;B) || C: {abcd, abdc, adbc}",
                 ("shuffle-CFL",), lambda w: "".join(w) in {"abcd", "abdc", "adbc"},
                 ("a", "b", "c", "d"), check_len=6),
    GalleryEntry("pa-nested", "pa-grammar", PA_NESTED, "recursion under parallel composition",
                 ("shuffle-CFL",), None, PA_NESTED.alphabet),
]

_BY_NAME = {e.name: e for e in _ENTRIES}


def gallery_list() -> list[str]:
    return [e.name for e in _ENTRIES]


def gallery_get(name: str) -> GalleryEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"no gallery entry {name!r}; available: {', '.join(gallery_list())}") from None


def entries(*classes: str) -> list[GalleryEntry]:
    """Entries belonging to at least one of ``classes`` (all entries if none given)."""
    return [e for e in _ENTRIES if not classes or set(classes) & set(e.classes)]
