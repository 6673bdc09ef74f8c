"""Executable pumping conditions.

Four schemes are supported, each pumping ``x s^m y t^m z`` (or ``x s^m y``)
for ``m = 0..M``:

``shuffle``
    ``w`` is ``x`` followed by an interleaving of ``z`` with ``s`` followed
    by an interleaving of ``y`` and ``t``; ``1 <= |s|`` and ``|syt| <= N``.
``shuffle_alt``
    As above but with the middle subword ``y'`` pumped whole:
    ``x s^m y' t^m z``.
``concat``
    ``w = x y z`` and ``1 <= |st| <= N``.  ``s`` and ``t`` range over all
    words on the oracle's alphabet.
``ccfl``
    ``w`` is ``x`` followed by an interleaving of ``s`` and ``y``;
    ``1 <= |s| <= N``; pumps ``x s^m y``.

A search that finds nothing only shows the condition fails for ``m <= M``;
it is evidence, not a proof that the language lies outside a class.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Iterator

from .engine import member
from .errors import PccflError
from .grammar import Grammar
from .mpda import Mpda, accepts
from .pa import PaGrammar, pa_member
from .trace_closure import closure_member, letter_independence, trace_normal_form
from .words import as_word, format_word, interleaving_member

MODES = ("shuffle", "shuffle_alt", "concat", "ccfl")
DEFAULT_PUMP_BUDGET = 2_000_000


class LanguageOracle:
    """Membership for a fixed language, memoised.

    Words with letters outside ``alphabet`` (and the empty word) are
    rejected without consulting the backend.
    """

    def __init__(self, contains: Callable, alphabet: Iterable[str], kind: str = "predicate", name: str = ""):
        self._contains = contains
        self.alphabet = tuple(sorted(set(alphabet)))
        self.kind = kind
        self.name = name
        self._letters = frozenset(self.alphabet)
        self._memo: dict = {}

    def __call__(self, word) -> bool:
        word = as_word(word, self.alphabet)
        hit = self._memo.get(word)
        if hit is None:
            hit = bool(word) and set(word) <= self._letters and bool(self._contains(word))
            self._memo[word] = hit
        return hit

    def __repr__(self):
        return f"LanguageOracle({self.kind}:{self.name})"


def grammar_oracle(grammar: Grammar, name: str = "") -> LanguageOracle:
    return LanguageOracle(lambda w: member(grammar, w), grammar.alphabet, "grammar", name)


def mpda_oracle(m: Mpda, name: str = "") -> LanguageOracle:
    return LanguageOracle(lambda w: accepts(m, w), m.alphabet, "mpda", name)


def pa_oracle(g: PaGrammar, name: str = "") -> LanguageOracle:
    return LanguageOracle(lambda w: pa_member(g, w), g.alphabet, "pa", name)


def closure_oracle(cfg: Grammar, independence, name: str = "") -> LanguageOracle:
    """Trace closure of a context-free language; one search per trace."""
    indep = letter_independence(independence)
    by_trace: dict = {}

    def contains(w):
        key = trace_normal_form(w, indep)
        if key not in by_trace:
            by_trace[key] = closure_member(cfg, indep, w, cap=len(w))
        return by_trace[key]

    return LanguageOracle(contains, cfg.alphabet, "trace-closure", name)


def predicate_oracle(predicate: Callable, alphabet: Iterable[str], name: str = "") -> LanguageOracle:
    return LanguageOracle(predicate, alphabet, "predicate", name)


@dataclass(frozen=True)
class PumpDecomposition:
    x: tuple
    y: tuple
    z: tuple
    s: tuple
    t: tuple
    mode: str = "shuffle"
    y_prime: tuple | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown pumping mode {self.mode!r}")
        for name in ("x", "y", "z", "s", "t"):
            object.__setattr__(self, name, as_word(getattr(self, name)))
        if self.y_prime is not None:
            object.__setattr__(self, "y_prime", as_word(self.y_prime))

    def pumped(self, m: int) -> tuple:
        if self.mode == "ccfl":
            return self.x + self.s * m + self.y
        middle = self.y_prime if self.mode == "shuffle_alt" else self.y
        return self.x + self.s * m + middle + self.t * m + self.z

    def as_dict(self) -> dict:
        d = {"mode": self.mode, "x": format_word(self.x), "y": format_word(self.y),
             "z": format_word(self.z), "s": format_word(self.s), "t": format_word(self.t)}
        if self.y_prime is not None:
            d["y_prime"] = format_word(self.y_prime)
        return d


@dataclass
class DecompositionCheck:
    structure: bool
    lengths: bool
    pumped: list = field(default_factory=list)  # (m, word, member)

    @property
    def ok(self) -> bool:
        return self.structure and self.lengths and all(hit for _, _, hit in self.pumped)

    def __bool__(self):
        return self.ok


@lru_cache(maxsize=65536)
def _in_nested_shuffle(r: tuple, s: tuple, y: tuple, t: tuple, z: tuple) -> bool:
    """``r`` in ``(s (y || t)) || z``: some ``y'`` in ``s(y||t)`` interleaves with ``z``."""
    ls, ly, lt, lz = len(s), len(y), len(t), len(z)
    if len(r) != ls + ly + lt + lz:
        return False
    seen = set()
    stack = [(0, 0, 0, 0)]
    while stack:
        state = stack.pop()
        if state in seen:
            continue
        seen.add(state)
        i, j, k, l = state
        pos = i + j + k + l
        if pos == len(r):
            return True
        c = r[pos]
        if l < lz and z[l] == c:
            stack.append((i, j, k, l + 1))
        if i < ls:
            if s[i] == c:
                stack.append((i + 1, j, k, l))
        else:
            if j < ly and y[j] == c:
                stack.append((i, j + 1, k, l))
            if k < lt and t[k] == c:
                stack.append((i, j, k + 1, l))
    return False


def _structure_ok(w: tuple, d: PumpDecomposition) -> bool:
    if d.mode == "concat":
        return d.x + d.y + d.z == w
    if w[:len(d.x)] != d.x:
        return False
    rest = w[len(d.x):]
    if d.mode == "ccfl":
        return interleaving_member(rest, d.s, d.y)
    if d.mode == "shuffle":
        return _in_nested_shuffle(rest, d.s, d.y, d.t, d.z)
    yp = d.y_prime
    if yp is None or yp[:len(d.s)] != d.s:
        return False
    return interleaving_member(rest, yp, d.z) and interleaving_member(yp[len(d.s):], d.y, d.t)


def _lengths_ok(d: PumpDecomposition, N: int) -> bool:
    if d.mode == "concat":
        return 1 <= len(d.s) + len(d.t) <= N
    if d.mode == "ccfl":
        return 1 <= len(d.s) <= N
    return len(d.s) >= 1 and len(d.s) + len(d.y) + len(d.t) <= N


def check_decomposition(oracle, w, d: PumpDecomposition, N: int, M: int = 2) -> DecompositionCheck:
    """Check the structural and length conditions, then ``m = 0..M``.

    Pumping stops at the first rejected ``m``.
    """
    w = as_word(w, getattr(oracle, "alphabet", None))
    result = DecompositionCheck(_structure_ok(w, d), _lengths_ok(d, N))
    if not (result.structure and result.lengths):
        return result
    for m in range(M + 1):
        word = d.pumped(m)
        hit = oracle(word)
        result.pumped.append((m, word, hit))
        if not hit:
            break
    return result


def _subsets(n: int, sizes: Iterable[int]) -> Iterator[tuple]:
    for k in sizes:
        yield from combinations(range(n), k)


def _pick(word: tuple, idx: Iterable[int]) -> tuple:
    return tuple(word[i] for i in idx)


def _drop(word: tuple, idx) -> tuple:
    idx = set(idx)
    return tuple(a for i, a in enumerate(word) if i not in idx)


def _candidates(w: tuple, N: int, mode: str, alphabet: tuple) -> Iterator[PumpDecomposition]:
    n = len(w)
    if mode == "concat":
        pairs = []
        for total in range(1, N + 1):
            for ls in range(total + 1):
                for s in product(alphabet, repeat=ls):
                    for t in product(alphabet, repeat=total - ls):
                        pairs.append((s, t))
        for i in range(n + 1):
            for j in range(i, n + 1):
                x, y, z = w[:i], w[i:j], w[j:]
                for s, t in pairs:
                    yield PumpDecomposition(x, y, z, s, t, mode)
        return
    for i in range(n):
        x, rest = w[:i], w[i:]
        if mode == "ccfl":
            for P in _subsets(len(rest), range(1, min(N, len(rest)) + 1)):
                yield PumpDecomposition(x, _drop(rest, P), (), _pick(rest, P), (), mode)
            continue
        for P in _subsets(len(rest), range(1, min(N, len(rest)) + 1)):
            yp, z = _pick(rest, P), _drop(rest, P)
            for j in range(1, len(yp) + 1):
                s, u = yp[:j], yp[j:]
                for T in _subsets(len(u), range(len(u) + 1)):
                    t, y = _pick(u, T), _drop(u, T)
                    if mode == "shuffle":
                        yield PumpDecomposition(x, y, z, s, t, mode)
                    else:
                        yield PumpDecomposition(x, y, z, s, t, mode, y_prime=yp)


@dataclass
class PumpReport:
    word: tuple
    N: int
    M: int
    mode: str
    outcome: str  # "found", "none" or "budget-exhausted"
    decomposition: PumpDecomposition | None = None
    pumped: list = field(default_factory=list)
    candidates: int = 0

    @property
    def found(self) -> bool:
        return self.outcome == "found"

    @property
    def note(self) -> str:
        if self.outcome == "none":
            return (f"no decomposition survives m = 0..{self.M}; this is a finite necessary "
                    f"check, not a proof of non-membership")
        if self.outcome == "budget-exhausted":
            return f"search stopped after {self.candidates} candidates"
        return f"decomposition verified for m = 0..{self.M}"

    def as_dict(self) -> dict:
        return {
            "word": format_word(self.word),
            "N": self.N,
            "M": self.M,
            "mode": self.mode,
            "outcome": self.outcome,
            "decomposition": self.decomposition.as_dict() if self.decomposition else None,
            "pumped": [{"m": m, "word": format_word(w), "member": hit} for m, w, hit in self.pumped],
            "candidates": self.candidates,
            "note": self.note,
        }


def find_decomposition(oracle, w, N: int, mode: str = "shuffle", M: int = 2,
                       budget: int = DEFAULT_PUMP_BUDGET) -> PumpReport:
    """Exhaustive search for the first decomposition passing ``m = 0..M``.

    Candidates are generated in a fixed order (prefix length, then subword
    positions, then splits) and deduplicated on their pumped words.
    """
    if mode not in MODES:
        raise ValueError(f"unknown pumping mode {mode!r}")
    w = as_word(w, oracle.alphabet)
    alphabet = tuple(oracle.alphabet)
    seen: set = set()
    checked = 0
    for d in _candidates(w, N, mode, alphabet):
        key = tuple(d.pumped(m) for m in range(M + 1))
        if key in seen:
            continue
        seen.add(key)
        checked += 1
        if checked > budget:
            return PumpReport(w, N, M, mode, "budget-exhausted", candidates=checked - 1)
        if all(oracle(word) for word in _pump_order(key)):
            result = check_decomposition(oracle, w, d, N, M)
            if not result.ok:
                raise PccflError(f"internal: candidate {d} failed its own check")
            return PumpReport(w, N, M, mode, "found", d, result.pumped, checked)
    return PumpReport(w, N, M, mode, "none", candidates=checked)


def _pump_order(words: tuple) -> tuple:
    # m = 0 is shared by many candidates (memo hits); then the largest m,
    # which is the most likely to fail
    return (words[0],) + tuple(reversed(words[1:]))
