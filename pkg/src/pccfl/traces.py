"""Lexicographic normal forms of Mazurkiewicz traces.

Used both for configurations (traces over non-terminals) and for words
(traces over letters).  ``independent(x, y)`` must be symmetric and false on
equal arguments.
"""
from __future__ import annotations

from collections import deque
from typing import Callable, Hashable, Sequence

from .errors import BudgetExhausted


def minimal_positions(seq: Sequence, independent: Callable) -> list[int]:
    """Positions whose symbol commutes with every earlier symbol."""
    out = []
    for i, x in enumerate(seq):
        if all(independent(y, x) for y in seq[:i]):
            out.append(i)
    return out


def lex_normal_form(seq: Sequence, independent: Callable, key: Callable = None) -> tuple:
    """Least representative of the trace of ``seq``.

    Greedy: repeatedly move the least minimal symbol to the output.  For
    traces this yields the lexicographic minimum of the class.
    """
    rest = list(seq)
    out = []
    sort_key = key or (lambda x: x)
    while rest:
        best = min(minimal_positions(rest, independent), key=lambda i: sort_key(rest[i]))
        out.append(rest.pop(best))
    return tuple(out)


def swap_class(seq: Sequence, independent: Callable, cap: int | None = None) -> set:
    """Every sequence reachable by swapping adjacent independent symbols."""
    start = tuple(seq)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for i in range(len(cur) - 1):
            if independent(cur[i], cur[i + 1]):
                nxt = cur[:i] + (cur[i + 1], cur[i]) + cur[i + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    if cap is not None and len(seen) > cap:
                        raise BudgetExhausted(cap, "trace class")
                    queue.append(nxt)
    return seen


def pair_set(pairs) -> frozenset:
    """Normalise an iterable of pairs into a frozenset of unordered pairs."""
    out = set()
    for p in pairs:
        p = tuple(p)
        if len(p) != 2:
            raise ValueError(f"not a pair: {p!r}")
        out.add(frozenset(p))
    return frozenset(out)


def relation_lookup(pairs: frozenset) -> dict[Hashable, frozenset]:
    table: dict = {}
    for p in pairs:
        if len(p) == 2:
            x, y = tuple(p)
            table.setdefault(x, set()).add(y)
            table.setdefault(y, set()).add(x)
    return {k: frozenset(v) for k, v in table.items()}
