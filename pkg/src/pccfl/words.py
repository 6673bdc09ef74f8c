"""Words as tuples of letter tokens, plus interleaving helpers."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

Word = tuple  # tuple[str, ...]


def as_word(word, alphabet: Iterable[str] | None = None) -> tuple[str, ...]:
    """Coerce ``word`` into a tuple of letter tokens.

    Strings containing whitespace are split on it.  A contiguous string is
    split into characters, unless ``alphabet`` holds a multi-character token:
    then it is cut greedily into the longest matching letters, and kept as a
    single token if that fails.
    """
    if isinstance(word, str):
        text = word.strip()
        if not text:
            return ()
        if any(ch.isspace() for ch in text):
            return tuple(text.split())
        if alphabet is not None and any(len(a) != 1 for a in alphabet):
            return _greedy_split(text, alphabet) or (text,)
        return tuple(text)
    return tuple(word)


def _greedy_split(text: str, alphabet: Iterable[str]) -> tuple[str, ...] | None:
    letters = sorted(set(alphabet), key=len, reverse=True)
    out, i = [], 0
    while i < len(text):
        hit = next((a for a in letters if a and text.startswith(a, i)), None)
        if hit is None:
            return None
        out.append(hit)
        i += len(hit)
    return tuple(out)


def format_word(word: Sequence[str]) -> str:
    if all(len(a) == 1 for a in word):
        return "".join(word)
    return " ".join(word)


def sort_words(words: Iterable[Sequence[str]]) -> list[tuple[str, ...]]:
    """Length first, then lexicographic on the token sequence."""
    return sorted({tuple(w) for w in words}, key=lambda w: (len(w), w))


def interleaving_member(w: Sequence[str], u: Sequence[str], v: Sequence[str]) -> bool:
    """Is ``w`` an interleaving of ``u`` and ``v``?  O(|u|*|v|) table."""
    w, u, v = tuple(w), tuple(u), tuple(v)
    if len(w) != len(u) + len(v):
        return False
    # row[j]: w[:i+j] is an interleaving of u[:i] and v[:j]
    row = [True] * (len(v) + 1)
    for j in range(1, len(v) + 1):
        row[j] = row[j - 1] and v[j - 1] == w[j - 1]
    for i in range(1, len(u) + 1):
        row[0] = row[0] and u[i - 1] == w[i - 1]
        for j in range(1, len(v) + 1):
            c = w[i + j - 1]
            row[j] = (row[j] and u[i - 1] == c) or (row[j - 1] and v[j - 1] == c)
    return row[len(v)]


@lru_cache(maxsize=4096)
def _interleavings(u: tuple, v: tuple) -> frozenset:
    if not u:
        return frozenset([v])
    if not v:
        return frozenset([u])
    return frozenset(
        {(u[0],) + r for r in _interleavings(u[1:], v)}
        | {(v[0],) + r for r in _interleavings(u, v[1:])}
    )


def interleavings(u: Sequence[str], v: Sequence[str]) -> frozenset:
    """All interleavings of two words."""
    return _interleavings(tuple(u), tuple(v))


def shuffle_sets(left: Iterable, right: Iterable, max_len: int | None = None) -> set:
    out = set()
    right = list(right)
    for u in left:
        for v in right:
            if max_len is None or len(u) + len(v) <= max_len:
                out |= interleavings(u, v)
    return out


def concat_sets(left: Iterable, right: Iterable, max_len: int | None = None) -> set:
    right = list(right)
    return {
        tuple(u) + tuple(v)
        for u in left
        for v in right
        if max_len is None or len(u) + len(v) <= max_len
    }
