"""Colored derivation trees and membership certificates.

Every non-terminal occurrence in a derivation carries a color.  Swaps keep
colors; a production step retires the color at the head and mints fresh
colors for the pushed symbols.  The retired color is the parent of the
fresh ones, which yields a tree with one node per production step.  A
certificate pairs such a tree with the order in which its nodes fired.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .engine import Derivation, SwapStep, replay
from .errors import DerivationError, TreeError
from .grammar import Grammar, Production
from .traces import lex_normal_form
from .words import as_word, sort_words


@dataclass(frozen=True)
class TreeNode:
    id: int
    label: str
    production: Production
    children: tuple[int, ...] = ()


@dataclass(frozen=True)
class DerivationTree:
    nodes: tuple[TreeNode, ...]
    root: int

    def __post_init__(self):
        nodes = tuple(sorted(self.nodes, key=lambda n: n.id))
        object.__setattr__(self, "nodes", nodes)
        ids = [n.id for n in nodes]
        if len(set(ids)) != len(ids):
            raise TreeError("duplicate node ids")
        table = {n.id: n for n in nodes}
        if self.root not in table:
            raise TreeError(f"root {self.root} is not a node")
        parent: dict[int, int] = {}
        for n in nodes:
            if n.production.lhs != n.label:
                raise TreeError(f"node {n.id}: label {n.label} but production {n.production}")
            if len(n.children) != len(n.production.rhs):
                raise TreeError(f"node {n.id}: children do not match {n.production}")
            for c, sym in zip(n.children, n.production.rhs):
                if c not in table:
                    raise TreeError(f"node {n.id}: unknown child {c}")
                if table[c].label != sym:
                    raise TreeError(f"node {n.id}: child {c} is {table[c].label}, expected {sym}")
                if c in parent or c == self.root:
                    raise TreeError(f"node {c} has more than one parent")
                parent[c] = n.id
        if len(parent) != len(nodes) - 1:
            raise TreeError("tree is not connected")

    @cached_property
    def table(self) -> dict[int, TreeNode]:
        return {n.id: n for n in self.nodes}

    def __getitem__(self, node_id: int) -> TreeNode:
        try:
            return self.table[node_id]
        except KeyError:
            raise TreeError(f"unknown node {node_id}") from None

    def __len__(self):
        return len(self.nodes)

    def subtree(self, node_id: int) -> list[int]:
        """Node ids below and including ``node_id``, in preorder."""
        out = []
        stack = [node_id]
        while stack:
            n = self[stack.pop()]
            out.append(n.id)
            stack.extend(reversed(n.children))
        return out


@dataclass(frozen=True)
class Certificate:
    """``order[i]`` is the node that fired the ``i``-th letter."""

    tree: DerivationTree
    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))

    def position(self, node_id: int) -> int:
        return self.order.index(node_id)


def tree_from_derivation(grammar: Grammar, derivation: Derivation) -> Certificate:
    """Apply the coloring discipline; returns the induced tree and firing order."""
    replay(grammar, derivation)
    if len(derivation.start) != 1:
        raise DerivationError(0, "derivation must start from a single non-terminal")
    colors = [1]
    next_color = 2
    nodes: dict[int, dict] = {1: {"label": derivation.start[0]}}
    order = []
    for step in derivation.steps:
        if isinstance(step, SwapStep):
            i = step.index
            colors[i], colors[i + 1] = colors[i + 1], colors[i]
            continue
        p = step.production
        head = colors.pop(0)
        fresh = list(range(next_color, next_color + len(p.rhs)))
        next_color += len(p.rhs)
        for c, sym in zip(fresh, p.rhs):
            nodes[c] = {"label": sym}
        nodes[head]["production"] = p
        nodes[head]["children"] = tuple(fresh)
        order.append(head)
        colors = fresh + colors
    tree = DerivationTree(
        tuple(TreeNode(c, d["label"], d["production"], d["children"]) for c, d in nodes.items()),
        1,
    )
    return Certificate(tree, tuple(order))


def _fire_check(grammar: Grammar, tree: DerivationTree, live: list, node_id: int):
    """New live sequence after firing ``node_id``, or None when it is blocked."""
    try:
        idx = live.index(node_id)
    except ValueError:
        return None
    label = tree[node_id].label
    if any(not grammar.independent(tree[c].label, label) for c in live[:idx]):
        return None
    return list(tree[node_id].children) + live[:idx] + live[idx + 1:]


def verify_certificate(grammar: Grammar, word, cert: Certificate) -> bool:
    """Polynomial check that ``cert`` is induced by a derivation of ``word``."""
    word = as_word(word, grammar.alphabet)
    tree = cert.tree
    if len(word) != len(tree):
        raise TreeError(f"word has {len(word)} letters but the tree has {len(tree)} nodes")
    if len(cert.order) != len(tree) or set(cert.order) != {n.id for n in tree.nodes}:
        return False
    if tree[tree.root].label != grammar.start:
        return False
    if any(n.production not in grammar.productions for n in tree.nodes):
        return False
    live = [tree.root]
    for letter, node_id in zip(word, cert.order):
        if tree[node_id].production.letter != letter:
            return False
        live = _fire_check(grammar, tree, live, node_id)
        if live is None:
            return False
    return not live


class TreeWords(NamedTuple):
    words: tuple
    complete: bool


def words_of_tree(grammar: Grammar, tree: DerivationTree, limit: int = 10_000) -> TreeWords:
    """Words ``w`` for which some firing order certifies ``(tree, w)``.

    Memoised on the canonical trace of live colors.  When ``limit`` cuts a
    set short the result is partial and ``complete`` is False.
    """
    indep = lambda c1, c2: grammar.independent(tree[c1].label, tree[c2].label)
    memo: dict = {}
    truncated = False

    def gen(live: tuple) -> frozenset:
        nonlocal truncated
        if not live:
            return frozenset([()])
        key = lex_normal_form(live, indep)
        if key in memo:
            return memo[key]
        out = set()
        for c in set(live):
            nxt = _fire_check(grammar, tree, list(live), c)
            if nxt is None:
                continue
            letter = tree[c].production.letter
            out.update((letter,) + w for w in gen(tuple(nxt)))
        if len(out) > limit:
            truncated = True
            out = set(sort_words(out)[:limit])
        memo[key] = frozenset(out)
        return memo[key]

    words = sort_words(gen((tree.root,)))
    return TreeWords(tuple(words), not truncated)


def induced_subword(word, cert: Certificate, node: int) -> tuple[str, ...]:
    """Letters fired by the subtree of ``node``, in word order."""
    word = as_word(word)
    below = set(cert.tree.subtree(node))
    return tuple(a for a, c in zip(word, cert.order) if c in below)


def rearrange_to_infix(grammar: Grammar, word, cert: Certificate, node: int):
    """Split ``word`` into ``(u1, v, u2)`` with ``v`` the subword of ``node``.

    ``u1`` precedes the first letter of ``v`` and ``u2`` is what remains
    after it; ``u1 + v + u2`` is again in the language.
    """
    word = as_word(word, grammar.alphabet)
    below = set(cert.tree.subtree(node))
    positions = [i for i, c in enumerate(cert.order) if c in below]
    first = positions[0]
    inside = set(positions)
    u1 = word[:first]
    v = tuple(word[i] for i in positions)
    u2 = tuple(word[i] for i in range(first, len(word)) if i not in inside)
    return u1, v, u2


def substitute(tree: DerivationTree, node: int, replacement: DerivationTree) -> DerivationTree:
    """Replace the subtree at ``node`` by ``replacement``.

    Replacement nodes take over the removed ids in preorder, then fresh ids.
    """
    old = tree[node]
    new_root = replacement[replacement.root]
    if old.label != new_root.label:
        raise TreeError(f"node {node} is {old.label} but the replacement root is {new_root.label}")
    removed = tree.subtree(node)
    incoming = replacement.subtree(replacement.root)
    fresh = max(n.id for n in tree.nodes) + 1
    ids = {}
    for k, rid in enumerate(incoming):
        if k < len(removed):
            ids[rid] = removed[k]
        else:
            ids[rid] = fresh
            fresh += 1
    gone = set(removed)
    nodes = [n for n in tree.nodes if n.id not in gone]
    nodes += [
        TreeNode(ids[n.id], n.label, n.production, tuple(ids[c] for c in n.children))
        for n in replacement.nodes
    ]
    return DerivationTree(tuple(nodes), tree.root)


def certificate_to_json(grammar: Grammar, cert: Certificate) -> str:
    """Exchange format: productions are indices into ``grammar.productions``."""
    data = {
        "nodes": [
            {
                "id": n.id,
                "label": n.label,
                "production": grammar.production_index(n.production),
                "children": list(n.children),
            }
            for n in cert.tree.nodes
        ],
        "order": list(cert.order),
        "root": cert.tree.root,
    }
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def certificate_from_json(grammar: Grammar, text: str) -> Certificate:
    data = json.loads(text)
    try:
        nodes = []
        for d in data["nodes"]:
            index = d["production"]
            if not 0 <= index < len(grammar.productions):
                raise TreeError(f"node {d['id']}: production index {index} out of range")
            nodes.append(TreeNode(d["id"], d["label"], grammar.productions[index], tuple(d["children"])))
        return Certificate(DerivationTree(tuple(nodes), data["root"]), tuple(data["order"]))
    except (KeyError, TypeError) as exc:
        raise TreeError(f"malformed certificate: {exc}") from exc
