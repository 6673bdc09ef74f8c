"""The acceptance suite: ten end-to-end checks with independent oracles.

Each ``criterion_N`` returns a :class:`CriterionResult`; a criterion passes
only when its check holds *and* it finishes inside its time limit.  The
oracles here deliberately avoid the code under test: explicit-swap
derivations instead of canonical traces, formula expansions instead of
grammars, brute-force filters instead of enumeration.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable

from .closures import concat, hom_image, shuffle, substitute_letters, union
from .engine import derive_witness, enumerate_words, member
from .errors import TreeError
from .gallery import (EX1, EX2, L3_CFG, L3_GRAMMAR, L6_CFG, L6_INDEPENDENCE, PA_EXAMPLE,
                      entries, ex2_predicate, gallery_get)
from .generate import random_grammar, random_term, sample_words
from .grammar import Grammar, is_transitive
from .mpda import enumerate_mpda, from_transitive_grammar, to_grammar
from .errors import NotTransitiveError
from .pa import Par, Seq, normalize, pa_enumerate
from .pumping import find_decomposition
from .trace_closure import closure_member, trace_class
from .traces import swap_class
from .trees import Certificate, DerivationTree, TreeNode, tree_from_derivation, verify_certificate, words_of_tree
from .words import concat_sets, interleaving_member, interleavings, shuffle_sets, sort_words

DEFAULT_SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float
    limit: float

    @property
    def passed(self) -> bool:
        return self.ok and self.seconds < self.limit

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{verdict} [{self.number:2d}] {self.title}: {self.detail} "
                f"({self.seconds:.2f}s, limit {self.limit:g}s)")


def _timed(number: int, title: str, limit: float, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    ok, detail = body()
    return CriterionResult(number, title, ok, detail, time.perf_counter() - t0, limit)


def _all_words(alphabet, max_len):
    for k in range(1, max_len + 1):
        yield from product(alphabet, repeat=k)


def _multiset_orders(letters) -> set:
    return set(permutations(letters))


# --- oracles -------------------------------------------------------------------


def ex1_formula(max_len: int) -> set:
    """Expand ``a^n abar (b^n bbar || cbar c^n)`` by filtering permutations."""
    out = set()
    n = 1
    while 3 * n + 3 <= max_len:
        u, v = ("b",) * n + ("bbar",), ("cbar",) + ("c",) * n
        for tail in _multiset_orders(u + v):
            if interleaving_member(tail, u, v):
                out.add(("a",) * n + ("abar",) + tail)
        n += 1
    return out


def l3_formula(max_len: int) -> set:
    """``a^n s (b^n || c^n)`` for every n with ``3n + 1 <= max_len``."""
    out = set()
    n = 0
    while 3 * n + 1 <= max_len:
        for tail in _multiset_orders(("b",) * n + ("c",) * n):
            out.add(("a",) * n + ("s",) + tail)
        n += 1
    return out


def l6_formula(max_len: int) -> set:
    """Interleavings of ``a^n abar dbar d^n`` and ``b^n c^n`` with every b before every d, dbar."""
    out = set()
    n = 0
    while 4 * n + 2 <= max_len:
        u = ("a",) * n + ("abar", "dbar") + ("d",) * n
        v = ("b",) * n + ("c",) * n
        for w in interleavings(u, v):
            last_b = max((i for i, x in enumerate(w) if x == "b"), default=-1)
            if all(i > last_b for i, x in enumerate(w) if x in ("d", "dbar")):
                out.add(w)
        n += 1
    return out


def reference_language(grammar: Grammar, max_len: int) -> set:
    """Bounded language by explicit configurations, swap closure, then a head step.

    No canonical forms: each configuration is a plain word over
    non-terminals and every swap-reachable rearrangement is materialised.
    """
    found = set()
    frontier = {((), (grammar.start,))}
    while frontier:
        nxt = set()
        for prefix, config in frontier:
            room = max_len - len(prefix) - 1
            for c in swap_class(config, grammar.independent):
                for p in grammar.productions:
                    if p.lhs != c[0]:
                        continue
                    succ = p.rhs + c[1:]
                    w = prefix + (p.letter,)
                    if not succ:
                        found.add(w)
                    elif len(succ) <= room:
                        nxt.add((w, succ))
        frontier = nxt
    return found


def _bounded(words, max_len):
    return {w for w in words if len(w) <= max_len}


def _substituted(words, images: dict, max_len: int) -> set:
    out = set()
    for w in words:
        cur = {()}
        for a in w:
            cur = {u + v for u in cur for v in images[a] if len(u) + len(v) <= max_len}
        out |= cur
    return out


# --- criteria ------------------------------------------------------------------


def criterion_1() -> CriterionResult:
    def body():
        got = set(enumerate_words(EX1, 9))
        want = ex1_formula(9)
        return got == want, f"{len(got)} words enumerated, {len(want)} from the formula"
    return _timed(1, "ex1 bounded language", 5, body)


def criterion_2() -> CriterionResult:
    def body():
        hits = member(EX2, "absccab") and member(EX2, "abscbca")
        got = set(enumerate_words(EX2, 10))
        want = {w for w in _all_words(("a", "b", "c", "s"), 10) if ex2_predicate(w)}
        return hits and got == want, f"witness words accepted={hits}; {len(got)} vs {len(want)} words"
    return _timed(2, "ex2 membership and characterisation", 30, body)


def criterion_3_grammars(seed: int = DEFAULT_SEED) -> list[tuple[str, Grammar]]:
    rng = random.Random(seed)
    gs = [("ex1", EX1), ("ex2", EX2), ("l3-grammar", L3_GRAMMAR)]
    gs += [(f"random-{i}", random_grammar(rng)) for i in range(3)]
    return gs


def criterion_3(seed: int = DEFAULT_SEED) -> CriterionResult:
    def body():
        bad = []
        checked = 0
        for name, g in criterion_3_grammars(seed):
            ref = reference_language(g, 7)
            for w in _all_words(g.alphabet, 7):
                checked += 1
                if member(g, w) != (w in ref):
                    bad.append((name, w))
        return not bad, f"{checked} words checked, {len(bad)} disagreements" + (f" e.g. {bad[0]}" if bad else "")
    return _timed(3, "trace engine vs explicit swaps", 60, body)


def _certificate_pool(max_len: int = 8):
    pool = []
    for e in entries():
        if e.kind != "grammar":
            continue
        for w in enumerate_words(e.payload, max_len):
            pool.append((e.payload, w))
    return pool


def _mutate(grammar: Grammar, word: tuple, cert: Certificate, rng: random.Random):
    """One random edit: swap two firing positions, two letters, or relabel a node."""
    kind = rng.choice(("order", "letters", "relabel"))
    n = len(word)
    if kind == "order" and n >= 2:
        i, j = rng.sample(range(n), 2)
        order = list(cert.order)
        order[i], order[j] = order[j], order[i]
        return kind, word, Certificate(cert.tree, tuple(order))
    if kind == "letters" and n >= 2:
        i, j = rng.sample(range(n), 2)
        w = list(word)
        w[i], w[j] = w[j], w[i]
        return kind, tuple(w), cert
    node = rng.choice(cert.tree.nodes)
    others = [p for p in grammar.productions if p.lhs == node.production.lhs and p != node.production
              and len(p.rhs) == len(node.production.rhs)]
    if not others:
        return "none", word, cert
    p = rng.choice(others)
    try:
        nodes = tuple(TreeNode(m.id, m.label, p if m.id == node.id else m.production, m.children)
                      for m in cert.tree.nodes)
        tree = DerivationTree(nodes, cert.tree.root)
    except TreeError:
        return "relabel-invalid", word, None
    return "relabel", word, Certificate(tree, cert.order)


def criterion_4(seed: int = DEFAULT_SEED, mutations: int = 200) -> CriterionResult:
    def body():
        pool = _certificate_pool(8)
        certs = []
        failures = 0
        for g, w in pool:
            cert = tree_from_derivation(g, derive_witness(g, w))
            if not verify_certificate(g, w, cert):
                failures += 1
            certs.append((g, w, cert))
        rng = random.Random(seed)
        wrong = accepted = done = 0
        while done < mutations:
            g, w, cert = rng.choice(certs)
            kind, w2, cert2 = _mutate(g, w, cert, rng)
            if kind == "none" or (w2 == w and cert2 is cert):
                continue
            done += 1
            if cert2 is None:
                continue  # structurally invalid tree: rejected at construction
            ok = verify_certificate(g, w2, cert2)
            legit = w2 in words_of_tree(g, cert2.tree).words
            if ok:
                accepted += 1
                if not legit:
                    wrong += 1
        return (failures == 0 and wrong == 0,
                f"{len(pool)} certificates, {failures} failed; {done} mutations, "
                f"{accepted} accepted (all legitimate: {wrong == 0})")
    return _timed(4, "certificate soundness and completeness", 60, body)


def criterion_5() -> CriterionResult:
    def body():
        n = 8
        g = {name: gallery_get(name).payload for name in ("ex1", "ex2", "l3-grammar", "anbn", "equal-abc")}
        d = gallery_get("concat-witness").parts["L2"]
        pairs = [("ex2", g["ex2"], "l3-grammar", g["l3-grammar"]), ("anbn", g["anbn"], "equal-abc", g["equal-abc"]),
                 ("ex1", g["ex1"], "anbn", g["anbn"]), ("equal-abc", g["equal-abc"], "d", d)]
        bad = []
        threads_ok = True
        for n1, g1, n2, g2 in pairs:
            a, b = set(enumerate_words(g1, n)), set(enumerate_words(g2, n))
            if set(enumerate_words(union(g1, g2), n)) != a | b:
                bad.append(f"union {n1} {n2}")
            if set(enumerate_words(shuffle(g1, g2), n)) != shuffle_sets(a, b, n):
                bad.append(f"shuffle {n1} {n2}")
            if set(enumerate_words(concat(g1, g2), n)) != concat_sets(a, b, n):
                bad.append(f"concat {n1} {n2}")
            if is_transitive(g1) and is_transitive(g2):
                threads_ok &= is_transitive(union(g1, g2)) and is_transitive(shuffle(g1, g2))
        images = {"a": d, "b": g["ex2"]}
        got = set(enumerate_words(substitute_letters(g["anbn"], images), n))
        want = _substituted(enumerate_words(g["anbn"], n), {k: enumerate_words(v, n) for k, v in images.items()}, n)
        if got != want:
            bad.append("subst anbn")
        h = {"a": ("x", "y"), "b": ("z",), "s": ("q",), "c": ("c", "c")}
        got = set(enumerate_words(hom_image(g["ex2"], h), n))
        want = _substituted(enumerate_words(g["ex2"], n), {k: [v] for k, v in h.items()}, n)
        if got != want:
            bad.append("hom ex2")
        return not bad and threads_ok, f"mismatches: {bad or 'none'}; threads preserved: {threads_ok}"
    return _timed(5, "closure constructions", 60, body)


def criterion_6() -> CriterionResult:
    def body():
        m = from_transitive_grammar(EX2)
        lang = set(enumerate_words(EX2, 8))
        same = lang == set(enumerate_mpda(m, 8))
        back = set(enumerate_words(to_grammar(m), 8)) == lang
        try:
            from_transitive_grammar(EX1)
            witness = None
        except NotTransitiveError as exc:
            witness = exc.witness
        ok = same and back and witness == ("B", "P", "C")
        return ok, f"automaton agrees: {same}; round trip agrees: {back}; ex1 witness {witness}"
    return _timed(6, "multi-pushdown translation", 10, body)


def _pump_words(entry, rng, count, lo, hi):
    if entry.kind == "cfg+letter-independence":
        # few generator words fit the length window; draw several members of each class
        classes = [sorted(trace_class(w, entry.letter_independence, cap=hi))
                   for w in sample_words(entry.payload, rng, count, lo, hi)]
        found: list = []
        for _ in range(50 * count):
            if len(found) >= count or not classes:
                break
            w = rng.choice(rng.choice(classes))
            if w not in found:
                found.append(w)
        return found
    return sample_words(entry.payload, rng, count, lo, hi)


def criterion_7(seed: int = DEFAULT_SEED, N: int = 4, M: int = 2, count: int = 10, hi: int = 14) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        failures, notes, runs = [], [], 0
        for e in entries("PCCFL", "shuffle-CFL"):
            words = _pump_words(e, rng, count, N + 1, hi)
            if not words:
                notes.append(f"{e.name}: no words of length {N + 1}..{hi}")
                continue
            modes = ["shuffle"]
            if {"tr-pc-CFL", "shuffle-CFL"} & set(e.classes):
                modes.append("concat")
            oracle = e.oracle()
            for w in words:
                for mode in modes:
                    runs += 1
                    report = find_decomposition(oracle, w, N, mode, M)
                    if not report.found:
                        failures.append(f"{e.name}/{mode}/{' '.join(w)}: {report.outcome}")
        names = sorted({f.split("/")[0] for f in failures})
        detail = f"{runs} searches, {len(failures)} without decomposition"
        if names:
            detail += f" (languages: {', '.join(names)})"
        if notes:
            detail += "; " + "; ".join(notes)
        return not failures, detail
    return _timed(7, "pumping succeeds on class members", 120, body)


def criterion_8() -> CriterionResult:
    def body():
        r1 = find_decomposition(gallery_get("anbncn").oracle(), "aaaaabbbbbccccc", 4, "shuffle", 2)
        w = ("a",) * 4 + ("abar",) + ("b",) * 4 + ("bbar", "cbar") + ("c",) * 4
        r2 = find_decomposition(gallery_get("ex1").oracle(), w, 3, "concat", 2)
        ok = r1.outcome == "none" and r2.outcome == "none"
        return ok, (f"a^5b^5c^5 shuffle: {r1.outcome} after {r1.candidates}; "
                    f"ex1 concat: {r2.outcome} after {r2.candidates}")
    return _timed(8, "pumping fails on non-members", 120, body)


def criterion_9(seed: int = DEFAULT_SEED, negatives: int = 2000) -> CriterionResult:
    def body():
        problems = []
        l3 = l3_formula(9)
        if set(enumerate_words(L3_GRAMMAR, 9)) != l3:
            problems.append("l3 grammar differs from its formula")
        n = 0
        while 3 * n + 1 <= 9:
            for w in _multiset_orders(("a",) * n + ("s",) + ("b",) * n + ("c",) * n):
                if closure_member(L3_CFG, "b c", w) != (w in l3):
                    problems.append(f"l3 closure disagrees on {' '.join(w)}")
            n += 1
        l6 = l6_formula(12)
        closure = set()
        for w in enumerate_words(L6_CFG, 12):
            closure |= trace_class(w, L6_INDEPENDENCE, cap=12)
        if closure != l6:
            problems.append(f"l6 closure has {len(closure)} words, formula {len(l6)}")
        if not all(closure_member(L6_CFG, L6_INDEPENDENCE, w, cap=12) for w in l6):
            problems.append("l6 member rejected")
        rng = random.Random(seed)
        members = sort_words(l6)
        tried = 0
        while tried < negatives:
            w = list(rng.choice(members))
            rng.shuffle(w)
            w = tuple(w)
            if w in l6:
                continue
            tried += 1
            if closure_member(L6_CFG, L6_INDEPENDENCE, w, cap=12):
                problems.append(f"l6 non-member accepted: {' '.join(w)}")
                break
        return not problems, (f"l3: {len(l3)} words; l6: {len(l6)} words, {tried} negatives; "
                              f"problems: {problems[:3] or 'none'}")
    return _timed(9, "trace-closure witnesses", 60, body)


def criterion_10(seed: int = DEFAULT_SEED, terms: int = 1000) -> CriterionResult:
    def body():
        words = {"".join(w) for w in pa_enumerate(PA_EXAMPLE, 4)}
        exact = words == {"abcd", "abdc", "adbc"}
        rng = random.Random(seed)
        bad = 0
        for _ in range(terms):
            t1, t2, t3 = (random_term(rng) for _ in range(3))
            n1 = normalize(t1)
            if normalize(n1) != n1:
                bad += 1
            for kind in (Seq, Par):
                if normalize(kind((kind((t1, t2)), t3))) != normalize(kind((t1, kind((t2, t3))))):
                    bad += 1
            if normalize(Par((t1, t2))) != normalize(Par((t2, t1))):
                bad += 1
        return exact and bad == 0, f"words {sorted(words)}; {terms} random terms, {bad} property violations"
    return _timed(10, "PA engine and term normalisation", 10, body)


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}
SEEDED = {3, 4, 7, 9, 10}


def run_criterion(number: int, seed: int = DEFAULT_SEED) -> CriterionResult:
    fn = CRITERIA[number]
    return fn(seed) if number in SEEDED else fn()


def run_all(seed: int = DEFAULT_SEED, only=None) -> list[CriterionResult]:
    return [run_criterion(k, seed) for k in sorted(CRITERIA) if not only or k in only]
