"""
Pumping searches
================

Look for decompositions that survive m = 0, 1, 2.  A hit is verified; a
miss only says that no decomposition within the bound works up to M.
"""
from pccfl import find_decomposition, grammar_oracle, predicate_oracle
from pccfl.gallery import EX1, anbn, anbncn, ex1_predicate
from pccfl.words import format_word


def report(title, r):
    print(f"{title}: {r.outcome} after {r.candidates} candidates")
    if r.decomposition:
        d = r.decomposition.as_dict()
        print("   ", ", ".join(f"{k}={v or 'eps'}" for k, v in d.items() if k != "mode"))
        for m, w, hit in r.pumped:
            print(f"    m={m}: {format_word(w)} {'in' if hit else 'not in'} L")


report("a^4 b^4, shuffle, N=2", find_decomposition(predicate_oracle(anbn, "ab"), "aaaabbbb", 2))
report("a^5 b^5 c^5, shuffle, N=4",
       find_decomposition(predicate_oracle(anbncn, "abc"), "aaaaabbbbbccccc", 4))

ex1 = predicate_oracle(ex1_predicate, EX1.alphabet)
w = ["a"] * 4 + ["abar"] + ["b"] * 4 + ["bbar", "cbar"] + ["c"] * 4
report("ex1 word, concat, N=3", find_decomposition(ex1, w, 3, "concat"))

# shuffle pumping holds for ex1, but only with a larger constant: the pumped
# part needs an a, a b and a c, plus abar and cbar between them
w = ["a", "a", "abar", "b", "b", "bbar", "cbar", "c", "c"]
grammar = grammar_oracle(EX1)
report("ex1 word, shuffle, N=4", find_decomposition(grammar, w, 4))
report("ex1 word, shuffle, N=5", find_decomposition(grammar, w, 5))
