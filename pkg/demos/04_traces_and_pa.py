"""
Trace closures and PA grammars
==============================

Commuting letters instead of non-terminals, and process terms with
sequential and parallel composition.
"""
from pccfl import (closure_member, letter_independence, pa_enumerate, pa_member, pa_successors, parse_term,
                   trace_class)
from pccfl.gallery import L3_CFG, L6_CFG, L6_INDEPENDENCE, PA_EXAMPLE
from pccfl.words import format_word

bc = letter_independence("b c")
print("class of aascbcb:", sorted(format_word(w) for w in trace_class("aascbcb", bc)))
print("ascb in the closure of a^n s (bc)^n?", closure_member(L3_CFG, bc, "ascb"))
print("asbb?", closure_member(L3_CFG, bc, "asbb"))

# in this closure every b must still come before every d
w = "a b abar dbar c d"
print(f"\n{w}:", closure_member(L6_CFG, L6_INDEPENDENCE, w))
w = "a abar dbar b c d"
print(f"{w}:", closure_member(L6_CFG, L6_INDEPENDENCE, w))

# PA: only the head of a sequence may fire, any branch of a parallel term
print("\nsteps from (A ; B) || C:")
for letter, term in sorted(pa_successors(PA_EXAMPLE, parse_term("(A ; B) || C")), key=str):
    print("  ", letter, "->", term)
print("language:", [format_word(w) for w in pa_enumerate(PA_EXAMPLE, 4)])
print("acbd accepted?", pa_member(PA_EXAMPLE, "acbd"))
