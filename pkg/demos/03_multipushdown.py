"""
Threads as stacks
=================

A grammar with transitive dependence runs on a stateless automaton with one
stack per thread.  Going back, symbols on different stacks commute.
"""
from pccfl import accepts, enumerate_mpda, enumerate_words, format_mpda, from_transitive_grammar, to_grammar
from pccfl.gallery import EX2

m = from_transitive_grammar(EX2)
print(format_mpda(m))

# pop the top of any non-empty stack; accept on empty stacks
config = m.initial_config()
for letter in "absccab":
    (t, config), *_ = [(t, c) for t, c in m.moves(config, letter)]
    print(f"read {letter}: stacks {[' '.join(s) or '-' for s in config]}")

print("accepts absccab:", accepts(m, "absccab"))
same = set(enumerate_mpda(m, 8)) == set(enumerate_words(EX2, 8))
back = set(enumerate_words(to_grammar(m), 8)) == set(enumerate_words(EX2, 8))
print("automaton language equals grammar language up to length 8:", same)
print("and the round trip back to a grammar:", back)
