"""
Derivations, threads and certificates
=====================================

Two small grammars: one whose dependence is not transitive, one whose
non-terminals split into three threads.
"""
import json

from pccfl import (certificate_to_json, derive_witness, enumerate_words, member, replay, threads,
                   transitivity_witness, tree_from_derivation, verify_certificate, words_of_tree)
from pccfl.gallery import EX1, EX2
from pccfl.words import format_word

# B and C commute, so b's and c's interleave freely after the bar letters
print("ex1 words up to length 6:")
for w in enumerate_words(EX1, 6):
    print("  ", format_word(w))
print("ex1 dependence is not transitive, witness:", transitivity_witness(EX1))

# ex2: S, A and B form one thread; the primed symbols float free
print("\nex2 threads:", [sorted(b) for b in threads(EX2)])
print("absccab in ex2?", member(EX2, "absccab"))
print("abscc in ex2?", member(EX2, "abscc"))

# a derivation replays as a list of configurations (swap steps included)
d = derive_witness(EX2, "absccab")
for config in replay(EX2, d):
    print("  ", " ".join(config) or "eps")
print(f"{d.production_steps} production steps, {d.swap_steps} swap")

# the derivation induces a colored tree and a firing order
cert = tree_from_derivation(EX2, d)
print("\nfiring order:", cert.order)
print("certificate:", json.dumps(json.loads(certificate_to_json(EX2, cert))))
print("verifies:", verify_certificate(EX2, "absccab", cert))

# one tree, several words
print("words of this tree:", sorted(format_word(w) for w in words_of_tree(EX2, cert.tree).words))
