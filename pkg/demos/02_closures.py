"""
Closure constructions
=====================

Union and shuffle keep threads intact; concatenation and substitution
make the two operands depend on each other, which can break transitivity.
"""
from pccfl import concat, enumerate_words, hom_image, is_transitive, shuffle, union, word_grammar
from pccfl.gallery import ANBN, EQUAL_ABC, EX2
from pccfl.words import format_word


def show(title, g, n):
    words = [format_word(w) for w in enumerate_words(g, n)]
    print(f"{title} ({len(words)} words up to length {n}):", ", ".join(words[:12]), "..." if len(words) > 12 else "")


show("ex2", EX2, 5)
show("anbn", ANBN, 6)
show("union", union(EX2, ANBN), 5)
show("shuffle of ab and c", shuffle(word_grammar("ab"), word_grammar("c")), 3)
show("concat", concat(ANBN, ANBN), 6)

print("\nshuffle transitive?", is_transitive(shuffle(EX2, ANBN)))
print("concat of equal-abc and anbn transitive?", is_transitive(concat(EQUAL_ABC, ANBN)))

# a homomorphism maps each letter to a word
show("a^n b^n under a -> x y", hom_image(ANBN, {"a": "xy", "b": "z"}), 9)
