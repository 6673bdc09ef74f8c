"""Partially-commutative context-free languages: grammars whose non-terminals
commute according to an independence relation, plus the surrounding toolkit
(derivation trees, closure constructions, multi-pushdown automata, PA
grammars, trace closures and pumping checks)."""
from .closures import concat, hom_image, rename, shuffle, substitute_letters, union, word_grammar
from .engine import (Derivation, ProductionStep, SwapStep, canonical, derive_witness, enumerate_words,
                     member, replay, successors, swap_reachable)
from .errors import (BudgetExhausted, DerivationError, EmptyWordError, GrammarError, MpdaError,
                     NotTransitiveError, PccflError, TreeError, UnknownLetterError)
from .gallery import GalleryEntry, gallery_get, gallery_list
from .grammar import (Diagnostic, Grammar, Production, dependence, format_pcg, is_transitive, load_pcg,
                      parse_pcg, productive, threads, transitivity_witness, validate)
from .mpda import (Mpda, Transition, accepts, enumerate_mpda, format_mpda, from_transitive_grammar,
                   load_mpda, parse_mpda, to_grammar)
from .pa import (EMPTY, Atom, Empty, PaGrammar, PaProduction, Par, Seq, format_pag, load_pag, normalize,
                 pa_enumerate, pa_member, pa_successors, par, parse_pag, parse_term, seq, validate_pa)
from .pumping import (LanguageOracle, PumpDecomposition, PumpReport, check_decomposition,
                      closure_oracle, find_decomposition, grammar_oracle, mpda_oracle, pa_oracle,
                      predicate_oracle)
from .trace_closure import (LetterIndependence, closure_member, letter_independence, trace_class,
                            trace_normal_form, word_trace_equivalent)
from .trees import (Certificate, DerivationTree, TreeNode, certificate_from_json, certificate_to_json,
                    induced_subword, rearrange_to_infix, substitute, tree_from_derivation,
                    verify_certificate, words_of_tree)
from .words import as_word, format_word, interleaving_member, interleavings, shuffle_sets

__all__ = [
    "accepts",
    "as_word",
    "Atom",
    "BudgetExhausted",
    "canonical",
    "Certificate",
    "certificate_from_json",
    "certificate_to_json",
    "check_decomposition",
    "closure_member",
    "closure_oracle",
    "concat",
    "dependence",
    "Derivation",
    "DerivationError",
    "DerivationTree",
    "derive_witness",
    "Diagnostic",
    "EMPTY",
    "Empty",
    "EmptyWordError",
    "enumerate_mpda",
    "enumerate_words",
    "find_decomposition",
    "format_mpda",
    "format_pag",
    "format_pcg",
    "format_word",
    "from_transitive_grammar",
    "gallery_get",
    "gallery_list",
    "GalleryEntry",
    "Grammar",
    "grammar_oracle",
    "GrammarError",
    "hom_image",
    "induced_subword",
    "interleaving_member",
    "interleavings",
    "is_transitive",
    "LanguageOracle",
    "letter_independence",
    "LetterIndependence",
    "load_mpda",
    "load_pag",
    "load_pcg",
    "member",
    "Mpda",
    "mpda_oracle",
    "MpdaError",
    "normalize",
    "NotTransitiveError",
    "pa_enumerate",
    "pa_member",
    "pa_oracle",
    "pa_successors",
    "PaGrammar",
    "PaProduction",
    "Par",
    "par",
    "parse_mpda",
    "parse_pag",
    "parse_pcg",
    "parse_term",
    "PccflError",
    "predicate_oracle",
    "Production",
    "ProductionStep",
    "productive",
    "PumpDecomposition",
    "PumpReport",
    "rearrange_to_infix",
    "rename",
    "replay",
    "Seq",
    "seq",
    "shuffle",
    "shuffle_sets",
    "substitute",
    "substitute_letters",
    "successors",
    "swap_reachable",
    "SwapStep",
    "threads",
    "to_grammar",
    "trace_class",
    "trace_normal_form",
    "Transition",
    "transitivity_witness",
    "tree_from_derivation",
    "TreeError",
    "TreeNode",
    "union",
    "UnknownLetterError",
    "validate",
    "validate_pa",
    "verify_certificate",
    "word_grammar",
    "word_trace_equivalent",
    "words_of_tree",
]

__version__ = "0.1.0"
