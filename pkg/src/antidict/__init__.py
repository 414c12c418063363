"""Minimal forbidden factors of linear and circular words.

Computes antidictionaries (minimal absent words) of words and necklaces,
builds and inverts factor automata through the avoidance construction,
reconstructs words from their antidictionaries, and verifies the structural
facts this machinery predicts, with exhaustive small-case oracles.
"""

from .automata import (
    Dfa,
    Trie,
    build_trie,
    equivalent,
    export_dot,
    isomorphic,
    minimize,
    strip_sinks,
)
from .factor_automaton import build_factor_automaton
from .fibonacci import (
    FibonacciFamily,
    FibonacciVerification,
    fibonacci_family,
    fibonacci_word,
    mfw_fibonacci_closed_form,
    verify_central_identity,
    verify_fibonacci,
)
from .l_automaton import circular_factor_dfa, l_automaton
from .mfw import (
    CardinalityReport,
    MfwSet,
    check_cardinality_bounds,
    mfw_circular,
    mfw_circular_bruteforce,
    mfw_linear,
    mfw_linear_bruteforce,
)
from .reconstruction import ReconstructionError, reconstruct_circular, reconstruct_word
from .words import (
    Alphabet,
    CircularWord,
    LimitExceeded,
    bispecial_factors,
    canonical_rotation,
    circular_factor_membership,
    circular_factor_set,
    count_occurrences,
    factor_set,
    is_balanced,
    is_primitive,
    primitive_root,
    reversal,
    rotations,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "CardinalityReport",
    "CircularWord",
    "Dfa",
    "FibonacciFamily",
    "FibonacciVerification",
    "LimitExceeded",
    "MfwSet",
    "ReconstructionError",
    "Trie",
    "bispecial_factors",
    "build_factor_automaton",
    "build_trie",
    "canonical_rotation",
    "check_cardinality_bounds",
    "circular_factor_dfa",
    "circular_factor_membership",
    "circular_factor_set",
    "count_occurrences",
    "equivalent",
    "export_dot",
    "factor_set",
    "fibonacci_family",
    "fibonacci_word",
    "is_balanced",
    "is_primitive",
    "isomorphic",
    "l_automaton",
    "mfw_circular",
    "mfw_circular_bruteforce",
    "mfw_fibonacci_closed_form",
    "mfw_linear",
    "mfw_linear_bruteforce",
    "minimize",
    "primitive_root",
    "reconstruct_circular",
    "reconstruct_word",
    "reversal",
    "rotations",
    "strip_sinks",
    "verify_central_identity",
    "verify_fibonacci",
]
