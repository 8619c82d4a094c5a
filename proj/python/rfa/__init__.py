"""Residual finite-state automata."""

from ._core import (
    Error,
    Nfa,
    canonical_rfa,
    check_canonicity,
    classify,
    denis_residualize,
    double_reversal_rfa,
    f_left,
    f_right,
    g_left,
    g_right,
    isomorphic,
    language_equiv,
    language_includes,
    learn,
    load_nfa,
    main,
    minimal_dfa_size,
    parse_nfa,
    random_nfa,
)

__all__ = [
    "Error",
    "Nfa",
    "canonical_rfa",
    "check_canonicity",
    "classify",
    "denis_residualize",
    "double_reversal_rfa",
    "f_left",
    "f_right",
    "g_left",
    "g_right",
    "isomorphic",
    "language_equiv",
    "language_includes",
    "learn",
    "load_nfa",
    "main",
    "minimal_dfa_size",
    "parse_nfa",
    "random_nfa",
]
