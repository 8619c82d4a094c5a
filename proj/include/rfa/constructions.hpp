#pragma once

// Residual automata constructions: the quasiorder-based H^r/H^l family
// (F^r, F^l, G^r, G^l), the subset-based residualization Nʳᵉˢ, the canonical RFA and
// the double-reversal pipeline.

#include <optional>
#include <string>
#include <vector>

#include "rfa/automaton.hpp"
#include "rfa/quasiorder.hpp"

namespace rfa {

struct StateProvenance {
    Word witness;
    /// Subset literal for automata-based keys, otherwise the witness.
    std::string key;
    std::optional<StateSet> key_set;
    /// Principal (or lattice state, or subset index) the state came from.
    std::size_t origin = 0;
    bool prime = true;
};

struct ConstructionResult {
    Nfa automaton;
    std::vector<StateProvenance> provenance;
};

/// States are the L-prime principals of a right L-preserving quasiorder.
/// Throws Error when `sys` is left-sided or not L-preserving for L(language).
ConstructionResult build_h_right(const PrincipalSystem& sys, const Nfa& language);
/// Dual construction for a left L-preserving quasiorder; yields a co-RFA.
ConstructionResult build_h_left(const PrincipalSystem& sys, const Nfa& language);

ConstructionResult f_right(const Nfa& language);
ConstructionResult f_left(const Nfa& language);
ConstructionResult g_right(const Nfa& a);
ConstructionResult g_left(const Nfa& a);

/// Keeps the reachable post-sets that are not the union of strictly smaller
/// reachable post-sets (∅ always counts as such a union).
ConstructionResult denis_residualize(const Nfa& a);

/// Built from the prime quotients of L(language) directly.
ConstructionResult canonical_rfa(const Nfa& language);

/// g_right(reverse(g_right(reverse(a)))).
ConstructionResult double_reversal_rfa(const Nfa& a);

} // namespace rfa
