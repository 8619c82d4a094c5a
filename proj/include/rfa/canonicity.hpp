#pragma once

// Conditions under which residualizing an automaton yields the canonical
// RFA: the Nerode-closure condition on left languages (for G^r), its
// co-rest formulation, and the union-of-canonical-left-languages condition
// (for the subset-based residualization Nʳᵉˢ).

#include <optional>
#include <string>
#include <vector>

#include "rfa/automaton.hpp"

namespace rfa {

struct StateCanonicity {
    State state = 0;
    std::string name;
    /// cl_{⪯ʳ_L}(W_{I,q}) = W_{I,q}.
    bool left_language_closed = false;
    /// W_{I,q} is a union of left languages of the canonical RFA.
    bool tamm_union = false;
};

struct CanonicityReport {
    std::vector<StateCanonicity> per_state;
    bool thm52_holds = false;
    bool tamm_holds = false;
    bool gr_is_canonical = false;
    bool nres_is_canonical = false;
    std::size_t states = 0;
    std::size_t gr_states = 0;
    std::size_t nres_states = 0;
    std::size_t canonical_states = 0;

    std::string to_json() const;
};

/// Raised when a decided condition disagrees with the isomorphism test it
/// characterizes. The message carries a diagnostic dump.
class BiconditionalViolation : public Error {
public:
    using Error::Error;
};

/// Fills the closure flags, thm52_holds, gr_is_canonical and state counts.
CanonicityReport theorem52_check(const Nfa& a);
/// Fills the union flags, tamm_holds, nres_is_canonical and state counts.
CanonicityReport tamm_check(const Nfa& a);

/// Both checks. When `strict`, a disagreement between a condition and its
/// isomorphism side, or a state that satisfies the union condition but is not closed, throws
/// BiconditionalViolation.
CanonicityReport check_canonicity(const Nfa& a, bool strict = true);

/// The maximal right-Nerode principals whose union is W_{I,q}, or nullopt
/// when the left language of q is not closed (no decomposition exists).
std::optional<std::vector<std::size_t>> corest_decomposition(const Nfa& a, State q);
/// Per-state decomposition; throws Error naming the first state without one.
std::vector<std::vector<std::size_t>> corest_decomposition(const Nfa& a);

} // namespace rfa
