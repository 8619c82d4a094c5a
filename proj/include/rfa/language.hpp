#pragma once

// Language-level operations on automata: images, reversal, subset
// construction, minimization, exact equivalence/inclusion and isomorphism.

#include <optional>
#include <vector>

#include "rfa/automaton.hpp"

namespace rfa {

/// Initial/final swapped and every transition reversed.
Nfa reverse(const Nfa& a);

/// post_w(s): states reachable from s reading w.
StateSet post(const Nfa& a, const StateSet& s, std::span<const Symbol> w);
/// pre_w(s): states from which some state of s is reachable reading w.
StateSet pre(const Nfa& a, const StateSet& s, std::span<const Symbol> w);
bool accepts(const Nfa& a, std::span<const Symbol> w);

/// Reachable-subset construction. The ∅ subset, when reachable, becomes an
/// explicit non-accepting sink. States are numbered in breadth-first order
/// (alphabet order), so state 0 is the initial subset.
Dfa determinize(const Nfa& a);

/// Removes unreachable states and merges language-equivalent ones by
/// partition refinement. Output states are numbered breadth-first and named
/// by their length-lex-least access word.
Dfa minimize(const Dfa& d);

/// Result of an equivalence/inclusion query; the witness is the
/// length-lex-least word of the offending difference.
struct Verdict {
    bool holds = true;
    std::optional<Word> witness;
    explicit operator bool() const noexcept { return holds; }
};

Verdict language_equiv(const Nfa& a, const Nfa& b);
/// L(a) ⊆ L(b).
Verdict language_includes(const Nfa& a, const Nfa& b);
bool is_empty(const Nfa& a);
/// Length-lex-least accepted word.
std::optional<Word> shortest_word(const Nfa& a);

/// State bijection a → b preserving initial/final membership and
/// transitions, or nullopt.
std::optional<std::vector<State>> isomorphic(const Nfa& a, const Nfa& b);

/// Injection a → b onto an induced sub-automaton: initial/final membership
/// and transitions between mapped states agree exactly.
std::optional<std::vector<State>> embeds_into(const Nfa& a, const Nfa& b);

/// States with an empty right language.
StateSet empty_states(const Nfa& a);
/// States with an empty left language.
StateSet unreachable_states(const Nfa& a);

} // namespace rfa
