#pragma once

// The finite set of quotients of a regular language, ordered by inclusion,
// with prime/composite flags and the RFA classifiers built on top of it.

#include <optional>
#include <vector>

#include "rfa/automaton.hpp"

namespace rfa {

enum class Side { right, left };

const char* to_string(Side side);

/// Quotients of L. For Side::right the states of min_dfa are the quotients
/// u⁻¹L of the minimal DFA of L. For Side::left, min_dfa is the minimal DFA
/// of the reversed language, and state p reached by u denotes (Lu^R⁻¹)^R.
struct ResidualLattice {
    Side side = Side::right;
    Dfa min_dfa;
    /// incl[p][q] ⇔ Res(p) ⊆ Res(q).
    std::vector<std::vector<bool>> incl;
    std::vector<bool> prime;
    /// Length-lex-least word reaching each state of min_dfa.
    std::vector<Word> access_word;

    std::size_t size() const noexcept { return min_dfa.size(); }
    bool strictly_below(State p, State q) const { return p != q && incl[p][q]; }
    /// Automaton for Res(p) (min_dfa started at p).
    Nfa residual(State p) const;
    /// Automaton for the union of the quotients in `states`.
    Nfa residual_union(const std::vector<State>& states) const;
    /// State whose quotient equals L(view), if any.
    std::optional<State> find_residual(const Nfa& view) const;
};

ResidualLattice build_lattice(const Nfa& a, Side side);

std::vector<State> prime_residuals(const ResidualLattice& lat);

struct Classification {
    bool is_rfa = false;
    bool is_corfa = false;
    bool is_consistent = false;
    bool is_strongly_consistent = false;
};

Classification classify(const Nfa& a);
bool is_rfa(const Nfa& a);

/// Automaton for {w : w⁻¹L = W_{q,F}} where L = L(a); accepts ∅ when the
/// right language of q is no quotient of L.
Nfa characterizing_words(const Nfa& a, State q);

} // namespace rfa
