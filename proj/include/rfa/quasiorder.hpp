#pragma once

// Finite presentations of L-preserving quasiorders on words through their
// principals: the Nerode quasiorders of a language and the quasiorders
// induced by the post/pre images of an automaton.

#include <optional>
#include <string>
#include <vector>

#include "rfa/automaton.hpp"
#include "rfa/residual_lattice.hpp"

namespace rfa {

enum class QuasiorderSource { language, automaton };

struct Principal {
    /// Length-lex-least word of the class, as a word of the original language.
    Word witness;
    /// State of `classifier` representing this principal.
    State key_state = 0;
    /// Post/pre image for automata-based systems.
    std::optional<StateSet> key_set;
    /// State of `lattice` whose quotient is the witness' quotient.
    State residual = 0;
};

/// A quasiorder with finitely many principals. Principal i is identified
/// with state i of `classifier`: a right system classifies w by running
/// the classifier on w, a left system runs it on the reverse of w.
class PrincipalSystem {
public:
    Side side = Side::right;
    QuasiorderSource source = QuasiorderSource::language;
    std::vector<Principal> reps;
    /// leq[i][j] ⇔ witness_i ⪯ witness_j.
    std::vector<std::vector<bool>> leq;
    /// in_L[i] ⇔ witness_i ∈ L.
    std::vector<bool> in_L;
    Dfa classifier;
    ResidualLattice lattice;
    /// Source automaton state names, used to label subset keys.
    std::vector<std::string> source_names;

    std::size_t size() const noexcept { return reps.size(); }
    std::size_t class_of(std::span<const Symbol> w) const;
    bool strictly_below(std::size_t i, std::size_t j) const {
        return leq[i][j] && !leq[j][i];
    }
    /// ≤ on arbitrary words.
    bool word_leq(const Word& u, const Word& v) const {
        return leq[class_of(u)][class_of(v)];
    }
    /// Human-readable key: subset literal or witness word.
    std::string key_label(std::size_t i) const;
    /// Automaton over the classifier accepting words whose class lies in
    /// `classes`; already oriented for the side.
    Nfa classes_language(const std::vector<bool>& classes) const;
};

/// u ⪯ v ⇔ u⁻¹L ⊆ v⁻¹L (right) or Lu⁻¹ ⊆ Lv⁻¹ (left), L = L(a).
PrincipalSystem build_nerode(const Nfa& a, Side side);
/// u ⪯ v ⇔ post_u(I) ⊆ post_v(I) (right) or pre_u(F) ⊆ pre_v(F) (left).
PrincipalSystem build_automata_qo(const Nfa& a, Side side);

/// Def. of L-composite principal: the quotient of the witness equals the
/// union of the quotients of strictly smaller principals.
bool is_L_composite(const PrincipalSystem& sys, std::size_t i);
/// Upward closure of L(s).
Nfa closure_of_regular(const PrincipalSystem& sys, const Nfa& s);
/// cl(witness_i).
Nfa principal_language(const PrincipalSystem& sys, std::size_t i);
/// L-preservation: closure of L equals L.
bool is_L_preserving(const PrincipalSystem& sys, const Nfa& language);

} // namespace rfa
