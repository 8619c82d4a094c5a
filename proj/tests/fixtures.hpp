#pragma once

#include <string>

#include "rfa/automaton.hpp"
#include "rfa/nfa_io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) {
    return std::string(RFA_FIXTURE_DIR) + "/" + name;
}

inline rfa::Nfa fig2() { return rfa::load_nfa(path("fig2.nfa")); }

inline rfa::Word w(const rfa::Nfa& a, const std::string& text) {
    return a.alphabet().parse(text);
}

/// Σ* over the letters of `a`.
inline rfa::Nfa sigma_star(std::size_t letters) {
    return rfa::universal_language(rfa::letters(letters));
}

/// {ε} over the given number of letters.
inline rfa::Nfa epsilon_only(std::size_t letters) {
    return rfa::epsilon_language(rfa::letters(letters));
}

} // namespace fixtures
