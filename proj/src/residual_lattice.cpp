#include "rfa/residual_lattice.hpp"

#include "rfa/language.hpp"

namespace rfa {

const char* to_string(Side side) { return side == Side::right ? "right" : "left"; }

Nfa ResidualLattice::residual(State p) const {
    StateSet s(size());
    s.insert(p);
    return with_initial(min_dfa.to_nfa(), std::move(s));
}

Nfa ResidualLattice::residual_union(const std::vector<State>& states) const {
    StateSet s(size());
    for (State p : states)
        s.insert(p);
    return with_initial(min_dfa.to_nfa(), std::move(s));
}

std::optional<State> ResidualLattice::find_residual(const Nfa& view) const {
    for (State p = 0; p < size(); ++p)
        if (language_equiv(view, residual(p)))
            return p;
    return std::nullopt;
}

ResidualLattice build_lattice(const Nfa& a, Side side) {
    ResidualLattice lat;
    lat.side = side;
    lat.min_dfa = minimize(determinize(side == Side::right ? a : reverse(a)));
    const Dfa& d = lat.min_dfa;
    const std::size_t n = d.size();

    // greatest fixpoint: (p,q) survives iff p accepting ⇒ q accepting and
    // every successor pair survives
    lat.incl.assign(n, std::vector<bool>(n, false));
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            lat.incl[p][q] = !d.accepting[p] || d.accepting[q];
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p)
            for (State q = 0; q < n; ++q) {
                if (!lat.incl[p][q])
                    continue;
                for (Symbol s = 0; s < d.alphabet.size(); ++s)
                    if (!lat.incl[d.next[p][s]][d.next[q][s]]) {
                        lat.incl[p][q] = false;
                        changed = true;
                        break;
                    }
            }
    }

    for (auto& w : d.access_words())
        lat.access_word.push_back(w.value_or(Word{}));

    lat.prime.assign(n, false);
    for (State p = 0; p < n; ++p) {
        std::vector<State> below;
        for (State q = 0; q < n; ++q)
            if (lat.strictly_below(q, p))
                below.push_back(q);
        lat.prime[p] = !language_equiv(lat.residual(p), lat.residual_union(below));
    }
    return lat;
}

std::vector<State> prime_residuals(const ResidualLattice& lat) {
    std::vector<State> out;
    for (State p = 0; p < lat.size(); ++p)
        if (lat.prime[p])
            out.push_back(p);
    return out;
}

namespace {

Nfa characterizing_words(const Nfa& a, State q, const ResidualLattice& lat) {
    auto p = lat.find_residual(right_language(a, q));
    if (!p)
        return empty_language(a.alphabet());
    StateSet fin(lat.size());
    fin.insert(*p);
    return with_final(lat.min_dfa.to_nfa(), std::move(fin));
}

} // namespace

bool is_rfa(const Nfa& a) {
    const auto lat = build_lattice(a, Side::right);
    for (State q = 0; q < a.size(); ++q)
        if (!lat.find_residual(right_language(a, q)))
            return false;
    return true;
}

Classification classify(const Nfa& a) {
    Classification c;
    const auto lat = build_lattice(a, Side::right);
    c.is_rfa = true;
    c.is_consistent = true;
    c.is_strongly_consistent = true;
    for (State q = 0; q < a.size(); ++q) {
        const Nfa chars = characterizing_words(a, q, lat);
        const Nfa reach = left_language(a, q);
        if (is_empty(chars))
            c.is_rfa = false;
        if (is_empty(intersection_of(reach, chars)))
            c.is_consistent = false;
        if (!language_includes(chars, reach))
            c.is_strongly_consistent = false;
    }
    c.is_corfa = is_rfa(reverse(a));
    return c;
}

Nfa characterizing_words(const Nfa& a, State q) {
    if (q >= a.size())
        throw Error("state index out of range");
    return characterizing_words(a, q, build_lattice(a, Side::right));
}

} // namespace rfa
