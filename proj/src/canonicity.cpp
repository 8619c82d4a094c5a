#include "rfa/canonicity.hpp"

#include <algorithm>

#include <json.hpp>

#include "rfa/constructions.hpp"
#include "rfa/language.hpp"
#include "rfa/nfa_io.hpp"
#include "rfa/quasiorder.hpp"

namespace rfa {

std::string CanonicityReport::to_json() const {
    nlohmann::ordered_json j;
    j["states"] = states;
    j["gr_states"] = gr_states;
    j["nres_states"] = nres_states;
    j["canonical_states"] = canonical_states;
    j["thm52_holds"] = thm52_holds;
    j["tamm_holds"] = tamm_holds;
    j["gr_is_canonical"] = gr_is_canonical;
    j["nres_is_canonical"] = nres_is_canonical;
    j["per_state"] = nlohmann::ordered_json::array();
    for (const auto& s : per_state)
        j["per_state"].push_back(
            {{"name", s.name}, {"closed", s.left_language_closed}, {"tamm", s.tamm_union}});
    return j.dump(2);
}

namespace {

CanonicityReport skeleton(const Nfa& a, const Nfa& canonical) {
    CanonicityReport r;
    r.states = a.size();
    r.canonical_states = canonical.size();
    for (State q = 0; q < a.size(); ++q)
        r.per_state.push_back({q, a.name(q), false, false});
    return r;
}

void fill_thm52(CanonicityReport& r, const Nfa& a, const PrincipalSystem& nerode,
                const Nfa& canonical) {
    r.thm52_holds = true;
    for (State q = 0; q < a.size(); ++q) {
        const Nfa left = left_language(a, q);
        const bool closed =
            static_cast<bool>(language_equiv(closure_of_regular(nerode, left), left));
        r.per_state[q].left_language_closed = closed;
        r.thm52_holds = r.thm52_holds && closed;
    }
    const Nfa gr = g_right(a).automaton;
    r.gr_states = gr.size();
    r.gr_is_canonical = isomorphic(gr, canonical).has_value();
}

void fill_tamm(CanonicityReport& r, const Nfa& a, const PrincipalSystem& nerode,
               const Nfa& canonical) {
    // left languages of the canonical RFA are the prime principals
    std::vector<Nfa> prime_principals;
    std::vector<std::size_t> prime_ids;
    for (std::size_t i = 0; i < nerode.size(); ++i)
        if (!is_L_composite(nerode, i)) {
            prime_principals.push_back(principal_language(nerode, i));
            prime_ids.push_back(i);
        }
    r.tamm_holds = true;
    for (State q = 0; q < a.size(); ++q) {
        const Nfa left = left_language(a, q);
        std::vector<bool> classes(nerode.size(), false);
        for (std::size_t k = 0; k < prime_ids.size(); ++k)
            if (language_includes(prime_principals[k], left))
                for (std::size_t j = 0; j < nerode.size(); ++j)
                    if (nerode.leq[prime_ids[k]][j])
                        classes[j] = true;
        const bool is_union =
            static_cast<bool>(language_equiv(nerode.classes_language(classes), left));
        r.per_state[q].tamm_union = is_union;
        r.tamm_holds = r.tamm_holds && is_union;
    }
    const Nfa nres = denis_residualize(a).automaton;
    r.nres_states = nres.size();
    r.nres_is_canonical = isomorphic(nres, canonical).has_value();
}

[[noreturn]] void violation(const Nfa& a, const CanonicityReport& r, const std::string& what) {
    throw BiconditionalViolation(what + "\n--- automaton ---\n" + render_nfa(a) +
                                 "--- report ---\n" + r.to_json());
}

} // namespace

CanonicityReport theorem52_check(const Nfa& a) {
    const Nfa canonical = canonical_rfa(a).automaton;
    auto r = skeleton(a, canonical);
    fill_thm52(r, a, build_nerode(a, Side::right), canonical);
    return r;
}

CanonicityReport tamm_check(const Nfa& a) {
    const Nfa canonical = canonical_rfa(a).automaton;
    auto r = skeleton(a, canonical);
    fill_tamm(r, a, build_nerode(a, Side::right), canonical);
    return r;
}

CanonicityReport check_canonicity(const Nfa& a, bool strict) {
    const Nfa canonical = canonical_rfa(a).automaton;
    const auto nerode = build_nerode(a, Side::right);
    auto r = skeleton(a, canonical);
    fill_thm52(r, a, nerode, canonical);
    fill_tamm(r, a, nerode, canonical);
    if (strict) {
        if (r.thm52_holds != r.gr_is_canonical)
            violation(a, r, "closure condition disagrees with G^r(N) ≅ canonical RFA");
        if (r.tamm_holds != r.nres_is_canonical)
            violation(a, r, "union condition disagrees with N^res ≅ canonical RFA");
        for (const auto& s : r.per_state)
            if (s.tamm_union && !s.left_language_closed)
                violation(a, r, "state " + s.name + " is a union of canonical left languages "
                                                    "but its left language is not closed");
    }
    return r;
}

namespace {

std::optional<std::vector<std::size_t>> decompose(const Nfa& a, State q,
                                                  const PrincipalSystem& nerode) {
    const Nfa left = left_language(a, q);
    std::vector<std::size_t> parts;
    std::vector<bool> classes(nerode.size(), false);
    for (std::size_t i = 0; i < nerode.size(); ++i)
        if (language_includes(principal_language(nerode, i), left)) {
            parts.push_back(i);
            for (std::size_t j = 0; j < nerode.size(); ++j)
                if (nerode.leq[i][j])
                    classes[j] = true;
        }
    if (!language_equiv(nerode.classes_language(classes), left))
        return std::nullopt;
    // Keep the maximal principals only: cl(i) ⊆ cl(j) whenever j ≺ i.
    std::vector<std::size_t> maximal;
    for (std::size_t i : parts)
        if (std::none_of(parts.begin(), parts.end(),
                         [&](std::size_t j) { return nerode.strictly_below(j, i); }))
            maximal.push_back(i);
    return maximal;
}

} // namespace

std::optional<std::vector<std::size_t>> corest_decomposition(const Nfa& a, State q) {
    if (q >= a.size())
        throw Error("state index out of range");
    return decompose(a, q, build_nerode(a, Side::right));
}

std::vector<std::vector<std::size_t>> corest_decomposition(const Nfa& a) {
    const auto nerode = build_nerode(a, Side::right);
    std::vector<std::vector<std::size_t>> out;
    for (State q = 0; q < a.size(); ++q) {
        auto parts = decompose(a, q, nerode);
        if (!parts)
            throw Error("left language of state " + a.name(q) + " is not a union of co-rests");
        out.push_back(std::move(*parts));
    }
    return out;
}

} // namespace rfa
