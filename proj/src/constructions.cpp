#include "rfa/constructions.hpp"

#include "rfa/language.hpp"
#include "rfa/residual_lattice.hpp"

namespace rfa {

namespace {

std::vector<std::size_t> prime_principals(const PrincipalSystem& sys) {
    std::vector<std::size_t> primes;
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (!is_L_composite(sys, i))
            primes.push_back(i);
    return primes;
}

ConstructionResult skeleton(const PrincipalSystem& sys, const std::vector<std::size_t>& primes) {
    ConstructionResult out{Nfa(sys.classifier.alphabet, primes.size()), {}};
    std::vector<std::string> names;
    for (std::size_t i : primes) {
        StateProvenance p;
        p.witness = sys.reps[i].witness;
        p.key = sys.key_label(i);
        p.key_set = sys.reps[i].key_set;
        p.origin = i;
        p.prime = true;
        names.push_back(p.key);
        out.provenance.push_back(std::move(p));
    }
    out.automaton.set_names(std::move(names));
    return out;
}

void require_preserving(const PrincipalSystem& sys, const Nfa& language) {
    if (!is_L_preserving(sys, language))
        throw Error("quasiorder is not L-preserving for the given language");
}

} // namespace

ConstructionResult build_h_right(const PrincipalSystem& sys, const Nfa& language) {
    if (sys.side != Side::right)
        throw Error("build_h_right needs a right quasiorder");
    require_preserving(sys, language);
    const auto primes = prime_principals(sys);
    auto out = skeleton(sys, primes);
    Nfa& h = out.automaton;
    const std::size_t eps = sys.class_of(Word{});
    for (std::size_t qi = 0; qi < primes.size(); ++qi) {
        const std::size_t u = primes[qi];
        h.set_initial(qi, sys.leq[u][eps]);
        h.set_final(qi, sys.in_L[u]);
        for (Symbol a = 0; a < h.alphabet().size(); ++a) {
            // cl(u)·a ⊆ cl(v) ⇔ v ⪯ ua
            const std::size_t ua = sys.class_of(concat(sys.reps[u].witness, Word{a}));
            for (std::size_t qj = 0; qj < primes.size(); ++qj)
                if (sys.leq[primes[qj]][ua])
                    h.add_transition(qi, a, qj);
        }
    }
    return out;
}

ConstructionResult build_h_left(const PrincipalSystem& sys, const Nfa& language) {
    if (sys.side != Side::left)
        throw Error("build_h_left needs a left quasiorder");
    require_preserving(sys, language);
    const auto primes = prime_principals(sys);
    auto out = skeleton(sys, primes);
    Nfa& h = out.automaton;
    const std::size_t eps = sys.class_of(Word{});
    for (std::size_t qi = 0; qi < primes.size(); ++qi) {
        const std::size_t u = primes[qi];
        h.set_initial(qi, sys.in_L[u]);
        h.set_final(qi, sys.leq[u][eps]);
        for (Symbol a = 0; a < h.alphabet().size(); ++a)
            // a·cl(v) ⊆ cl(u) ⇔ u ⪯ av
            for (std::size_t qj = 0; qj < primes.size(); ++qj) {
                const std::size_t av = sys.class_of(concat(Word{a}, sys.reps[primes[qj]].witness));
                if (sys.leq[u][av])
                    h.add_transition(qi, a, qj);
            }
    }
    return out;
}

ConstructionResult f_right(const Nfa& language) {
    return build_h_right(build_nerode(language, Side::right), language);
}

ConstructionResult f_left(const Nfa& language) {
    return build_h_left(build_nerode(language, Side::left), language);
}

ConstructionResult g_right(const Nfa& a) {
    return build_h_right(build_automata_qo(a, Side::right), a);
}

ConstructionResult g_left(const Nfa& a) {
    return build_h_left(build_automata_qo(a, Side::left), a);
}

ConstructionResult denis_residualize(const Nfa& a) {
    const Dfa d = determinize(a);
    const auto& subsets = *d.subset_labels;
    const auto access = d.access_words();
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        StateSet cover(a.size());
        for (std::size_t j = 0; j < subsets.size(); ++j)
            if (j != i && subsets[j].subset_of(subsets[i]))
                cover |= subsets[j];
        if (cover != subsets[i])
            kept.push_back(i);
    }
    ConstructionResult out{Nfa(a.alphabet(), kept.size()), {}};
    std::vector<std::string> names;
    for (std::size_t i : kept) {
        StateProvenance p;
        p.witness = *access[i];
        p.key = d.names[i];
        p.key_set = subsets[i];
        p.origin = i;
        names.push_back(p.key);
        out.provenance.push_back(std::move(p));
    }
    Nfa& r = out.automaton;
    r.set_names(std::move(names));
    for (std::size_t qi = 0; qi < kept.size(); ++qi) {
        const StateSet& s = subsets[kept[qi]];
        r.set_initial(qi, s.subset_of(a.initial()));
        r.set_final(qi, s.intersects(a.final_states()));
        for (Symbol sym = 0; sym < a.alphabet().size(); ++sym) {
            const StateSet img = post(a, s, Word{sym});
            for (std::size_t qj = 0; qj < kept.size(); ++qj)
                if (subsets[kept[qj]].subset_of(img))
                    r.add_transition(qi, sym, qj);
        }
    }
    return out;
}

ConstructionResult canonical_rfa(const Nfa& language) {
    const auto lat = build_lattice(language, Side::right);
    const auto primes = prime_residuals(lat);
    const Dfa& d = lat.min_dfa;
    ConstructionResult out{Nfa(language.alphabet(), primes.size()), {}};
    std::vector<std::string> names;
    for (State p : primes) {
        StateProvenance prov;
        prov.witness = lat.access_word[p];
        prov.key = d.alphabet.format(prov.witness);
        prov.origin = p;
        names.push_back(prov.key);
        out.provenance.push_back(std::move(prov));
    }
    Nfa& c = out.automaton;
    c.set_names(std::move(names));
    for (std::size_t qi = 0; qi < primes.size(); ++qi) {
        const State p = primes[qi];
        c.set_initial(qi, lat.incl[p][d.initial]);
        c.set_final(qi, d.accepting[p]);
        for (Symbol a = 0; a < d.alphabet.size(); ++a)
            for (std::size_t qj = 0; qj < primes.size(); ++qj)
                if (lat.incl[primes[qj]][d.next[p][a]])
                    c.add_transition(qi, a, qj);
    }
    return out;
}

ConstructionResult double_reversal_rfa(const Nfa& a) {
    return g_right(reverse(g_right(reverse(a)).automaton));
}

} // namespace rfa
