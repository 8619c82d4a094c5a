#include "rfa/corpus.hpp"

namespace rfa {

namespace {

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

void CorpusSpec::validate() const {
    if (max_states == 0)
        throw Error("max_states must be positive");
    if (alphabet_size == 0 || alphabet_size > max_alphabet_size)
        throw Error("alphabet_size must be in 1..16");
    auto prob = [](double p, const char* what) {
        if (!(p >= 0.0 && p <= 1.0))
            throw Error(std::string(what) + " must lie in [0, 1]");
    };
    prob(transition_density, "transition_density");
    prob(p_initial, "p_initial");
    prob(p_final, "p_final");
}

Nfa random_nfa(const CorpusSpec& spec, std::size_t index) {
    spec.validate();
    SplitMix64 rng(spec.seed ^ mix(static_cast<std::uint64_t>(index) + 1));
    const std::size_t n = 1 + rng.below(spec.max_states);
    Nfa a(letters(spec.alphabet_size), n);
    for (State q = 0; q < n; ++q) {
        a.set_initial(q, rng.uniform() < spec.p_initial);
        a.set_final(q, rng.uniform() < spec.p_final);
    }
    if (a.initial().empty())
        a.set_initial(rng.below(n), true);
    for (State q = 0; q < n; ++q)
        for (Symbol s = 0; s < spec.alphabet_size; ++s)
            for (State r = 0; r < n; ++r)
                if (rng.uniform() < spec.transition_density)
                    a.add_transition(q, s, r);
    return a;
}

std::vector<Nfa> random_corpus(const CorpusSpec& spec) {
    std::vector<Nfa> out;
    out.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i)
        out.push_back(random_nfa(spec, i));
    return out;
}

} // namespace rfa
