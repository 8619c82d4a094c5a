#pragma once

// Reproducible random NFA corpora.
//
// Every sample is drawn from its own SplitMix64 stream (Steele, Lea and
// Flood, 2014) seeded by mixing the corpus seed with the sample index, so
// sample i does not depend on how many samples precede it.

#include <cstdint>
#include <vector>

#include "rfa/automaton.hpp"

namespace rfa {

struct CorpusSpec {
    std::size_t count = 100;
    std::size_t max_states = 6;
    std::size_t alphabet_size = 2;
    double transition_density = 0.25;
    double p_initial = 0.3;
    double p_final = 0.3;
    std::uint64_t seed = 1;

    /// Throws Error on out-of-range fields.
    void validate() const;
};

/// Counter-based SplitMix64 stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Sample `index` of the corpus: 1..max_states states, each transition
/// (q, a, r) present with probability transition_density, at least one
/// initial state.
Nfa random_nfa(const CorpusSpec& spec, std::size_t index);
std::vector<Nfa> random_corpus(const CorpusSpec& spec);

} // namespace rfa
