#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rfa/constructions.hpp"
#include "rfa/corpus.hpp"
#include "rfa/language.hpp"
#include "rfa/residual_lattice.hpp"

using namespace rfa;
using fixtures::w;

namespace {

State state_of(const ResidualLattice& lat, const Word& u) { return lat.min_dfa.run(u); }

} // namespace

TEST(Lattice, Fig2Residuals) {
    const Nfa a = fixtures::fig2();
    const auto lat = build_lattice(a, Side::right);
    ASSERT_EQ(lat.size(), 6u);
    const State L = state_of(lat, w(a, "ε")), A = state_of(lat, w(a, "a")),
                B = state_of(lat, w(a, "b")), C = state_of(lat, w(a, "c")),
                E = state_of(lat, w(a, "aa")), Z = state_of(lat, w(a, "aaa"));
    EXPECT_EQ((std::set<State>{L, A, B, C, E, Z}).size(), 6u);
    EXPECT_TRUE(lat.strictly_below(A, C));
    EXPECT_TRUE(lat.strictly_below(B, C));
    for (State p = 0; p < lat.size(); ++p)
        if (p != Z)
            EXPECT_TRUE(lat.strictly_below(Z, p));
    EXPECT_FALSE(lat.incl[A][B]);

    // Inclusion agrees with quotient signatures over suffixes of length ≤ 3.
    const auto suffixes = oracle::words_upto(3, 3);
    for (State p = 0; p < lat.size(); ++p)
        for (State q = 0; q < lat.size(); ++q) {
            const auto sp = oracle::quotient_signature(a, lat.access_word[p], suffixes);
            const auto sq = oracle::quotient_signature(a, lat.access_word[q], suffixes);
            bool sub = true;
            for (std::size_t i = 0; i < sp.size(); ++i)
                sub = sub && (!sp[i] || sq[i]);
            EXPECT_EQ(lat.incl[p][q], sub);
        }

    const auto primes = prime_residuals(lat);
    EXPECT_EQ(std::set<State>(primes.begin(), primes.end()), (std::set<State>{L, A, B, E}));
    EXPECT_FALSE(lat.prime[C]);
    EXPECT_FALSE(lat.prime[Z]);
}

TEST(Lattice, SigmaStarAndEpsilon) {
    const auto all = build_lattice(fixtures::sigma_star(2), Side::right);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_TRUE(all.prime[0]);
    EXPECT_TRUE(all.incl[0][0]);

    const auto eps = build_lattice(fixtures::epsilon_only(1), Side::right);
    ASSERT_EQ(eps.size(), 2u);
    const State e = eps.min_dfa.run(Word{}), z = eps.min_dfa.run(Word{0});
    EXPECT_TRUE(eps.prime[e]);
    EXPECT_FALSE(eps.prime[z]);  // ∅ is the empty union
}

TEST(Lattice, LeftSideIsRightSideOfReverse) {
    const Nfa a = fixtures::fig2();
    const auto left = build_lattice(a, Side::left);
    const auto right_rev = build_lattice(reverse(a), Side::right);
    EXPECT_EQ(left.size(), right_rev.size());
    EXPECT_EQ(prime_residuals(left).size(), prime_residuals(right_rev).size());
}

TEST(Classify, Fig2AndCanonical) {
    const Nfa a = fixtures::fig2();
    const auto c = classify(a);
    // Right languages {a}, {b}, {c} of states 1..3 are not quotients of L.
    EXPECT_FALSE(c.is_rfa);
    EXPECT_FALSE(is_rfa(a));
    const auto k = classify(canonical_rfa(a).automaton);
    EXPECT_TRUE(k.is_rfa);
    EXPECT_TRUE(k.is_consistent);
    EXPECT_TRUE(k.is_strongly_consistent);
    const auto all = classify(fixtures::sigma_star(2));
    EXPECT_TRUE(all.is_rfa && all.is_corfa && all.is_consistent && all.is_strongly_consistent);
}

TEST(Classify, RfaFlagAgreesWithEnumeration) {
    CorpusSpec spec;
    spec.count = 60;
    spec.max_states = 4;
    spec.seed = 5;
    for (const auto& a : random_corpus(spec)) {
        const auto ws = oracle::words_upto(2, 6);
        const auto qs = oracle::quotients(a, 6);
        bool rfa_flag = true;
        for (State q = 0; q < a.size(); ++q)
            rfa_flag = rfa_flag && qs.count(oracle::right_signature(a, q, ws)) == 1;
        EXPECT_EQ(is_rfa(a), rfa_flag) << render_nfa(a);
    }
}

TEST(CharacterizingWords, Fig2Canonical) {
    const Nfa a = fixtures::fig2();
    const Nfa c = canonical_rfa(a).automaton;
    for (State q = 0; q < c.size(); ++q) {
        const Nfa chars = characterizing_words(c, q);
        const auto rsig = oracle::right_signature(c, q, oracle::words_upto(3, 3));
        if (rsig == oracle::quotient_signature(a, w(a, "aa"), oracle::words_upto(3, 3))) {
            // {ε} is characterized by exactly the words of L.
            EXPECT_TRUE(language_equiv(chars, a).holds);
        }
        if (c.initial().contains(q) && language_equiv(right_language(c, q), a)) {
            EXPECT_TRUE(language_equiv(chars, epsilon_language(a.alphabet())).holds);
        }
    }
    // State 1 of N accepts {a}, which is no quotient.
    EXPECT_TRUE(is_empty(characterizing_words(a, 1)));
}
