#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rfa/corpus.hpp"
#include "rfa/language.hpp"
#include "rfa/quasiorder.hpp"

using namespace rfa;
using fixtures::w;

namespace {

std::vector<Nfa> corpus(std::size_t n = 60, std::size_t sigma = 2) {
    CorpusSpec spec;
    spec.count = n;
    spec.max_states = 5;
    spec.alphabet_size = sigma;
    spec.seed = 23;
    return random_corpus(spec);
}

std::set<std::string> cl_upto(const PrincipalSystem& sys, const Nfa& a, const std::string& u,
                              std::size_t k) {
    const Nfa cl = principal_language(sys, sys.class_of(w(a, u)));
    std::set<std::string> out;
    for (const auto& x : oracle::words_upto(a.alphabet().size(), k))
        if (accepts(cl, x))
            out.insert(a.alphabet().format(x));
    return out;
}

} // namespace

TEST(Nerode, Fig2Order) {
    const Nfa a = fixtures::fig2();
    const auto sys = build_nerode(a, Side::right);
    EXPECT_EQ(sys.size(), 6u);
    EXPECT_TRUE(sys.word_leq(w(a, "a"), w(a, "c")));
    EXPECT_FALSE(sys.word_leq(w(a, "c"), w(a, "a")));
    for (std::size_t i = 0; i < sys.size(); ++i)
        EXPECT_TRUE(sys.leq[i][i]);
    const auto all = build_nerode(fixtures::sigma_star(2), Side::right);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_TRUE(language_equiv(principal_language(all, 0), fixtures::sigma_star(2)).holds);
}

TEST(AutomataQo, Fig2Principals) {
    const Nfa a = fixtures::fig2();
    const auto sys = build_automata_qo(a, Side::right);
    std::set<std::string> keys;
    for (std::size_t i = 0; i < sys.size(); ++i)
        keys.insert(sys.key_label(i));
    EXPECT_EQ(keys, (std::set<std::string>{"{0}", "{1,2}", "{1,3}", "{1,2,3,4}", "{5}", "{}"}));
    EXPECT_TRUE(sys.word_leq(w(a, "a"), w(a, "c")));
    const auto empty_key = sys.class_of(w(a, "aaa"));
    for (std::size_t j = 0; j < sys.size(); ++j)
        EXPECT_TRUE(sys.leq[empty_key][j]);

    EXPECT_EQ(cl_upto(sys, a, "ε", 3), (std::set<std::string>{"ε"}));
    EXPECT_EQ(cl_upto(sys, a, "a", 3), (std::set<std::string>{"a", "c"}));
    EXPECT_EQ(cl_upto(sys, a, "b", 3), (std::set<std::string>{"b", "c"}));
    EXPECT_EQ(cl_upto(sys, a, "c", 3), (std::set<std::string>{"c"}));
    EXPECT_EQ(cl_upto(sys, a, "aaa", 3).size(), oracle::words_upto(3, 3).size());

    EXPECT_TRUE(is_L_composite(sys, sys.class_of(w(a, "c"))));
    for (const char* u : {"ε", "a", "b", "aa"})
        EXPECT_FALSE(is_L_composite(sys, sys.class_of(w(a, u)))) << u;
    EXPECT_TRUE(is_L_composite(sys, empty_key));
}

TEST(AutomataQo, MembershipMatchesPostInclusion) {
    const Nfa a = fixtures::fig2();
    const auto sys = build_automata_qo(a, Side::right);
    const auto ws = oracle::words_upto(3, 3);
    for (const auto& u : ws) {
        const Nfa cl = principal_language(sys, sys.class_of(u));
        const auto pu = oracle::post_of(a, u);
        for (const auto& x : ws) {
            const auto px = oracle::post_of(a, x);
            bool sub = true;
            for (State q = 0; q < a.size(); ++q)
                sub = sub && (!pu[q] || px[q]);
            ASSERT_EQ(accepts(cl, x), sub);
        }
    }
}

TEST(Closure, Basics) {
    const Nfa a = fixtures::fig2();
    const auto nerode = build_nerode(a, Side::right);
    EXPECT_TRUE(is_empty(closure_of_regular(nerode, empty_language(a.alphabet()))));
    const Nfa only_a = parse_nfa("alphabet a b c\nstates 2\ninitial 0\nfinal 1\ntrans 0 a 1\n");
    const Nfa cl = closure_of_regular(nerode, only_a);
    EXPECT_TRUE(accepts(cl, w(a, "c")));
    EXPECT_TRUE(accepts(cl, w(a, "a")));
    EXPECT_FALSE(accepts(cl, w(a, "b")));
    const Nfa all = fixtures::sigma_star(3);
    EXPECT_TRUE(language_equiv(closure_of_regular(nerode, all), all).holds);
}

TEST(Closure, WitnessInOwnPrincipal) {
    for (const auto& a : corpus(30))
        for (Side s : {Side::right, Side::left})
            for (const auto& sys : {build_nerode(a, s), build_automata_qo(a, s)})
                for (std::size_t i = 0; i < sys.size(); ++i)
                    ASSERT_TRUE(accepts(principal_language(sys, i), sys.reps[i].witness));
}

TEST(Preservation, AllFourQuasiordersPreserveL) {
    for (const auto& a : corpus(40, 3))
        for (Side s : {Side::right, Side::left}) {
            EXPECT_TRUE(is_L_preserving(build_nerode(a, s), a));
            EXPECT_TRUE(is_L_preserving(build_automata_qo(a, s), a));
        }
}

TEST(Laws, AutomataRefinesNerode) {
    for (const auto& a : corpus()) {
        for (Side s : {Side::right, Side::left}) {
            const auto n = build_automata_qo(a, s);
            const auto l = build_nerode(a, s);
            for (std::size_t i = 0; i < n.size(); ++i)
                for (std::size_t j = 0; j < n.size(); ++j)
                    if (n.leq[i][j])
                        ASSERT_TRUE(l.word_leq(n.reps[i].witness, n.reps[j].witness));
        }
    }
}

TEST(Laws, IntersectionOfLeftLanguages) {
    for (const auto& a : corpus()) {
        const auto n = build_automata_qo(a, Side::right);
        for (std::size_t i = 0; i < n.size(); ++i) {
            Nfa meet = universal_language(a.alphabet());
            for (State q : n.reps[i].key_set->members())
                meet = minimize(determinize(intersection_of(meet, left_language(a, q)))).to_nfa();
            ASSERT_TRUE(language_equiv(principal_language(n, i), meet).holds);
        }
    }
}

TEST(Laws, BrutePrimeCountsAgree) {
    // L-composite flags of the Nerode system match the brute-force
    // residual lattice: a quotient is composite iff it is the union of the
    // quotients strictly inside it.
    for (const auto& a : corpus(30)) {
        const auto l = build_nerode(a, Side::right);
        const auto ws = oracle::words_upto(2, 5);
        for (std::size_t i = 0; i < l.size(); ++i) {
            const auto si = oracle::quotient_signature(a, l.reps[i].witness, ws);
            std::vector<bool> uni(si.size(), false);
            for (std::size_t j = 0; j < l.size(); ++j)
                if (l.strictly_below(j, i)) {
                    const auto sj = oracle::quotient_signature(a, l.reps[j].witness, ws);
                    for (std::size_t k = 0; k < sj.size(); ++k)
                        uni[k] = uni[k] || sj[k];
                }
            EXPECT_EQ(is_L_composite(l, i), uni == si);
        }
    }
}
