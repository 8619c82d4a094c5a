// Acceptance suite: one PASS/FAIL line per criterion.
//
//   rfa_acceptance [--fixtures DIR] [--expect-fail N]...
//
// The exit status is 0 when exactly the criteria listed with --expect-fail
// fail, so a known-red criterion stays visible in the output without
// hiding regressions elsewhere (or an unexpected fix).

#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "oracle.hpp"
#include "rfa/canonicity.hpp"
#include "rfa/constructions.hpp"
#include "rfa/corpus.hpp"
#include "rfa/language.hpp"
#include "rfa/learner.hpp"
#include "rfa/nfa_io.hpp"
#include "rfa/quasiorder.hpp"
#include "rfa/residual_lattice.hpp"

using namespace rfa;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Thread-safe failure counter that keeps the first offending sample.
class Tally {
public:
    void fail(const std::string& what, std::size_t index) {
        std::lock_guard lock(m_);
        ++counts_[what];
        if (!first_.count(what))
            first_[what] = index;
    }
    bool clean() const { return counts_.empty(); }
    std::string summary() const {
        std::ostringstream s;
        bool first = true;
        for (const auto& [k, v] : counts_) {
            s << (first ? "" : "; ") << k << ": " << v << " (first #" << first_.at(k) << ")";
            first = false;
        }
        return s.str();
    }

private:
    mutable std::mutex m_;
    std::map<std::string, std::size_t> counts_;
    std::map<std::string, std::size_t> first_;
};

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    const unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                f(i);
        });
    for (auto& t : pool)
        t.join();
}

/// ≥ 500 NFAs with ≤ 6 states over alphabets of size 2 and 3, across
/// several transition densities.
std::vector<Nfa> acceptance_corpus() {
    std::vector<Nfa> out;
    std::uint64_t seed = 20240501;
    for (std::size_t sigma : {2, 3})
        for (double density : {0.15, 0.25, 0.35}) {
            CorpusSpec spec;
            spec.count = 100;
            spec.max_states = 6;
            spec.alphabet_size = sigma;
            spec.transition_density = sigma == 3 ? density * 0.8 : density;
            spec.seed = seed++;
            for (auto& a : random_corpus(spec))
                out.push_back(std::move(a));
        }
    return out;
}

std::set<std::string> names_of(const Nfa& a) {
    return {a.names().begin(), a.names().end()};
}

Nfa prepend_symbol(const Nfa& a, Symbol s) { return reverse(append_symbol(reverse(a), s)); }

// 1 ----------------------------------------------------------------------

Outcome fig2_reproduction(const Nfa& fig2) {
    const auto t0 = Clock::now();
    const Nfa denis = denis_residualize(fig2).automaton;
    const Nfa qo = g_right(fig2).automaton;
    const Nfa canon = canonical_rfa(fig2).automaton;
    const bool keys = names_of(denis) ==
                      std::set<std::string>{"{0}", "{1,2}", "{1,3}", "{1,2,3,4}", "{5}"};
    const bool qo_iso = isomorphic(qo, canon).has_value();
    const bool denis_iso = isomorphic(denis, canon).has_value();
    const double dt = seconds_since(t0);
    Outcome o;
    o.pass = denis.size() == 5 && keys && qo.size() == 4 && qo_iso && !denis_iso && dt < 1.0;
    std::ostringstream s;
    s << "denis=" << denis.size() << (keys ? " (keys ok)" : " (keys differ)") << ", qo=" << qo.size()
      << ", qo≅canonical=" << qo_iso << ", denis≅canonical=" << denis_iso << ", " << dt << " s";
    o.detail = s.str();
    return o;
}

// 2 ----------------------------------------------------------------------

Outcome fig2_principals(const Nfa& fig2) {
    const auto sys = build_automata_qo(fig2, Side::right);
    const Alphabet& sigma = fig2.alphabet();
    const auto words = oracle::words_upto(sigma.size(), 3);
    auto in_L = [&](const Word& w) { return oracle::member(fig2, w); };
    // Expected cl(u) ∩ Σ≤3 from the worked example.
    auto expected = [&](const Word& u) -> std::set<Word> {
        const std::string t = sigma.format(u);
        std::set<Word> out;
        auto add = [&](std::initializer_list<const char*> ws) {
            for (const char* w : ws)
                out.insert(sigma.parse(w));
        };
        if (t == "ε")
            add({"ε"});
        else if (t == "a")
            add({"a", "c"});
        else if (t == "b")
            add({"b", "c"});
        else if (t == "c")
            add({"c"});
        else if (in_L(u))
            for (const auto& w : words)
                if (in_L(w))
                    out.insert(w);
        if (out.empty())  // remaining words have an empty post-set
            out.insert(words.begin(), words.end());
        return out;
    };
    std::size_t mismatches = 0;
    for (const auto& u : words) {
        const Nfa cl = principal_language(sys, sys.class_of(u));
        std::set<Word> got;
        for (const auto& w : words)
            if (accepts(cl, w))
                got.insert(w);
        if (got != expected(u))
            ++mismatches;
    }
    const bool c_composite = is_L_composite(sys, sys.class_of(sigma.parse("c")));
    Outcome o;
    o.pass = mismatches == 0 && c_composite;
    o.detail = std::to_string(words.size()) + " principals checked, " + std::to_string(mismatches) +
               " mismatches, cl(c) L-composite=" + (c_composite ? "yes" : "no");
    return o;
}

// 3, 4, 5, 6, 7, 9: one pass over the corpus ---------------------------

struct CorpusRun {
    Tally preservation, size_embedding, double_reversal, biconditional, laws, duality;
};

void check_laws(const Nfa& a, std::size_t i, CorpusRun& run, std::atomic<std::size_t>& l43) {
    const Symbol sigma = static_cast<Symbol>(a.alphabet().size());
    PrincipalSystem sys[2][2];  // [side][0 = automaton, 1 = Nerode]
    for (Side s : {Side::right, Side::left}) {
        sys[static_cast<int>(s)][0] = build_automata_qo(a, s);
        sys[static_cast<int>(s)][1] = build_nerode(a, s);
    }
    for (int s = 0; s < 2; ++s) {
        const auto& n = sys[s][0];
        const auto& l = sys[s][1];
        // ⪯_N ⊆ ⪯_L
        for (std::size_t p = 0; p < n.size(); ++p)
            for (std::size_t q = 0; q < n.size(); ++q)
                if (n.leq[p][q] && !l.word_leq(n.reps[p].witness, n.reps[q].witness))
                    run.laws.fail("N ⊄ L", i);
        // Finer quasiorder, at least as many L-prime principals.
        std::size_t primes_n = 0, primes_l = 0;
        for (std::size_t p = 0; p < n.size(); ++p)
            primes_n += !is_L_composite(n, p);
        for (std::size_t p = 0; p < l.size(); ++p)
            primes_l += !is_L_composite(l, p);
        if (primes_n < primes_l)
            run.laws.fail("finer quasiorder has fewer primes", i);
        // cl(u)a ⊆ cl(ua), a cl(u) ⊆ cl(au).
        for (const auto* x : {&n, &l})
            for (std::size_t p = 0; p < x->size(); ++p) {
                const Nfa cl = principal_language(*x, p);
                for (Symbol c = 0; c < sigma; ++c) {
                    const Word& u = x->reps[p].witness;
                    const bool right = s == 0;
                    const Word uc = right ? concat(u, Word{c}) : concat(Word{c}, u);
                    const Nfa lhs = right ? append_symbol(cl, c) : prepend_symbol(cl, c);
                    if (!language_includes(lhs, principal_language(*x, x->class_of(uc))))
                        run.laws.fail("principal not closed under concatenation", i);
                }
            }
        // Principals of ⪯_N are intersections of left (right)
        // languages over their key.
        for (std::size_t p = 0; p < n.size(); ++p) {
            Nfa meet = universal_language(a.alphabet());
            for (State q : n.reps[p].key_set->members())
                meet = minimize(determinize(intersection_of(meet, s == 0 ? left_language(a, q) : right_language(a, q)))).to_nfa();
            if (!language_equiv(principal_language(n, p), meet))
                run.laws.fail("automata principal ≠ meet of state languages", i);
        }
    }
    // For ⪯ʳ_L, a composite principal is the intersection of the
    // principals strictly below it.
    const auto& l = sys[0][1];
    for (std::size_t p = 0; p < l.size(); ++p) {
        if (!is_L_composite(l, p))
            continue;
        Nfa meet = universal_language(a.alphabet());
        for (std::size_t q = 0; q < l.size(); ++q)
            if (l.strictly_below(q, p))
                meet = minimize(determinize(intersection_of(meet, principal_language(l, q)))).to_nfa();
        if (!language_equiv(principal_language(l, p), meet))
            run.laws.fail("composite principal ≠ meet below", i);
    }
    // On co-RFAs without empty states, ⪯ʳ_N = ⪯ʳ_L.
    const Nfa co = g_left(a).automaton;
    if (!empty_states(co).empty() || !classify(co).is_corfa) {
        run.laws.fail("Gˡ output not an empty-state-free co-RFA", i);
        return;
    }
    ++l43;
    const auto n = build_automata_qo(co, Side::right);
    const auto lc = build_nerode(co, Side::right);
    for (std::size_t p = 0; p < n.size(); ++p)
        for (std::size_t q = 0; q < n.size(); ++q)
            if (n.leq[p][q] != lc.word_leq(n.reps[p].witness, n.reps[q].witness))
                run.laws.fail("co-RFA: ⪯ʳ_N ≠ ⪯ʳ_L", i);
}

void check_sample(const Nfa& a, std::size_t i, CorpusRun& run, std::atomic<std::size_t>& w52nt,
                  std::atomic<std::size_t>& l43) {
    const Nfa c = canonical_rfa(a).automaton;
    const Nfa gr = g_right(a).automaton, gl = g_left(a).automaton;
    const Nfa fr = f_right(a).automaton, fl = f_left(a).automaton;
    const Nfa nres = denis_residualize(a).automaton;

    // 3
    const std::pair<const char*, const Nfa*> built[] = {{"Fʳ", &fr}, {"Fˡ", &fl}, {"Gʳ", &gr},
                                                        {"Gˡ", &gl}, {"Nʳᵉˢ", &nres}, {"canonical", &c}};
    for (const auto& [name, x] : built) {
        if (!language_equiv(*x, a))
            run.preservation.fail(name, i);
        else if (!oracle::agree_upto(*x, a, 5))
            run.preservation.fail(std::string(name) + " (enumeration oracle)", i);
    }

    // 4
    if (c.size() > gr.size())
        run.size_embedding.fail("|canonical| > |Gʳ|", i);
    if (gr.size() > nres.size())
        run.size_embedding.fail("|Gʳ| > |Nʳᵉˢ|", i);
    if (!embeds_into(gr, nres))
        run.size_embedding.fail("no embedding Gʳ → Nʳᵉˢ", i);

    // 5
    if (!isomorphic(g_right(reverse(g_right(reverse(a)).automaton)).automaton, c))
        run.double_reversal.fail("Gʳ((Gʳ(Nᴿ))ᴿ) ≇ canonical", i);
    if (!isomorphic(g_right(gl).automaton, fr))
        run.double_reversal.fail("Gʳ(Gˡ(N)) ≇ Fʳ(L)", i);

    // 6
    const auto r = check_canonicity(a, false);
    if (r.thm52_holds && !r.gr_is_canonical)
        run.biconditional.fail("thm52 ∧ Gʳ≇C", i);
    if (!r.thm52_holds && r.gr_is_canonical)
        run.biconditional.fail("¬thm52 ∧ Gʳ≅C", i);
    if (r.tamm_holds && !r.nres_is_canonical)
        run.biconditional.fail("tamm ∧ Nʳᵉˢ≇C", i);
    if (!r.tamm_holds && r.nres_is_canonical)
        run.biconditional.fail("¬tamm ∧ Nʳᵉˢ≅C", i);
    if (r.tamm_holds && !r.thm52_holds)
        run.biconditional.fail("tamm ∧ ¬thm52", i);
    if (r.thm52_holds && !r.tamm_holds)
        ++w52nt;

    // 7
    check_laws(a, i, run, l43);

    // 9
    if (!isomorphic(fl, reverse(f_right(reverse(a)).automaton)))
        run.duality.fail("Fˡ(L) ≇ (Fʳ(Lᴿ))ᴿ", i);
    if (!isomorphic(gl, reverse(g_right(reverse(a)).automaton)))
        run.duality.fail("Gˡ(N) ≇ (Gʳ(Nᴿ))ᴿ", i);
}

// 8 ----------------------------------------------------------------------

Outcome learning(const std::vector<Nfa>& corpus, const Nfa& fig2) {
    // Every third sample, so all alphabet sizes and densities take part.
    std::vector<std::size_t> picks;
    for (std::size_t i = 0; i < corpus.size() && picks.size() < 200; i += 3)
        picks.push_back(i);
    Tally t;
    std::atomic<std::size_t> hypotheses{0}, non_rfa{0};
    parallel_for(picks.size(), [&](std::size_t k) {
        const std::size_t i = picks[k];
        const Nfa& a = corpus[i];
        try {
            LearnerOptions opts;
            opts.cross_check = true;
            Teacher t1(a), t2(a);
            const auto r1 = run_nl_star(t1, opts);
            const auto r2 = run_nl_qo(t2, opts);
            if (!compare_runs(r1, r2).equal)
                t.fail("runs differ", i);
            if (!isomorphic(r2.hypothesis, canonical_rfa(a).automaton))
                t.fail("final ≇ canonical", i);
            for (const auto& h : r2.hypotheses) {
                ++hypotheses;
                if (!is_rfa(h))
                    ++non_rfa;
            }
        } catch (const LearningCapExceeded&) {
            t.fail("cap exceeded", i);
        } catch (const DualViewMismatch&) {
            t.fail("row/quasiorder views disagree", i);
        }
    });
    Teacher f1(fig2), f2(fig2);
    const auto r1 = run_nl_star(f1), r2 = run_nl_qo(f2);
    const bool fig_ok = compare_runs(r1, r2).equal && r2.hypothesis.size() == 4 &&
                        isomorphic(r2.hypothesis, canonical_rfa(fig2).automaton);
    Outcome o;
    o.pass = t.clean() && fig_ok && picks.size() >= 200;
    std::ostringstream s;
    s << picks.size() << " languages, fig2 run " << (fig_ok ? "4-state canonical" : "FAILED")
      << ", hypotheses posed " << hypotheses << " (" << non_rfa << " not RFAs)";
    if (!t.clean())
        s << "; " << t.summary();
    o.detail = s.str();
    return o;
}

Outcome from_tally(const Tally& t, const std::string& ok) {
    return {t.clean(), t.clean() ? ok : t.summary()};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::string fixture_dir = RFA_FIXTURE_DIR;
    std::vector<int> expect_fail;
    app.add_option("--fixtures", fixture_dir);
    app.add_option("--expect-fail", expect_fail, "Criteria known to fail");
    CLI11_PARSE(app, argc, argv);

    const Nfa fig2 = load_nfa(fixture_dir + "/fig2.nfa");
    const auto corpus = acceptance_corpus();

    CorpusRun run;
    std::atomic<std::size_t> w52nt{0}, l43{0};
    const auto t0 = Clock::now();
    parallel_for(corpus.size(), [&](std::size_t i) { check_sample(corpus[i], i, run, w52nt, l43); });
    const double corpus_seconds = seconds_since(t0);

    std::vector<std::pair<std::string, Outcome>> results;
    results.emplace_back("fig2 reproduction", fig2_reproduction(fig2));
    results.emplace_back("fig2 principals", fig2_principals(fig2));

    const std::string n = std::to_string(corpus.size()) + " NFAs";
    std::ostringstream timing;
    timing << n << ", " << corpus_seconds << " s for the whole corpus pass (all criteria)";
    Outcome pres = from_tally(run.preservation, timing.str());
    pres.pass = pres.pass && corpus_seconds < 60 && corpus.size() >= 500;
    results.emplace_back("Language preservation", pres);
    results.emplace_back("Size and embedding", from_tally(run.size_embedding, n));
    results.emplace_back("Double reversal", from_tally(run.double_reversal, n));

    const auto fig2_report = check_canonicity(fig2, false);
    const bool fig2_witness = fig2_report.thm52_holds && !fig2_report.tamm_holds;
    Outcome bic = from_tally(run.biconditional, n);
    bic.pass = bic.pass && fig2_witness;
    bic.detail += "; fig2 thm52∧¬tamm=" + std::string(fig2_witness ? "yes" : "no") +
                  ", corpus thm52∧¬tamm=" + std::to_string(w52nt.load());
    results.emplace_back("Biconditionals", bic);

    Outcome laws = from_tally(run.laws, n);
    laws.detail += ", co-RFA Nerode equality on " + std::to_string(l43.load()) + " Gˡ outputs";
    results.emplace_back("Quasiorder laws", laws);
    results.emplace_back("Learning", learning(corpus, fig2));
    results.emplace_back("Duality", from_tally(run.duality, n));

    std::set<int> failed;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& [name, o] = results[i];
        std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << name << " — "
                  << o.detail << '\n';
        if (!o.pass)
            failed.insert(static_cast<int>(i + 1));
    }
    const std::set<int> expected(expect_fail.begin(), expect_fail.end());
    std::cout << results.size() - failed.size() << "/" << results.size() << " criteria pass";
    if (!expected.empty()) {
        std::cout << " (expected to fail:";
        for (int e : expected)
            std::cout << ' ' << e;
        std::cout << ")";
    }
    std::cout << '\n';
    return failed == expected ? 0 : 1;
}
