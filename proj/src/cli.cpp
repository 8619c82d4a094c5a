#include "rfa/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rfa/canonicity.hpp"
#include "rfa/constructions.hpp"
#include "rfa/corpus.hpp"
#include "rfa/language.hpp"
#include "rfa/learner.hpp"
#include "rfa/nfa_io.hpp"
#include "rfa/residual_lattice.hpp"

namespace rfa {

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

std::string word_text(const Alphabet& a, const std::optional<Word>& w) {
    return w ? a.format(*w) : std::string();
}

json mapping_json(const Nfa& from, const Nfa& to, const std::vector<State>& m) {
    json j = json::object();
    for (State q = 0; q < m.size(); ++q)
        j[from.name(q)] = to.name(m[q]);
    return j;
}

// Runs f(i) for i in [0, n) on `threads` workers; results are stored by
// index, so output order does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F f) {
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

json analyze(const Nfa& a) {
    const auto report = check_canonicity(a, false);
    json j;
    j["states"] = a.size();
    j["transitions"] = a.transition_count();
    j["empty_language"] = is_empty(a);
    j["canonical_states"] = report.canonical_states;
    j["gr_states"] = report.gr_states;
    j["nres_states"] = report.nres_states;
    j["thm52_holds"] = report.thm52_holds;
    j["tamm_holds"] = report.tamm_holds;
    j["gr_is_canonical"] = report.gr_is_canonical;
    j["nres_is_canonical"] = report.nres_is_canonical;
    return j;
}

struct LearnOutcome {
    RunResult run;
    bool canonical = false;
};

LearnOutcome learn_once(const Nfa& target, bool qo, const LearnerOptions& opts) {
    Teacher teacher(target);
    LearnOutcome o{qo ? run_nl_qo(teacher, opts) : run_nl_star(teacher, opts), false};
    o.canonical = isomorphic(o.run.hypothesis, canonical_rfa(target).automaton).has_value();
    return o;
}

json run_json(const Alphabet& sigma, const LearnOutcome& o) {
    json j;
    j["states"] = o.run.hypothesis.size();
    j["membership_queries"] = o.run.log.membership_count();
    j["equivalence_queries"] = o.run.log.equivalence_count();
    j["iterations"] = o.run.iterations;
    j["isomorphic_to_canonical"] = o.canonical;
    json p = json::array(), s = json::array();
    for (const auto& w : o.run.prefixes)
        p.push_back(sigma.format(w));
    for (const auto& w : o.run.suffixes)
        s.push_back(sigma.format(w));
    j["prefixes"] = p;
    j["suffixes"] = s;
    j["hypothesis"] = render_nfa(o.run.hypothesis);
    return j;
}

bool write_text(const std::string& path, const std::string& text, std::ostream& err) {
    std::ofstream f(path);
    if (!f) {
        err << "error: cannot write " << path << '\n';
        return false;
    }
    f << text;
    return true;
}

} // namespace

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Residual finite-state automata toolkit", "rfa"};
    app.require_subcommand(1);

    std::string file, file2, method = "qo", side = "right", require;
    auto* info = app.add_subcommand("info", "Summarize an automaton as JSON");
    info->add_option("file", file, "Input .nfa file")->required();

    auto* resid = app.add_subcommand("residualize", "Residualize an automaton");
    resid->add_option("file", file, "Input .nfa file")->required();
    resid->add_option("--method", method, "qo (quasiorder-based) or denis")
        ->check(CLI::IsMember({"qo", "denis"}));
    resid->add_option("--side", side, "right (RFA) or left (co-RFA), qo method only")
        ->check(CLI::IsMember({"right", "left"}));

    auto* canon = app.add_subcommand("canonical", "Canonical RFA of the language");
    canon->add_option("file", file, "Input .nfa file")->required();

    auto* dr = app.add_subcommand("double-reversal", "Residualize, reverse, residualize, reverse");
    dr->add_option("file", file, "Input .nfa file")->required();

    auto* check = app.add_subcommand("check", "Canonicity conditions as JSON");
    check->add_option("file", file, "Input .nfa file")->required();
    check->add_option("--require-canonical", require, "Exit 1 unless gr or nres is canonical")
        ->check(CLI::IsMember({"gr", "nres"}));

    std::string target, algorithm = "both", log_path;
    std::size_t max_rounds = 0;
    auto* learn = app.add_subcommand("learn", "Learn the canonical RFA of a target");
    learn->add_option("--target", target, "Target .nfa file")->required();
    learn->add_option("--algorithm", algorithm, "nl-star, nl-qo or both")
        ->check(CLI::IsMember({"nl-star", "nl-qo", "both"}));
    learn->add_option("--max-rounds", max_rounds, "Iteration cap (0 = default)");
    learn->add_option("--log", log_path, "Write the query log here");

    auto* equiv = app.add_subcommand("equiv", "Language equivalence");
    equiv->add_option("a", file, "First .nfa file")->required();
    equiv->add_option("b", file2, "Second .nfa file")->required();

    auto* iso = app.add_subcommand("iso", "Automaton isomorphism");
    iso->add_option("a", file, "First .nfa file")->required();
    iso->add_option("b", file2, "Second .nfa file")->required();

    CorpusSpec spec;
    std::string out_dir;
    bool do_analyze = false;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    auto* random = app.add_subcommand("random", "Generate a random NFA corpus");
    random->add_option("--count", spec.count);
    random->add_option("--max-states", spec.max_states);
    random->add_option("--alphabet-size", spec.alphabet_size);
    random->add_option("--density", spec.transition_density);
    random->add_option("--p-initial", spec.p_initial);
    random->add_option("--p-final", spec.p_final);
    random->add_option("--seed", spec.seed);
    random->add_option("--out-dir", out_dir, "Write sample_NNNN.nfa files here");
    random->add_flag("--analyze", do_analyze, "Report canonicity per sample as JSON");
    random->add_option("--jobs", jobs, "Worker threads for --analyze");

    auto* dot = app.add_subcommand("dot", "Graphviz rendering");
    dot->add_option("file", file, "Input .nfa file")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*info) {
            const Nfa a = load_nfa(file);
            const auto c = classify(a);
            json j;
            j["alphabet"] = a.alphabet().tokens();
            j["states"] = a.size();
            j["transitions"] = a.transition_count();
            j["initial"] = a.initial().count();
            j["final"] = a.final_states().count();
            j["empty_language"] = is_empty(a);
            j["is_rfa"] = c.is_rfa;
            j["is_corfa"] = c.is_corfa;
            j["is_consistent"] = c.is_consistent;
            j["is_strongly_consistent"] = c.is_strongly_consistent;
            j["residuals"] = build_lattice(a, Side::right).size();
            j["canonical_states"] = canonical_rfa(a).automaton.size();
            out << j.dump(2) << '\n';
            return exit_ok;
        }
        if (*resid) {
            const Nfa a = load_nfa(file);
            const auto r = method == "denis" ? denis_residualize(a)
                           : side == "left"  ? g_left(a)
                                             : g_right(a);
            out << render_nfa(r.automaton);
            return exit_ok;
        }
        if (*canon) {
            out << render_nfa(canonical_rfa(load_nfa(file)).automaton);
            return exit_ok;
        }
        if (*dr) {
            out << render_nfa(double_reversal_rfa(load_nfa(file)).automaton);
            return exit_ok;
        }
        if (*check) {
            const auto r = check_canonicity(load_nfa(file), false);
            out << r.to_json() << '\n';
            if (require == "gr" && !r.gr_is_canonical)
                return exit_false;
            if (require == "nres" && !r.nres_is_canonical)
                return exit_false;
            return exit_ok;
        }
        if (*learn) {
            const Nfa t = load_nfa(target);
            LearnerOptions opts;
            opts.max_rounds = max_rounds;
            const Alphabet& sigma = t.alphabet();
            json j;
            std::string log_text;
            bool ok = true;
            std::optional<LearnOutcome> star, qo;
            if (algorithm != "nl-qo") {
                star = learn_once(t, false, opts);
                j["nl_star"] = run_json(sigma, *star);
                log_text = star->run.log.to_text(sigma);
                ok = ok && star->canonical;
            }
            if (algorithm != "nl-star") {
                qo = learn_once(t, true, opts);
                j["nl_qo"] = run_json(sigma, *qo);
                if (log_text.empty())
                    log_text = qo->run.log.to_text(sigma);
                ok = ok && qo->canonical;
            }
            if (star && qo) {
                const auto cmp = compare_runs(star->run, qo->run);
                j["runs_equal"] = cmp.equal;
                if (!cmp.equal)
                    j["first_difference"] = cmp.first_difference;
                ok = ok && cmp.equal;
            }
            if (!log_path.empty() && !write_text(log_path, log_text, err))
                return exit_internal;
            out << j.dump(2) << '\n';
            return ok ? exit_ok : exit_false;
        }
        if (*equiv) {
            const Nfa a = load_nfa(file), b = load_nfa(file2);
            const auto v = language_equiv(a, b);
            json j;
            j["equivalent"] = v.holds;
            if (!v.holds)
                j["witness"] = word_text(a.alphabet(), v.witness);
            out << j.dump(2) << '\n';
            return v.holds ? exit_ok : exit_false;
        }
        if (*iso) {
            const Nfa a = load_nfa(file), b = load_nfa(file2);
            const auto m = isomorphic(a, b);
            json j;
            j["isomorphic"] = m.has_value();
            if (m)
                j["mapping"] = mapping_json(a, b, *m);
            out << j.dump(2) << '\n';
            return m ? exit_ok : exit_false;
        }
        if (*random) {
            spec.validate();
            const auto corpus = random_corpus(spec);
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                for (std::size_t i = 0; i < corpus.size(); ++i) {
                    std::ostringstream name;
                    name << "sample_" << std::setw(4) << std::setfill('0') << i << ".nfa";
                    if (!write_text((std::filesystem::path(out_dir) / name.str()).string(),
                                    render_nfa(corpus[i]), err))
                        return exit_internal;
                }
            }
            if (do_analyze) {
                std::vector<json> rows(corpus.size());
                parallel_for(corpus.size(), jobs, [&](std::size_t i) {
                    rows[i] = analyze(corpus[i]);
                    rows[i]["index"] = i;
                });
                json j = json::array();
                for (auto& r : rows)
                    j.push_back(std::move(r));
                out << j.dump(2) << '\n';
            } else if (out_dir.empty()) {
                for (std::size_t i = 0; i < corpus.size(); ++i)
                    out << "# sample " << i << '\n' << render_nfa(corpus[i]);
            }
            return exit_ok;
        }
        if (*dot) {
            out << to_dot(load_nfa(file));
            return exit_ok;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const LearningCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_internal;
    } catch (const Error& e) {
        // Invalid input files and out-of-range options.
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}

} // namespace rfa
