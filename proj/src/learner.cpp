#include "rfa/learner.hpp"

#include <algorithm>
#include <sstream>

#include "rfa/constructions.hpp"
#include "rfa/language.hpp"

namespace rfa {

std::size_t QueryLog::membership_count() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const Entry& e) {
        return e.kind == Entry::Kind::membership;
    }));
}

std::size_t QueryLog::equivalence_count() const { return entries.size() - membership_count(); }

std::string QueryLog::to_text(const Alphabet& alphabet) const {
    std::ostringstream out;
    for (const auto& e : entries) {
        if (e.kind == Entry::Kind::membership)
            out << "M " << alphabet.format(e.word) << ' ' << (e.answer ? 1 : 0) << '\n';
        else
            out << "E " << e.states << ' '
                << (e.counterexample ? alphabet.format(*e.counterexample) : std::string("OK"))
                << '\n';
    }
    return out.str();
}

Teacher::Teacher(Nfa target) : target_(std::move(target)) {}

bool Teacher::membership(const Word& w) {
    const bool answer = accepts(target_, w);
    log_.entries.push_back({QueryLog::Entry::Kind::membership, w, answer, 0, std::nullopt});
    return answer;
}

std::optional<Word> Teacher::equivalence(const Nfa& hypothesis) {
    auto verdict = language_equiv(hypothesis, target_);
    log_.entries.push_back(
        {QueryLog::Entry::Kind::equivalence, {}, false, hypothesis.size(), verdict.witness});
    return verdict.witness;
}

Row join(const Row& r1, const Row& r2) {
    if (r1.size() != r2.size())
        throw Error("rows over different suffix sets");
    Row out(r1.size());
    for (std::size_t i = 0; i < r1.size(); ++i)
        out[i] = r1[i] || r2[i];
    return out;
}

bool covered(const Row& r1, const Row& r2) {
    if (r1.size() != r2.size())
        throw Error("rows over different suffix sets");
    for (std::size_t i = 0; i < r1.size(); ++i)
        if (r1[i] && !r2[i])
            return false;
    return true;
}

// ObservationTable

ObservationTable::ObservationTable(Alphabet alphabet)
    : alphabet_(std::move(alphabet)), prefixes_{Word{}}, suffixes_{Word{}} {}

bool ObservationTable::in_prefixes(const Word& u) const {
    return std::find(prefixes_.begin(), prefixes_.end(), u) != prefixes_.end();
}

bool ObservationTable::in_suffixes(const Word& x) const {
    return std::find(suffixes_.begin(), suffixes_.end(), x) != suffixes_.end();
}

bool ObservationTable::add_prefix(const Word& u) {
    bool added = false;
    for (std::size_t len = 0; len <= u.size(); ++len) {
        Word p(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(len));
        if (!in_prefixes(p)) {
            prefixes_.push_back(std::move(p));
            added = true;
        }
    }
    return added;
}

bool ObservationTable::add_suffix(const Word& x) {
    bool added = false;
    for (std::size_t len = 0; len <= x.size(); ++len) {
        Word s(x.end() - static_cast<std::ptrdiff_t>(len), x.end());
        if (!in_suffixes(s)) {
            suffixes_.push_back(std::move(s));
            added = true;
        }
    }
    return added;
}

std::vector<Word> ObservationTable::rows_in_scope() const {
    std::vector<Word> out = prefixes_;
    for (const auto& u : prefixes_)
        for (Symbol a = 0; a < alphabet_.size(); ++a) {
            Word ua = concat(u, Word{a});
            if (!in_prefixes(ua) && std::find(out.begin(), out.end(), ua) == out.end())
                out.push_back(std::move(ua));
        }
    return out;
}

void ObservationTable::fill(Teacher& teacher) {
    for (const auto& u : rows_in_scope())
        for (const auto& x : suffixes_) {
            Word w = concat(u, x);
            if (!cache_.contains(w)) {
                const bool answer = teacher.membership(w);
                cache_.emplace(std::move(w), answer);
            }
        }
}

bool ObservationTable::complete() const {
    for (const auto& u : rows_in_scope())
        for (const auto& x : suffixes_)
            if (!cache_.contains(concat(u, x)))
                return false;
    return true;
}

bool ObservationTable::member(const Word& w) const {
    auto it = cache_.find(w);
    if (it == cache_.end())
        throw Error("membership of '" + alphabet_.format(w) + "' not in the table");
    return it->second;
}

Row ObservationTable::row(const Word& u) const {
    Row r;
    r.reserve(suffixes_.size());
    for (const auto& x : suffixes_)
        r.push_back(member(concat(u, x)));
    return r;
}

namespace {

std::vector<Symbol> symbol_order(const Alphabet& alphabet, const TieBreakPolicy& policy) {
    std::vector<Symbol> order;
    for (Symbol a = 0; a < alphabet.size(); ++a)
        order.push_back(a);
    if (policy.reverse_symbols)
        std::reverse(order.begin(), order.end());
    return order;
}

} // namespace

// Row view

bool is_prime_row(const ObservationTable& t, const Word& u) {
    const Row r = t.row(u);
    Row acc(r.size(), false);
    for (const auto& v : t.prefixes()) {
        const Row rv = t.row(v);
        if (rv != r && covered(rv, r))
            acc = join(acc, rv);
    }
    return acc != r;
}

std::optional<ClosednessViolation> table_closed(const ObservationTable& t,
                                                const TieBreakPolicy& policy) {
    std::vector<Row> prime_rows;
    for (const auto& v : t.prefixes())
        if (is_prime_row(t, v))
            prime_rows.push_back(t.row(v));
    for (const auto& u : t.prefixes())
        for (Symbol a : symbol_order(t.alphabet(), policy)) {
            const Row target = t.row(concat(u, Word{a}));
            Row acc(target.size(), false);
            for (const auto& rv : prime_rows)
                if (covered(rv, target))
                    acc = join(acc, rv);
            if (acc != target)
                return ClosednessViolation{u, a};
        }
    return std::nullopt;
}

std::optional<ConsistencyViolation> table_consistent(const ObservationTable& t,
                                                     const TieBreakPolicy& policy) {
    const auto& suffixes = t.suffixes();
    for (const auto& u : t.prefixes())
        for (const auto& v : t.prefixes()) {
            if (!covered(t.row(u), t.row(v)))
                continue;
            for (Symbol a : symbol_order(t.alphabet(), policy)) {
                const Row ru = t.row(concat(u, Word{a}));
                const Row rv = t.row(concat(v, Word{a}));
                for (std::size_t i = 0; i < suffixes.size(); ++i)
                    if (ru[i] && !rv[i])
                        return ConsistencyViolation{u, v, a, suffixes[i]};
            }
        }
    return std::nullopt;
}

Nfa build_R_table(const ObservationTable& t) {
    if (table_closed(t) || table_consistent(t))
        throw Error("R(T) needs a closed and consistent table");
    std::vector<Word> reps;
    std::vector<Row> rows;
    for (const auto& u : t.prefixes()) {
        Row r = t.row(u);
        if (is_prime_row(t, u) && std::find(rows.begin(), rows.end(), r) == rows.end()) {
            reps.push_back(u);
            rows.push_back(std::move(r));
        }
    }
    Nfa h(t.alphabet(), reps.size());
    std::vector<std::string> names;
    for (const auto& u : reps)
        names.push_back(t.alphabet().format(u));
    h.set_names(std::move(names));
    const Row eps = t.row(Word{});
    // suffixes()[0] is ε
    for (std::size_t i = 0; i < reps.size(); ++i) {
        h.set_initial(i, covered(rows[i], eps));
        h.set_final(i, rows[i][0]);
        for (Symbol a = 0; a < t.alphabet().size(); ++a) {
            const Row ua = t.row(concat(reps[i], Word{a}));
            for (std::size_t j = 0; j < reps.size(); ++j)
                if (covered(rows[j], ua))
                    h.add_transition(i, a, j);
        }
    }
    return h;
}

// Quasiorder view

bool qo_leq_S(const ObservationTable& t, const Word& u, const Word& v) {
    for (const auto& x : t.suffixes())
        if (t.member(concat(u, x)) && !t.member(concat(v, x)))
            return false;
    return true;
}

namespace {

bool qo_equiv_S(const ObservationTable& t, const Word& u, const Word& v) {
    return qo_leq_S(t, u, v) && qo_leq_S(t, v, u);
}

bool qo_strictly_below(const ObservationTable& t, const Word& x, const Word& u) {
    return qo_leq_S(t, x, u) && !qo_leq_S(t, u, x);
}

} // namespace

bool ls_prime_wrt_P(const ObservationTable& t, const Word& u) {
    std::vector<const Word*> below;
    for (const auto& x : t.prefixes())
        if (qo_strictly_below(t, x, u))
            below.push_back(&x);
    for (const auto& s : t.suffixes()) {
        bool in_union = false;
        for (const Word* x : below)
            if (t.member(concat(*x, s))) {
                in_union = true;
                break;
            }
        if (t.member(concat(u, s)) != in_union)
            return true;
    }
    return false;
}

std::optional<ClosednessViolation> qo_closed(const ObservationTable& t,
                                             const TieBreakPolicy& policy) {
    for (const auto& u : t.prefixes())
        for (Symbol a : symbol_order(t.alphabet(), policy)) {
            const Word ua = concat(u, Word{a});
            if (!ls_prime_wrt_P(t, ua))
                continue;
            const bool matched = std::any_of(t.prefixes().begin(), t.prefixes().end(),
                                             [&](const Word& v) { return qo_equiv_S(t, ua, v); });
            if (!matched)
                return ClosednessViolation{u, a};
        }
    return std::nullopt;
}

std::optional<ConsistencyViolation> qo_consistent(const ObservationTable& t,
                                                  const TieBreakPolicy& policy) {
    for (const auto& u : t.prefixes())
        for (const auto& v : t.prefixes()) {
            if (!qo_leq_S(t, u, v))
                continue;
            for (Symbol a : symbol_order(t.alphabet(), policy)) {
                const Word ua = concat(u, Word{a});
                const Word va = concat(v, Word{a});
                if (qo_leq_S(t, ua, va))
                    continue;
                for (const auto& x : t.suffixes())
                    if (t.member(concat(ua, x)) && !t.member(concat(va, x)))
                        return ConsistencyViolation{u, v, a, x};
            }
        }
    return std::nullopt;
}

Nfa build_R_qo(const ObservationTable& t) {
    if (qo_closed(t) || qo_consistent(t))
        throw Error("R(⪯, P) needs a closed and consistent quasiorder");
    std::vector<Word> reps;
    for (const auto& u : t.prefixes()) {
        if (!ls_prime_wrt_P(t, u))
            continue;
        const bool seen = std::any_of(reps.begin(), reps.end(),
                                      [&](const Word& r) { return qo_equiv_S(t, r, u); });
        if (!seen)
            reps.push_back(u);
    }
    Nfa h(t.alphabet(), reps.size());
    std::vector<std::string> names;
    for (const auto& u : reps)
        names.push_back(t.alphabet().format(u));
    h.set_names(std::move(names));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        // ε ∈ cl(u) ⇔ u ⪯ ε
        h.set_initial(i, qo_leq_S(t, reps[i], Word{}));
        h.set_final(i, t.member(reps[i]));
        for (Symbol a = 0; a < t.alphabet().size(); ++a) {
            // cl(u)·a ⊆ cl(v) ⇔ v ⪯ ua
            const Word ua = concat(reps[i], Word{a});
            for (std::size_t j = 0; j < reps.size(); ++j)
                if (qo_leq_S(t, reps[j], ua))
                    h.add_transition(i, a, j);
        }
    }
    return h;
}

// Runs

namespace {

struct RowView {
    static std::optional<ClosednessViolation> closed(const ObservationTable& t,
                                                     const TieBreakPolicy& p) {
        return table_closed(t, p);
    }
    static std::optional<ConsistencyViolation> consistent(const ObservationTable& t,
                                                          const TieBreakPolicy& p) {
        return table_consistent(t, p);
    }
    static Nfa hypothesis(const ObservationTable& t) { return build_R_table(t); }
};

struct QuasiorderView {
    static std::optional<ClosednessViolation> closed(const ObservationTable& t,
                                                     const TieBreakPolicy& p) {
        return qo_closed(t, p);
    }
    static std::optional<ConsistencyViolation> consistent(const ObservationTable& t,
                                                          const TieBreakPolicy& p) {
        return qo_consistent(t, p);
    }
    static Nfa hypothesis(const ObservationTable& t) { return build_R_qo(t); }
};

void cross_check(const ObservationTable& t, const TieBreakPolicy& policy) {
    const auto words = t.rows_in_scope();
    for (const auto& u : words) {
        for (const auto& v : words)
            if (qo_leq_S(t, u, v) != covered(t.row(u), t.row(v)))
                throw DualViewMismatch("⪯_S and row covering disagree on (" +
                                       t.alphabet().format(u) + ", " + t.alphabet().format(v) +
                                       ")");
        if (ls_prime_wrt_P(t, u) != is_prime_row(t, u))
            throw DualViewMismatch("prime principal and prime row disagree on " +
                                   t.alphabet().format(u));
    }
    if (qo_closed(t, policy) != table_closed(t, policy))
        throw DualViewMismatch("closedness views disagree");
    if (qo_consistent(t, policy) != table_consistent(t, policy))
        throw DualViewMismatch("consistency views disagree");
}

std::size_t default_cap(const Teacher& teacher, std::size_t longest_cex) {
    const std::size_t canonical = canonical_rfa(teacher.target()).automaton.size();
    return 10 * (canonical + longest_cex + 1) * teacher.alphabet().size();
}

template <typename View>
RunResult run(Teacher& teacher, const LearnerOptions& options) {
    teacher.reset_log();
    ObservationTable t(teacher.alphabet());
    RunResult result;
    std::size_t rounds = 0;
    std::size_t longest_cex = 0;
    auto tick = [&] {
        ++rounds;
        const std::size_t cap =
            options.max_rounds != 0 ? options.max_rounds : default_cap(teacher, longest_cex);
        if (rounds > cap)
            throw LearningCapExceeded("learner exceeded " + std::to_string(cap) + " rounds");
    };

    t.fill(teacher);
    while (true) {
        ++result.iterations;
        while (true) {
            if (options.cross_check)
                cross_check(t, options.policy);
            bool repaired = false;
            if (auto c = View::closed(t, options.policy)) {
                Word ua = concat(c->prefix, Word{c->symbol});
                t.add_prefix(ua);
                result.steps.push_back({LearnerStep::Kind::add_prefix, ua});
                t.fill(teacher);
                repaired = true;
                tick();
                if (options.cross_check)
                    cross_check(t, options.policy);
            }
            if (auto c = View::consistent(t, options.policy)) {
                Word ax = concat(Word{c->symbol}, c->suffix);
                t.add_suffix(ax);
                result.steps.push_back({LearnerStep::Kind::add_suffix, ax});
                t.fill(teacher);
                repaired = true;
                tick();
            }
            if (!repaired)
                break;
        }
        Nfa h = View::hypothesis(t);
        if (options.cross_check) {
            Nfa other = std::is_same_v<View, RowView> ? build_R_qo(t) : build_R_table(t);
            if (!isomorphic(h, other))
                throw DualViewMismatch("R(T) and R(⪯, P) are not isomorphic");
        }
        result.hypotheses.push_back(h);
        result.steps.push_back({LearnerStep::Kind::equivalence, {}});
        auto cex = teacher.equivalence(h);
        tick();
        if (!cex) {
            result.hypothesis = std::move(h);
            break;
        }
        longest_cex = std::max(longest_cex, cex->size());
        for (std::size_t len = 0; len <= cex->size(); ++len) {
            Word x(cex->end() - static_cast<std::ptrdiff_t>(len), cex->end());
            if (!t.in_suffixes(x)) {
                t.add_suffix(x);
                result.steps.push_back({LearnerStep::Kind::add_suffix, x});
            }
        }
        t.fill(teacher);
    }
    result.log = teacher.log();
    result.prefixes = t.prefixes();
    result.suffixes = t.suffixes();
    return result;
}

} // namespace

RunResult run_nl_star(Teacher& teacher, const LearnerOptions& options) {
    return run<RowView>(teacher, options);
}

RunResult run_nl_qo(Teacher& teacher, const LearnerOptions& options) {
    return run<QuasiorderView>(teacher, options);
}

RunComparison compare_runs(const RunResult& r1, const RunResult& r2) {
    auto differ = [](std::string what) { return RunComparison{false, std::move(what)}; };
    const std::size_t steps = std::min(r1.steps.size(), r2.steps.size());
    for (std::size_t i = 0; i < steps; ++i)
        if (!(r1.steps[i] == r2.steps[i]))
            return differ("step " + std::to_string(i) + " differs");
    if (r1.steps.size() != r2.steps.size())
        return differ("step count " + std::to_string(r1.steps.size()) + " vs " +
                      std::to_string(r2.steps.size()));
    if (r1.prefixes != r2.prefixes)
        return differ("prefix sets differ");
    if (r1.suffixes != r2.suffixes)
        return differ("suffix sets differ");
    const auto& e1 = r1.log.entries;
    const auto& e2 = r2.log.entries;
    for (std::size_t i = 0; i < std::min(e1.size(), e2.size()); ++i) {
        const auto& a = e1[i];
        const auto& b = e2[i];
        if (a.kind != b.kind || a.word != b.word || a.answer != b.answer || a.states != b.states ||
            a.counterexample != b.counterexample)
            return differ("query " + std::to_string(i) + " differs");
    }
    if (e1.size() != e2.size())
        return differ("query count " + std::to_string(e1.size()) + " vs " +
                      std::to_string(e2.size()));
    if (r1.log.equivalence_count() != r2.log.equivalence_count())
        return differ("equivalence query counts differ");
    if (r1.hypotheses.size() != r2.hypotheses.size())
        return differ("hypothesis counts differ");
    for (std::size_t i = 0; i < r1.hypotheses.size(); ++i)
        if (!isomorphic(r1.hypotheses[i], r2.hypotheses[i]))
            return differ("hypothesis " + std::to_string(i) + " not isomorphic");
    return {};
}

} // namespace rfa
