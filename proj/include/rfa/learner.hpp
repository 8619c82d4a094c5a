#pragma once

// Active learning of the canonical RFA with membership and equivalence
// queries: the row-based NL* learner and its quasiorder reformulation, which
// reasons with the suffix-restricted Nerode quasiorder instead of rows.
// Both share one table, one teacher and one tie-break policy, so their runs
// can be compared step by step.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rfa/automaton.hpp"

namespace rfa {

struct QueryLog {
    struct Entry {
        enum class Kind { membership, equivalence } kind;
        Word word;                   // membership query word
        bool answer = false;         // membership answer
        std::size_t states = 0;      // hypothesis size for equivalence queries
        std::optional<Word> counterexample;
    };
    std::vector<Entry> entries;

    std::size_t membership_count() const;
    std::size_t equivalence_count() const;
    /// `M <word> <0|1>` and `E <states> <counterexample|OK>` lines.
    std::string to_text(const Alphabet& alphabet) const;
};

/// Answers membership queries from a hidden target and equivalence queries
/// with the length-lex-least word of the symmetric difference.
class Teacher {
public:
    explicit Teacher(Nfa target);

    const Alphabet& alphabet() const noexcept { return target_.alphabet(); }
    const Nfa& target() const noexcept { return target_; }
    bool membership(const Word& w);
    std::optional<Word> equivalence(const Nfa& hypothesis);
    const QueryLog& log() const noexcept { return log_; }
    void reset_log() { log_ = {}; }

private:
    Nfa target_;
    QueryLog log_;
};

using Row = std::vector<bool>;

Row join(const Row& r1, const Row& r2);
/// r1 ⊑ r2: every + of r1 is a + of r2.
bool covered(const Row& r1, const Row& r2);

/// Prefix-closed P, suffix-closed S and the membership cache over
/// (P ∪ P·Σ)·S. Insertion order of P and S is preserved.
class ObservationTable {
public:
    explicit ObservationTable(Alphabet alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Word>& prefixes() const noexcept { return prefixes_; }
    const std::vector<Word>& suffixes() const noexcept { return suffixes_; }
    bool in_prefixes(const Word& u) const;
    bool in_suffixes(const Word& x) const;
    /// Adds u and any missing prefixes of u (shortest first).
    bool add_prefix(const Word& u);
    /// Adds x and any missing suffixes of x (shortest first).
    bool add_suffix(const Word& x);

    /// P followed by the words of P·Σ not in P, in scan order.
    std::vector<Word> rows_in_scope() const;
    /// Queries every missing entry of (P ∪ P·Σ)·S, row by row.
    void fill(Teacher& teacher);
    bool complete() const;
    /// Cached membership of w; throws Error when missing.
    bool member(const Word& w) const;
    Row row(const Word& u) const;

private:
    Alphabet alphabet_;
    std::vector<Word> prefixes_;
    std::vector<Word> suffixes_;
    std::map<Word, bool> cache_;
};

/// Fixes how violations are picked when several exist.
struct TieBreakPolicy {
    bool reverse_symbols = false;
    bool operator==(const TieBreakPolicy&) const = default;
};

struct ClosednessViolation {
    Word prefix;
    Symbol symbol = 0;
    bool operator==(const ClosednessViolation&) const = default;
};

struct ConsistencyViolation {
    Word u;
    Word v;
    Symbol symbol = 0;
    Word suffix;
    bool operator==(const ConsistencyViolation&) const = default;
};

// Row view.

/// row(u) differs from the join of the P-rows it strictly covers.
bool is_prime_row(const ObservationTable& t, const Word& u);
std::optional<ClosednessViolation> table_closed(const ObservationTable& t,
                                                const TieBreakPolicy& policy = {});
std::optional<ConsistencyViolation> table_consistent(const ObservationTable& t,
                                                     const TieBreakPolicy& policy = {});
/// Hypothesis over the prime P-rows. Throws Error on a table that is not
/// closed and consistent.
Nfa build_R_table(const ObservationTable& t);

// Quasiorder view: u ⪯ v ⇔ u⁻¹L ∩ S ⊆ v⁻¹L ∩ S.

bool qo_leq_S(const ObservationTable& t, const Word& u, const Word& v);
/// The quotient of u is not, on S, the union of the quotients of the
/// P-words strictly below u.
bool ls_prime_wrt_P(const ObservationTable& t, const Word& u);
std::optional<ClosednessViolation> qo_closed(const ObservationTable& t,
                                             const TieBreakPolicy& policy = {});
std::optional<ConsistencyViolation> qo_consistent(const ObservationTable& t,
                                                  const TieBreakPolicy& policy = {});
Nfa build_R_qo(const ObservationTable& t);

class LearningCapExceeded : public Error {
public:
    using Error::Error;
};

/// Raised by the per-step cross-check when the row and quasiorder views
/// disagree.
class DualViewMismatch : public Error {
public:
    using Error::Error;
};

struct LearnerOptions {
    /// 0 selects 10·(canonical states + longest counterexample + 1)·|Σ|.
    std::size_t max_rounds = 0;
    TieBreakPolicy policy;
    /// Assert at every step that the row and quasiorder views agree.
    bool cross_check = false;
};

struct LearnerStep {
    enum class Kind { add_prefix, add_suffix, equivalence } kind;
    Word word;
    bool operator==(const LearnerStep&) const = default;
};

struct RunResult {
    Nfa hypothesis;
    QueryLog log;
    std::vector<Word> prefixes;
    std::vector<Word> suffixes;
    std::vector<Nfa> hypotheses;
    std::vector<LearnerStep> steps;
    std::size_t iterations = 0;
};

RunResult run_nl_star(Teacher& teacher, const LearnerOptions& options = {});
RunResult run_nl_qo(Teacher& teacher, const LearnerOptions& options = {});

struct RunComparison {
    bool equal = true;
    std::string first_difference;
};

/// Field-by-field comparison: P, S, ordered query logs, equivalence query
/// count and per-step hypothesis isomorphism.
RunComparison compare_runs(const RunResult& r1, const RunResult& r2);

} // namespace rfa
