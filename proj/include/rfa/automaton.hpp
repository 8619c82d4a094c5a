#pragma once

// Core automaton types: alphabets, words, state sets and NFAs/DFAs.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rfa {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Symbol = std::uint8_t;
using State = std::size_t;

/// A word is a finite sequence of symbol indices; the empty vector is ε.
using Word = std::vector<Symbol>;

inline constexpr std::size_t max_alphabet_size = 16;

/// Finite nonempty alphabet of distinct tokens. Declaration order defines
/// the length-lexicographic order on words.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const noexcept { return tokens_.size(); }
    const std::string& token(Symbol a) const { return tokens_.at(a); }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }
    std::optional<Symbol> find(std::string_view token) const;

    /// Renders a word; tokens are concatenated when all are one character
    /// long, otherwise joined with '.'. ε renders as "ε".
    std::string format(std::span<const Symbol> w) const;
    /// Inverse of format(). Throws Error on unknown tokens.
    Word parse(std::string_view text) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> tokens_;
};

/// Alphabet {a, b, c, ...} with the given number of letters.
Alphabet letters(std::size_t count);

Word reversed(Word w);
Word concat(const Word& u, const Word& v);
/// Length-lexicographic order (shorter first, then by symbol index).
bool length_lex_less(const Word& u, const Word& v);

/// Subset of the states {0..n-1} of one automaton.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe);
    StateSet(std::size_t universe, std::initializer_list<State> members);

    static StateSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    bool contains(State q) const;
    void insert(State q);
    void erase(State q);
    bool empty() const noexcept;
    std::size_t count() const noexcept;
    std::vector<State> members() const;

    bool subset_of(const StateSet& other) const;
    bool intersects(const StateSet& other) const;
    StateSet& operator|=(const StateSet& other);
    StateSet& operator&=(const StateSet& other);
    friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
    friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

    auto operator<=>(const StateSet&) const = default;
    bool operator==(const StateSet&) const = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Nondeterministic finite automaton (Q, Σ, δ, I, F) with a total transition
/// map into state sets.
class Nfa {
public:
    Nfa() = default;
    /// n states named "0".."n-1", no initial/final states and no transitions.
    Nfa(Alphabet alphabet, std::size_t n);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(State q) const { return names_.at(q); }
    const StateSet& initial() const noexcept { return initial_; }
    const StateSet& final_states() const noexcept { return final_; }
    const StateSet& successors(State q, Symbol a) const { return delta_.at(q).at(a); }
    std::size_t transition_count() const;

    void set_names(std::vector<std::string> names);
    void set_initial(StateSet s);
    void set_final(StateSet s);
    void set_initial(State q, bool on);
    void set_final(State q, bool on);
    void add_transition(State src, Symbol a, State dst);

    /// Appends a fresh state and returns its index.
    State add_state(std::string name);

    StateSet empty_set() const { return StateSet(size()); }

private:
    Alphabet alphabet_;
    std::vector<std::string> names_;
    StateSet initial_;
    StateSet final_;
    std::vector<std::vector<StateSet>> delta_;
};

/// Complete deterministic automaton. State 0 is not necessarily initial.
struct Dfa {
    Alphabet alphabet;
    std::vector<std::string> names;
    State initial = 0;
    std::vector<bool> accepting;
    std::vector<std::vector<State>> next;
    /// Source-NFA subset per state; set by determinize().
    std::optional<std::vector<StateSet>> subset_labels;

    std::size_t size() const noexcept { return next.size(); }
    State run(State from, std::span<const Symbol> w) const;
    State run(std::span<const Symbol> w) const { return run(initial, w); }
    /// Length-lex-least word reaching each state (nullopt when unreachable).
    std::vector<std::optional<Word>> access_words() const;
    Nfa to_nfa() const;
};

// Views and simple combinators used as building blocks by the constructions
// and the checks. All return fresh automata.

Nfa with_initial(const Nfa& a, StateSet initial);
Nfa with_final(const Nfa& a, StateSet final_states);
/// Right language W_{q,F}.
Nfa right_language(const Nfa& a, State q);
/// Left language W_{I,q}.
Nfa left_language(const Nfa& a, State q);
Nfa empty_language(const Alphabet& alphabet);
Nfa universal_language(const Alphabet& alphabet);
Nfa epsilon_language(const Alphabet& alphabet);
Nfa union_of(const Nfa& a, const Nfa& b);
Nfa intersection_of(const Nfa& a, const Nfa& b);
/// L(a)·{sym}.
Nfa append_symbol(const Nfa& a, Symbol sym);

} // namespace rfa
