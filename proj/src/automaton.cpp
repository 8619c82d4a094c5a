#include "rfa/automaton.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

namespace rfa {

namespace {

constexpr std::string_view epsilon_text = "ε";

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

} // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty())
        throw Error("alphabet must be nonempty");
    if (tokens_.size() > max_alphabet_size)
        throw Error("alphabet has more than 16 symbols");
    std::set<std::string> seen;
    for (const auto& t : tokens_) {
        if (t.empty())
            throw Error("empty alphabet token");
        if (!seen.insert(t).second)
            throw Error("duplicate alphabet token '" + t + "'");
    }
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
    for (std::size_t i = 0; i < tokens_.size(); ++i)
        if (tokens_[i] == token)
            return static_cast<Symbol>(i);
    return std::nullopt;
}

std::string Alphabet::format(std::span<const Symbol> w) const {
    if (w.empty())
        return std::string(epsilon_text);
    const bool single = std::all_of(tokens_.begin(), tokens_.end(),
                                    [](const std::string& t) { return t.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single && i > 0)
            out += '.';
        out += token(w[i]);
    }
    return out;
}

Word Alphabet::parse(std::string_view text) const {
    Word w;
    if (text.empty() || text == epsilon_text)
        return w;
    const bool single = std::all_of(tokens_.begin(), tokens_.end(),
                                    [](const std::string& t) { return t.size() == 1; });
    auto push = [&](std::string_view tok) {
        auto s = find(tok);
        if (!s)
            throw Error("unknown symbol '" + std::string(tok) + "' in word '" +
                        std::string(text) + "'");
        w.push_back(*s);
    };
    if (single && text.find('.') == std::string_view::npos) {
        for (char c : text)
            push(std::string_view(&c, 1));
        return w;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto dot = text.find('.', start);
        if (dot == std::string_view::npos)
            dot = text.size();
        push(text.substr(start, dot - start));
        start = dot + 1;
    }
    return w;
}

Alphabet letters(std::size_t count) {
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < count; ++i)
        tokens.emplace_back(1, static_cast<char>('a' + i));
    return Alphabet(std::move(tokens));
}

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

bool length_lex_less(const Word& u, const Word& v) {
    if (u.size() != v.size())
        return u.size() < v.size();
    return u < v;
}

// StateSet

StateSet::StateSet(std::size_t universe)
    : universe_(universe), bits_(word_count(universe), 0) {}

StateSet::StateSet(std::size_t universe, std::initializer_list<State> members)
    : StateSet(universe) {
    for (State q : members)
        insert(q);
}

StateSet StateSet::full(std::size_t universe) {
    StateSet s(universe);
    for (State q = 0; q < universe; ++q)
        s.insert(q);
    return s;
}

bool StateSet::contains(State q) const {
    return q < universe_ && ((bits_[q / 64] >> (q % 64)) & 1U) != 0;
}

void StateSet::insert(State q) {
    if (q >= universe_)
        throw Error("state index " + std::to_string(q) + " out of range");
    bits_[q / 64] |= std::uint64_t{1} << (q % 64);
}

void StateSet::erase(State q) {
    if (q < universe_)
        bits_[q / 64] &= ~(std::uint64_t{1} << (q % 64));
}

bool StateSet::empty() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t b) { return b == 0; });
}

std::size_t StateSet::count() const noexcept {
    std::size_t c = 0;
    for (auto b : bits_)
        c += static_cast<std::size_t>(std::popcount(b));
    return c;
}

std::vector<State> StateSet::members() const {
    std::vector<State> out;
    for (State q = 0; q < universe_; ++q)
        if (contains(q))
            out.push_back(q);
    return out;
}

bool StateSet::subset_of(const StateSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        const std::uint64_t theirs = i < other.bits_.size() ? other.bits_[i] : 0;
        if ((bits_[i] & ~theirs) != 0)
            return false;
    }
    return true;
}

bool StateSet::intersects(const StateSet& other) const {
    const auto n = std::min(bits_.size(), other.bits_.size());
    for (std::size_t i = 0; i < n; ++i)
        if ((bits_[i] & other.bits_[i]) != 0)
            return true;
    return false;
}

StateSet& StateSet::operator|=(const StateSet& other) {
    if (other.universe_ != universe_)
        throw Error("state set universe mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        bits_[i] |= other.bits_[i];
    return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
    if (other.universe_ != universe_)
        throw Error("state set universe mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        bits_[i] &= other.bits_[i];
    return *this;
}

// Nfa

Nfa::Nfa(Alphabet alphabet, std::size_t n)
    : alphabet_(std::move(alphabet)), initial_(n), final_(n),
      delta_(n, std::vector<StateSet>(alphabet_.size(), StateSet(n))) {
    names_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        names_.push_back(std::to_string(i));
}

std::size_t Nfa::transition_count() const {
    std::size_t c = 0;
    for (const auto& row : delta_)
        for (const auto& s : row)
            c += s.count();
    return c;
}

void Nfa::set_names(std::vector<std::string> names) {
    if (names.size() != size())
        throw Error("expected " + std::to_string(size()) + " state names, got " +
                    std::to_string(names.size()));
    std::set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second)
            throw Error("duplicate state name '" + n + "'");
    names_ = std::move(names);
}

void Nfa::set_initial(StateSet s) {
    if (s.universe() != size())
        throw Error("initial set universe mismatch");
    initial_ = std::move(s);
}

void Nfa::set_final(StateSet s) {
    if (s.universe() != size())
        throw Error("final set universe mismatch");
    final_ = std::move(s);
}

void Nfa::set_initial(State q, bool on) {
    if (on)
        initial_.insert(q);
    else
        initial_.erase(q);
}

void Nfa::set_final(State q, bool on) {
    if (on)
        final_.insert(q);
    else
        final_.erase(q);
}

void Nfa::add_transition(State src, Symbol a, State dst) {
    if (src >= size() || dst >= size())
        throw Error("transition state out of range");
    if (a >= alphabet_.size())
        throw Error("transition symbol out of range");
    delta_[src][a].insert(dst);
}

State Nfa::add_state(std::string name) {
    const std::size_t n = size() + 1;
    auto grow = [n](const StateSet& s) {
        StateSet g(n);
        for (State q : s.members())
            g.insert(q);
        return g;
    };
    initial_ = grow(initial_);
    final_ = grow(final_);
    for (auto& row : delta_)
        for (auto& s : row)
            s = grow(s);
    delta_.emplace_back(alphabet_.size(), StateSet(n));
    names_.push_back(std::move(name));
    return n - 1;
}

// Dfa

State Dfa::run(State from, std::span<const Symbol> w) const {
    State q = from;
    for (Symbol a : w)
        q = next.at(q).at(a);
    return q;
}

std::vector<std::optional<Word>> Dfa::access_words() const {
    std::vector<std::optional<Word>> words(size());
    if (size() == 0)
        return words;
    std::deque<State> queue{initial};
    words[initial] = Word{};
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        for (Symbol a = 0; a < alphabet.size(); ++a) {
            const State r = next[q][a];
            if (!words[r]) {
                words[r] = concat(*words[q], Word{a});
                queue.push_back(r);
            }
        }
    }
    return words;
}

Nfa Dfa::to_nfa() const {
    Nfa out(alphabet, size());
    if (!names.empty())
        out.set_names(names);
    if (size() > 0)
        out.set_initial(initial, true);
    for (State q = 0; q < size(); ++q) {
        if (accepting[q])
            out.set_final(q, true);
        for (Symbol a = 0; a < alphabet.size(); ++a)
            out.add_transition(q, a, next[q][a]);
    }
    return out;
}

// Combinators

Nfa with_initial(const Nfa& a, StateSet initial) {
    Nfa out = a;
    out.set_initial(std::move(initial));
    return out;
}

Nfa with_final(const Nfa& a, StateSet final_states) {
    Nfa out = a;
    out.set_final(std::move(final_states));
    return out;
}

Nfa right_language(const Nfa& a, State q) {
    StateSet s(a.size());
    s.insert(q);
    return with_initial(a, std::move(s));
}

Nfa left_language(const Nfa& a, State q) {
    StateSet s(a.size());
    s.insert(q);
    return with_final(a, std::move(s));
}

Nfa empty_language(const Alphabet& alphabet) { return Nfa(alphabet, 0); }

Nfa universal_language(const Alphabet& alphabet) {
    Nfa out(alphabet, 1);
    out.set_initial(0, true);
    out.set_final(0, true);
    for (Symbol a = 0; a < alphabet.size(); ++a)
        out.add_transition(0, a, 0);
    return out;
}

Nfa epsilon_language(const Alphabet& alphabet) {
    Nfa out(alphabet, 1);
    out.set_initial(0, true);
    out.set_final(0, true);
    return out;
}

Nfa union_of(const Nfa& a, const Nfa& b) {
    if (!(a.alphabet() == b.alphabet()))
        throw Error("alphabet mismatch");
    const std::size_t n = a.size() + b.size();
    Nfa out(a.alphabet(), n);
    for (State q = 0; q < a.size(); ++q) {
        out.set_initial(q, a.initial().contains(q));
        out.set_final(q, a.final_states().contains(q));
        for (Symbol s = 0; s < a.alphabet().size(); ++s)
            for (State r : a.successors(q, s).members())
                out.add_transition(q, s, r);
    }
    const std::size_t off = a.size();
    for (State q = 0; q < b.size(); ++q) {
        out.set_initial(off + q, b.initial().contains(q));
        out.set_final(off + q, b.final_states().contains(q));
        for (Symbol s = 0; s < b.alphabet().size(); ++s)
            for (State r : b.successors(q, s).members())
                out.add_transition(off + q, s, off + r);
    }
    return out;
}

Nfa intersection_of(const Nfa& a, const Nfa& b) {
    if (!(a.alphabet() == b.alphabet()))
        throw Error("alphabet mismatch");
    const std::size_t m = b.size();
    Nfa out(a.alphabet(), a.size() * m);
    for (State p = 0; p < a.size(); ++p) {
        for (State q = 0; q < m; ++q) {
            const State pq = p * m + q;
            out.set_initial(pq, a.initial().contains(p) && b.initial().contains(q));
            out.set_final(pq, a.final_states().contains(p) && b.final_states().contains(q));
            for (Symbol s = 0; s < a.alphabet().size(); ++s)
                for (State p2 : a.successors(p, s).members())
                    for (State q2 : b.successors(q, s).members())
                        out.add_transition(pq, s, p2 * m + q2);
        }
    }
    return out;
}

Nfa append_symbol(const Nfa& a, Symbol sym) {
    Nfa out = a;
    const State tail = out.add_state("#tail");
    for (State q : a.final_states().members())
        out.add_transition(q, sym, tail);
    StateSet fin(out.size());
    fin.insert(tail);
    out.set_final(std::move(fin));
    return out;
}

} // namespace rfa
