#include "rfa/language.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

namespace rfa {

Nfa reverse(const Nfa& a) {
    Nfa out(a.alphabet(), a.size());
    out.set_names(a.names());
    out.set_initial(a.final_states());
    out.set_final(a.initial());
    for (State q = 0; q < a.size(); ++q)
        for (Symbol s = 0; s < a.alphabet().size(); ++s)
            for (State r : a.successors(q, s).members())
                out.add_transition(r, s, q);
    return out;
}

namespace {

StateSet step(const Nfa& a, const StateSet& s, Symbol sym) {
    StateSet out(a.size());
    for (State q : s.members())
        out |= a.successors(q, sym);
    return out;
}

void require_same_alphabet(const Nfa& a, const Nfa& b) {
    if (!(a.alphabet() == b.alphabet()))
        throw Error("alphabet mismatch");
}

// Breadth-first exploration of the product of the two subset constructions.
// `bad` decides whether a pair of (subset, subset) witnesses a difference.
// Discovery order follows length-lex order of access words, so the first bad
// pair found carries the length-lex-least witness.
template <typename Bad>
Verdict explore_product(const Nfa& a, const Nfa& b, Bad bad) {
    require_same_alphabet(a, b);
    using Pair = std::pair<StateSet, StateSet>;
    std::map<Pair, std::size_t> index;
    std::vector<Pair> pairs;
    std::vector<std::pair<std::size_t, Symbol>> parent;

    auto witness_of = [&](std::size_t i) {
        Word w;
        while (i != 0) {
            w.push_back(parent[i].second);
            i = parent[i].first;
        }
        return reversed(std::move(w));
    };

    Pair start{a.initial(), b.initial()};
    index.emplace(start, 0);
    pairs.push_back(start);
    parent.emplace_back(0, 0);
    if (bad(start.first, start.second))
        return {false, Word{}};
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
            Pair nxt{step(a, pairs[head].first, s), step(b, pairs[head].second, s)};
            if (index.contains(nxt))
                continue;
            const std::size_t id = pairs.size();
            index.emplace(nxt, id);
            pairs.push_back(nxt);
            parent.emplace_back(head, s);
            if (bad(pairs[id].first, pairs[id].second))
                return {false, witness_of(id)};
        }
    }
    return {true, std::nullopt};
}

} // namespace

StateSet post(const Nfa& a, const StateSet& s, std::span<const Symbol> w) {
    StateSet cur = s;
    for (Symbol sym : w)
        cur = step(a, cur, sym);
    return cur;
}

StateSet pre(const Nfa& a, const StateSet& s, std::span<const Symbol> w) {
    StateSet cur = s;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        StateSet prev(a.size());
        for (State q = 0; q < a.size(); ++q)
            if (a.successors(q, *it).intersects(cur))
                prev.insert(q);
        cur = std::move(prev);
    }
    return cur;
}

bool accepts(const Nfa& a, std::span<const Symbol> w) {
    return post(a, a.initial(), w).intersects(a.final_states());
}

Dfa determinize(const Nfa& a) {
    Dfa d;
    d.alphabet = a.alphabet();
    std::map<StateSet, State> index;
    std::vector<StateSet> subsets{a.initial()};
    index.emplace(a.initial(), 0);
    for (std::size_t head = 0; head < subsets.size(); ++head) {
        std::vector<State> row;
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
            StateSet nxt = step(a, subsets[head], s);
            auto [it, fresh] = index.emplace(nxt, subsets.size());
            if (fresh)
                subsets.push_back(std::move(nxt));
            row.push_back(it->second);
        }
        d.next.push_back(std::move(row));
    }
    d.initial = 0;
    for (const auto& s : subsets) {
        d.accepting.push_back(s.intersects(a.final_states()));
        std::string label = "{";
        bool first = true;
        for (State q : s.members()) {
            if (!first)
                label += ',';
            label += a.name(q);
            first = false;
        }
        d.names.push_back(label + "}");
    }
    d.subset_labels = std::move(subsets);
    return d;
}

Dfa minimize(const Dfa& d) {
    const std::size_t k = d.alphabet.size();
    // reachable part
    std::vector<bool> seen(d.size(), false);
    std::vector<State> order;
    if (d.size() > 0) {
        std::deque<State> queue{d.initial};
        seen[d.initial] = true;
        while (!queue.empty()) {
            State q = queue.front();
            queue.pop_front();
            order.push_back(q);
            for (Symbol s = 0; s < k; ++s) {
                State r = d.next[q][s];
                if (!seen[r]) {
                    seen[r] = true;
                    queue.push_back(r);
                }
            }
        }
    }
    // Moore refinement: class ids are recomputed from (class, successor classes)
    std::vector<std::size_t> cls(d.size(), 0);
    for (State q : order)
        cls[q] = d.accepting[q] ? 1 : 0;
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> sig_index;
        std::vector<std::size_t> refined(d.size(), 0);
        for (State q : order) {
            std::vector<std::size_t> sig{cls[q]};
            for (Symbol s = 0; s < k; ++s)
                sig.push_back(cls[d.next[q][s]]);
            auto [it, fresh] = sig_index.emplace(std::move(sig), sig_index.size());
            refined[q] = it->second;
        }
        const bool stable = sig_index.size() == classes;
        classes = sig_index.size();
        cls = std::move(refined);
        if (stable)
            break;
    }

    Dfa m;
    m.alphabet = d.alphabet;
    if (d.size() == 0)
        return m;
    // renumber breadth-first from the initial class
    std::vector<std::optional<State>> renum(classes);
    std::vector<State> rep;
    std::vector<Word> access;
    renum[cls[d.initial]] = 0;
    rep.push_back(d.initial);
    access.emplace_back();
    for (std::size_t head = 0; head < rep.size(); ++head) {
        for (Symbol s = 0; s < k; ++s) {
            State r = d.next[rep[head]][s];
            if (!renum[cls[r]]) {
                renum[cls[r]] = rep.size();
                rep.push_back(r);
                access.push_back(concat(access[head], Word{s}));
            }
        }
    }
    m.initial = 0;
    for (std::size_t i = 0; i < rep.size(); ++i) {
        std::vector<State> row;
        for (Symbol s = 0; s < k; ++s)
            row.push_back(*renum[cls[d.next[rep[i]][s]]]);
        m.next.push_back(std::move(row));
        m.accepting.push_back(d.accepting[rep[i]]);
        m.names.push_back(d.alphabet.format(access[i]));
    }
    return m;
}

Verdict language_equiv(const Nfa& a, const Nfa& b) {
    return explore_product(a, b, [&](const StateSet& x, const StateSet& y) {
        return x.intersects(a.final_states()) != y.intersects(b.final_states());
    });
}

Verdict language_includes(const Nfa& a, const Nfa& b) {
    return explore_product(a, b, [&](const StateSet& x, const StateSet& y) {
        return x.intersects(a.final_states()) && !y.intersects(b.final_states());
    });
}

bool is_empty(const Nfa& a) { return !shortest_word(a).has_value(); }

std::optional<Word> shortest_word(const Nfa& a) {
    auto v = language_includes(a, empty_language(a.alphabet()));
    return v.witness;
}

StateSet empty_states(const Nfa& a) {
    StateSet live = a.final_states();
    bool changed = true;
    while (changed) {
        changed = false;
        for (State q = 0; q < a.size(); ++q) {
            if (live.contains(q))
                continue;
            for (Symbol s = 0; s < a.alphabet().size(); ++s)
                if (a.successors(q, s).intersects(live)) {
                    live.insert(q);
                    changed = true;
                    break;
                }
        }
    }
    StateSet out(a.size());
    for (State q = 0; q < a.size(); ++q)
        if (!live.contains(q))
            out.insert(q);
    return out;
}

StateSet unreachable_states(const Nfa& a) {
    StateSet reached = a.initial();
    std::deque<State> queue;
    for (State q : reached.members())
        queue.push_back(q);
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Symbol s = 0; s < a.alphabet().size(); ++s)
            for (State r : a.successors(q, s).members())
                if (!reached.contains(r)) {
                    reached.insert(r);
                    queue.push_back(r);
                }
    }
    StateSet out(a.size());
    for (State q = 0; q < a.size(); ++q)
        if (!reached.contains(q))
            out.insert(q);
    return out;
}

namespace {

// Colour refinement over the disjoint union of a and b: states of a get
// indices [0, |a|), states of b get [|a|, |a|+|b|).
std::vector<std::size_t> refine_colours(const Nfa& a, const Nfa& b) {
    const std::size_t na = a.size();
    const std::size_t n = na + b.size();
    const std::size_t k = a.alphabet().size();
    auto nfa_of = [&](std::size_t v) -> std::pair<const Nfa*, State> {
        return v < na ? std::pair{&a, v} : std::pair{&b, v - na};
    };
    // predecessor lists per symbol
    std::vector<std::vector<std::vector<std::size_t>>> preds(
        n, std::vector<std::vector<std::size_t>>(k));
    for (std::size_t v = 0; v < n; ++v) {
        auto [m, q] = nfa_of(v);
        const std::size_t off = v < na ? 0 : na;
        for (Symbol s = 0; s < k; ++s)
            for (State r : m->successors(q, s).members())
                preds[off + r][s].push_back(v);
    }
    std::vector<std::size_t> colour(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto [m, q] = nfa_of(v);
        colour[v] = (m->initial().contains(q) ? 2 : 0) + (m->final_states().contains(q) ? 1 : 0);
    }
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> sig_index;
        std::vector<std::size_t> next(n);
        for (std::size_t v = 0; v < n; ++v) {
            auto [m, q] = nfa_of(v);
            const std::size_t off = v < na ? 0 : na;
            std::vector<std::size_t> sig{colour[v]};
            for (Symbol s = 0; s < k; ++s) {
                std::vector<std::size_t> out;
                for (State r : m->successors(q, s).members())
                    out.push_back(colour[off + r]);
                std::sort(out.begin(), out.end());
                sig.push_back(out.size());
                sig.insert(sig.end(), out.begin(), out.end());
                std::vector<std::size_t> in;
                for (std::size_t p : preds[v][s])
                    in.push_back(colour[p]);
                std::sort(in.begin(), in.end());
                sig.push_back(in.size());
                sig.insert(sig.end(), in.begin(), in.end());
            }
            auto [it, fresh] = sig_index.emplace(std::move(sig), sig_index.size());
            next[v] = it->second;
        }
        const bool stable = sig_index.size() == classes;
        classes = sig_index.size();
        colour = std::move(next);
        if (stable)
            return colour;
    }
}

// Backtracking search for a map a → b. `induced` requires transitions among
// mapped states to agree in both directions; `candidates` lists allowed
// images per state of a.
std::optional<std::vector<State>> search_map(const Nfa& a, const Nfa& b,
                                             const std::vector<std::vector<State>>& candidates) {
    const std::size_t na = a.size();
    const std::size_t k = a.alphabet().size();
    std::vector<State> order(na);
    std::iota(order.begin(), order.end(), 0);
    // most constrained first, then breadth-first adjacency to keep checks local
    std::stable_sort(order.begin(), order.end(), [&](State x, State y) {
        return candidates[x].size() < candidates[y].size();
    });
    std::vector<std::optional<State>> map(na);
    std::vector<bool> used(b.size(), false);

    auto consistent = [&](State p, State img) {
        for (Symbol s = 0; s < k; ++s) {
            if (a.successors(p, s).contains(p) != b.successors(img, s).contains(img))
                return false;
            for (State q = 0; q < na; ++q) {
                if (!map[q] || q == p)
                    continue;
                const State qi = *map[q];
                if (a.successors(p, s).contains(q) != b.successors(img, s).contains(qi))
                    return false;
                if (a.successors(q, s).contains(p) != b.successors(qi, s).contains(img))
                    return false;
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == na)
            return true;
        const State p = order[depth];
        for (State img : candidates[p]) {
            if (used[img] || !consistent(p, img))
                continue;
            map[p] = img;
            used[img] = true;
            if (self(self, depth + 1))
                return true;
            map[p].reset();
            used[img] = false;
        }
        return false;
    };
    if (!rec(rec, 0))
        return std::nullopt;
    std::vector<State> out(na);
    for (State q = 0; q < na; ++q)
        out[q] = *map[q];
    return out;
}

} // namespace

std::optional<std::vector<State>> isomorphic(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    if (a.size() != b.size() || a.transition_count() != b.transition_count() ||
        a.initial().count() != b.initial().count() ||
        a.final_states().count() != b.final_states().count())
        return std::nullopt;
    const auto colour = refine_colours(a, b);
    const std::size_t na = a.size();
    std::map<std::size_t, long> histogram;
    for (std::size_t v = 0; v < colour.size(); ++v)
        histogram[colour[v]] += v < na ? 1 : -1;
    for (const auto& [c, balance] : histogram)
        if (balance != 0)
            return std::nullopt;
    std::vector<std::vector<State>> candidates(na);
    for (State p = 0; p < na; ++p)
        for (State q = 0; q < b.size(); ++q)
            if (colour[p] == colour[na + q])
                candidates[p].push_back(q);
    return search_map(a, b, candidates);
}

std::optional<std::vector<State>> embeds_into(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    if (a.size() > b.size())
        return std::nullopt;
    std::vector<std::vector<State>> candidates(a.size());
    for (State p = 0; p < a.size(); ++p)
        for (State q = 0; q < b.size(); ++q)
            if (a.initial().contains(p) == b.initial().contains(q) &&
                a.final_states().contains(p) == b.final_states().contains(q))
                candidates[p].push_back(q);
    return search_map(a, b, candidates);
}

} // namespace rfa
