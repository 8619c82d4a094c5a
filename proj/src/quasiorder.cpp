#include "rfa/quasiorder.hpp"

#include <deque>
#include <set>

#include "rfa/language.hpp"

namespace rfa {

std::size_t PrincipalSystem::class_of(std::span<const Symbol> w) const {
    if (side == Side::right)
        return classifier.run(w);
    Word r(w.rbegin(), w.rend());
    return classifier.run(r);
}

std::string PrincipalSystem::key_label(std::size_t i) const {
    const auto& rep = reps.at(i);
    if (!rep.key_set)
        return classifier.alphabet.format(rep.witness);
    std::string label = "{";
    bool first = true;
    for (State q : rep.key_set->members()) {
        if (!first)
            label += ',';
        label += q < source_names.size() ? source_names[q] : std::to_string(q);
        first = false;
    }
    return label + "}";
}

Nfa PrincipalSystem::classes_language(const std::vector<bool>& classes) const {
    StateSet fin(classifier.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i])
            fin.insert(reps[i].key_state);
    Nfa out = with_final(classifier.to_nfa(), std::move(fin));
    return side == Side::right ? out : reverse(out);
}

namespace {

// Representatives follow the classifier's state numbering, which is
// breadth-first, so witnesses are length-lex-least access words.
void fill_reps(PrincipalSystem& sys) {
    const auto access = sys.classifier.access_words();
    sys.reps.clear();
    sys.in_L.clear();
    for (State p = 0; p < sys.classifier.size(); ++p) {
        Principal rep;
        const Word& w = access[p].value();
        rep.witness = sys.side == Side::right ? w : reversed(w);
        rep.key_state = p;
        if (sys.classifier.subset_labels)
            rep.key_set = (*sys.classifier.subset_labels)[p];
        rep.residual = sys.lattice.min_dfa.run(w);
        sys.reps.push_back(std::move(rep));
        sys.in_L.push_back(sys.classifier.accepting[p]);
    }
}

} // namespace

PrincipalSystem build_nerode(const Nfa& a, Side side) {
    PrincipalSystem sys;
    sys.side = side;
    sys.source = QuasiorderSource::language;
    sys.lattice = build_lattice(a, side);
    sys.classifier = sys.lattice.min_dfa;
    sys.leq = sys.lattice.incl;
    fill_reps(sys);
    return sys;
}

PrincipalSystem build_automata_qo(const Nfa& a, Side side) {
    PrincipalSystem sys;
    sys.side = side;
    sys.source = QuasiorderSource::automaton;
    sys.source_names = a.names();
    sys.lattice = build_lattice(a, side);
    sys.classifier = determinize(side == Side::right ? a : reverse(a));
    fill_reps(sys);
    const std::size_t n = sys.size();
    sys.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sys.leq[i][j] = sys.reps[i].key_set->subset_of(*sys.reps[j].key_set);
    return sys;
}

bool is_L_composite(const PrincipalSystem& sys, std::size_t i) {
    std::vector<State> below;
    for (std::size_t j = 0; j < sys.size(); ++j)
        if (sys.strictly_below(j, i))
            below.push_back(sys.reps[j].residual);
    return static_cast<bool>(language_equiv(sys.lattice.residual(sys.reps[i].residual),
                                            sys.lattice.residual_union(below)));
}

Nfa closure_of_regular(const PrincipalSystem& sys, const Nfa& s) {
    if (!(s.alphabet() == sys.classifier.alphabet))
        throw Error("alphabet mismatch");
    const Nfa src = sys.side == Side::right ? s : reverse(s);
    const Dfa& cls = sys.classifier;
    // product reachability: (state of src, classifier state)
    std::set<std::pair<State, State>> seen;
    std::deque<std::pair<State, State>> queue;
    for (State q : src.initial().members())
        if (seen.emplace(q, cls.initial).second)
            queue.emplace_back(q, cls.initial);
    std::vector<bool> hit(sys.size(), false);
    while (!queue.empty()) {
        auto [q, c] = queue.front();
        queue.pop_front();
        if (src.final_states().contains(q))
            hit[c] = true;
        for (Symbol a = 0; a < src.alphabet().size(); ++a)
            for (State r : src.successors(q, a).members())
                if (seen.emplace(r, cls.next[c][a]).second)
                    queue.emplace_back(r, cls.next[c][a]);
    }
    std::vector<bool> up(sys.size(), false);
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (hit[sys.reps[i].key_state])
            for (std::size_t j = 0; j < sys.size(); ++j)
                if (sys.leq[i][j])
                    up[j] = true;
    return sys.classes_language(up);
}

Nfa principal_language(const PrincipalSystem& sys, std::size_t i) {
    return sys.classes_language(sys.leq.at(i));
}

bool is_L_preserving(const PrincipalSystem& sys, const Nfa& language) {
    return static_cast<bool>(language_equiv(closure_of_regular(sys, language), language));
}

} // namespace rfa
