#include "rfa/nfa_io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace rfa {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

bool default_names(const Nfa& a) {
    for (State q = 0; q < a.size(); ++q)
        if (a.name(q) != std::to_string(q))
            return false;
    return true;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

Nfa parse_nfa(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::optional<Nfa> nfa;
    std::map<std::string, State> ids;
    bool names_given = false;

    auto lookup_state = [&](std::size_t line, const std::string& id) -> State {
        auto it = ids.find(id);
        if (it == ids.end())
            throw ParseError(line, "unknown state '" + id + "'");
        return it->second;
    };
    auto require_states = [&](std::size_t line, const std::string& kw) {
        if (!alphabet)
            throw ParseError(line, "missing 'alphabet' header before '" + kw + "'");
        if (!nfa)
            throw ParseError(line, "missing 'states' header before '" + kw + "'");
    };
    auto apply_names = [&](std::size_t line, std::vector<std::string> names) {
        if (names_given)
            throw ParseError(line, "state names given twice");
        if (names.size() != nfa->size())
            throw ParseError(line, "expected " + std::to_string(nfa->size()) +
                                       " state names, got " + std::to_string(names.size()));
        try {
            nfa->set_names(names);
        } catch (const Error& e) {
            throw ParseError(line, e.what());
        }
        ids.clear();
        for (State q = 0; q < names.size(); ++q)
            ids[names[q]] = q;
        names_given = true;
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = split_tokens(line);
        if (toks.empty()) {
            if (end == text.size())
                break;
            continue;
        }
        const std::string& kw = toks[0];
        if (kw == "alphabet") {
            if (alphabet)
                throw ParseError(line_no, "duplicate 'alphabet' header");
            try {
                alphabet = Alphabet({toks.begin() + 1, toks.end()});
            } catch (const Error& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (kw == "states") {
            if (!alphabet)
                throw ParseError(line_no, "missing 'alphabet' header before 'states'");
            if (nfa)
                throw ParseError(line_no, "duplicate 'states' header");
            if (toks.size() < 2)
                throw ParseError(line_no, "'states' needs a count");
            std::size_t n = 0;
            try {
                std::size_t used = 0;
                n = std::stoul(toks[1], &used);
                if (used != toks[1].size())
                    throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError(line_no, "invalid state count '" + toks[1] + "'");
            }
            nfa = Nfa(*alphabet, n);
            for (State q = 0; q < n; ++q)
                ids[std::to_string(q)] = q;
            if (toks.size() > 2) {
                if (toks[2] != "names")
                    throw ParseError(line_no, "unexpected token '" + toks[2] + "'");
                apply_names(line_no, {toks.begin() + 3, toks.end()});
            }
        } else if (kw == "names") {
            require_states(line_no, kw);
            apply_names(line_no, {toks.begin() + 1, toks.end()});
        } else if (kw == "initial" || kw == "final") {
            require_states(line_no, kw);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const State q = lookup_state(line_no, toks[i]);
                if (kw == "initial")
                    nfa->set_initial(q, true);
                else
                    nfa->set_final(q, true);
            }
        } else if (kw == "trans") {
            require_states(line_no, kw);
            if (toks.size() != 4)
                throw ParseError(line_no, "expected 'trans <src> <symbol> <dst>'");
            const State src = lookup_state(line_no, toks[1]);
            auto sym = alphabet->find(toks[2]);
            if (!sym)
                throw ParseError(line_no, "unknown symbol '" + toks[2] + "'");
            const State dst = lookup_state(line_no, toks[3]);
            nfa->add_transition(src, *sym, dst);
        } else {
            throw ParseError(line_no, "unknown keyword '" + kw + "'");
        }
        if (end == text.size())
            break;
    }
    if (!alphabet)
        throw ParseError(line_no, "missing 'alphabet' header");
    if (!nfa)
        throw ParseError(line_no, "missing 'states' header");
    return std::move(*nfa);
}

Nfa parse_nfa(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_nfa(buf.str());
}

Nfa load_nfa(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    return parse_nfa(in);
}

std::string render_nfa(const Nfa& a) {
    std::ostringstream out;
    out << "alphabet";
    for (const auto& t : a.alphabet().tokens())
        out << ' ' << t;
    out << "\nstates " << a.size();
    if (!default_names(a)) {
        out << " names";
        for (const auto& n : a.names())
            out << ' ' << n;
    }
    out << "\ninitial";
    for (State q : a.initial().members())
        out << ' ' << a.name(q);
    out << "\nfinal";
    for (State q : a.final_states().members())
        out << ' ' << a.name(q);
    out << '\n';
    for (State q = 0; q < a.size(); ++q)
        for (Symbol s = 0; s < a.alphabet().size(); ++s)
            for (State r : a.successors(q, s).members())
                out << "trans " << a.name(q) << ' ' << a.alphabet().token(s) << ' '
                    << a.name(r) << '\n';
    return out.str();
}

std::string to_dot(const Nfa& a) {
    std::ostringstream out;
    out << "digraph nfa {\n  rankdir=LR;\n";
    for (State q = 0; q < a.size(); ++q) {
        out << "  q" << q << " [label=\"" << dot_escape(a.name(q)) << "\", shape="
            << (a.final_states().contains(q) ? "doublecircle" : "circle") << "];\n";
        if (a.initial().contains(q))
            out << "  init" << q << " [shape=point, style=invis];\n  init" << q << " -> q" << q
                << ";\n";
    }
    for (State q = 0; q < a.size(); ++q) {
        std::map<State, std::string> labels;
        for (Symbol s = 0; s < a.alphabet().size(); ++s)
            for (State r : a.successors(q, s).members()) {
                auto& l = labels[r];
                if (!l.empty())
                    l += ',';
                l += a.alphabet().token(s);
            }
        for (const auto& [r, l] : labels)
            out << "  q" << q << " -> q" << r << " [label=\"" << dot_escape(l) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace rfa
