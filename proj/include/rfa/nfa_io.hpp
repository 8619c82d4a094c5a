#pragma once

// Line-oriented .nfa text format and DOT export.
//
//   alphabet a b c
//   states 3 names p q r      # names optional, defaults to 0..n-1
//   initial p
//   final r                   # may list zero states
//   trans p a q
//
// '#' starts a comment that runs to the end of the line.

#include <istream>
#include <string>
#include <string_view>

#include "rfa/automaton.hpp"

namespace rfa {

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

Nfa parse_nfa(std::string_view text);
Nfa parse_nfa(std::istream& in);
Nfa load_nfa(const std::string& path);

/// Canonical rendering: transitions sorted by (source, symbol, target).
std::string render_nfa(const Nfa& a);
std::string to_dot(const Nfa& a);

} // namespace rfa
