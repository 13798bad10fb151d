#ifndef EMLTAB_PARSER_HPP
#define EMLTAB_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "emltab/formula.hpp"

namespace emltab {

/// Syntax error carrying the 0-based character offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace is insignificant):
//   formula := iff
//   iff     := imp ("<->" imp)*
//   imp     := or ("->" imp)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "D{" agents "}" unary | "C{" agents "}" unary
//            | "K{" agent "}" unary | "(" formula ")" | atom
//   agents  := agent ("," agent)*
//   atom, agent := [a-zA-Z][a-zA-Z0-9_]*
//
// Sugar is expanded as the formula is built; agents and atoms are interned
// into `factory`.
Formula parse(std::string_view text, FormulaFactory& factory);

/// Inverse of parse for formulas of the core language.
std::string print(Formula f, const FormulaFactory& factory);

}  // namespace emltab

#endif  // EMLTAB_PARSER_HPP
