#pragma once

#include <string>
#include <string_view>

#include "valuata/as_extension.hpp"
#include "valuata/error.hpp"
#include "valuata/kummer.hpp"

namespace valuata {

/// Malformed expression; `position` is the 0-based offset of the offending token.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : UsageError("syntax error at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | power
//   power   := primary ['^' exponent]
//   primary := integer | symbol | '(' expr ')' | 'O' '(' symbol '^' exponent ')'
// Symbols: X (exponent "(r)" or "(a, b)"), y, w over series fields; alpha over
// Artin-Schreier extensions; pi, z, y over cyclotomic fields.

Series parse_series(const SeriesField& K, std::string_view text);
ExtElt parse_ext(const ASExtension& L, std::string_view text);
CycloElt parse_cyclo(const CycloField& F, std::string_view text);

}  // namespace valuata
