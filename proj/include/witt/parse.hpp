#pragma once

// Recursive-descent readers for the canonical text forms.
//
//   expr    := ['+'|'-']* term (('+'|'-') ['+'|'-']* term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' INT]
//   primary := INT ['/' INT] | 'x' INT | 'd' INT | '(' expr ')'
//
// Unary signs apply to a whole product, so `-x1^2*x2` is -(x1^2*x2).
// Words are `;`-separated atoms: `s<i>`, `t(<q>)`, `psi(<p>)`, `shear(<p>,<q>)`.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "witt/derivation.hpp"
#include "witt/errors.hpp"
#include "witt/polynomial.hpp"
#include "witt/tame.hpp"

namespace witt {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);
  ParseError(std::size_t position, const std::string& message);

  /// 0-based offset into the input.
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// A variable or derivation index outside 1..arity.
class ArityError : public ParseError {
 public:
  ArityError(std::size_t position, const std::string& atom, std::size_t arity);
};

Polynomial parse_polynomial(std::string_view text, std::size_t arity);
Derivation parse_derivation(std::string_view text, std::size_t arity);
/// `(p1, ..., pn)`; the arity is the number of components.
std::vector<Polynomial> parse_tuple(std::string_view text);
Rational parse_rational(std::string_view text);

TameGenerator parse_generator(std::string_view text);
std::vector<TameGenerator> parse_generators(std::string_view text);
/// Parses and validates every generator against `arity`.
TameWord parse_word(std::string_view text, std::size_t arity);

}  // namespace witt
