#pragma once

#include "hypcomp/rational_function.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypcomp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected)
      : std::runtime_error("parse error at offset " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

struct ExprAst {
  enum class Kind { Sum, Product, Power, Negate, Var, RationalLit };
  Kind kind = Kind::RationalLit;
  std::size_t position = 0;
  std::string name;              // Var
  Rational value;                // RationalLit
  unsigned exponent = 0;         // Power
  std::vector<bool> subtracted;  // Sum: per child, whether it enters with "-"
  std::vector<ExprAst> children;
};

// Largest exponent literal accepted by the parser.
inline constexpr unsigned kMaxParsedExponent = 4096;

// expr   := term (("+" | "-") term)*
// term   := factor ("*" factor)*
// factor := "-" factor | base ("^" uint)?
// base   := var | int ("/" posint)? | "(" expr ")"
// Unary minus binds looser than "^", so "-x^2" is -(x^2).
ExprAst parse_ast(std::string_view text);

// Throws UnknownVariable (with the offset) for names outside the context.
Polynomial to_polynomial(const ExprAst& ast, const VarContext& context);

Polynomial parse(std::string_view text, const VarContext& context);

// Terms in graded-lex order, e.g. "x1^2*y + z^2"; the zero polynomial is "0".
std::string print_poly(const Polynomial& p);
// "num / den", or just the numerator when the denominator is one.
std::string print_rational_function(const RationalFunction& r);

}  // namespace hypcomp
