#include "hypcomp/errors.hpp"
#include "hypcomp/textio.hpp"

#include <cctype>

namespace hypcomp {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprAst run() {
    ExprAst e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "operator or end of input");
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  std::string digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprAst expr() {
    ExprAst sum;
    sum.kind = ExprAst::Kind::Sum;
    skip_space();
    sum.position = pos_;
    sum.children.push_back(term());
    sum.subtracted.push_back(false);
    for (;;) {
      if (accept('+'))
        sum.subtracted.push_back(false);
      else if (accept('-'))
        sum.subtracted.push_back(true);
      else
        break;
      sum.children.push_back(term());
    }
    if (sum.children.size() == 1) return std::move(sum.children.front());
    return sum;
  }

  ExprAst term() {
    ExprAst prod;
    prod.kind = ExprAst::Kind::Product;
    skip_space();
    prod.position = pos_;
    prod.children.push_back(factor());
    while (accept('*')) prod.children.push_back(factor());
    if (prod.children.size() == 1) return std::move(prod.children.front());
    return prod;
  }

  ExprAst factor() {
    skip_space();
    const std::size_t start = pos_;
    if (accept('-')) {
      ExprAst neg;
      neg.kind = ExprAst::Kind::Negate;
      neg.position = start;
      neg.children.push_back(factor());
      return neg;
    }
    ExprAst b = base();
    if (!accept('^')) return b;
    skip_space();
    const std::size_t epos = pos_;
    if (!at_digit()) throw ParseError(epos, "nonnegative integer exponent");
    const std::string e = digits();
    if (e.size() > 6 || std::stoul(e) > kMaxParsedExponent)
      throw ParseError(epos, "exponent at most " + std::to_string(kMaxParsedExponent));
    ExprAst pw;
    pw.kind = ExprAst::Kind::Power;
    pw.position = start;
    pw.exponent = static_cast<unsigned>(std::stoul(e));
    pw.children.push_back(std::move(b));
    return pw;
  }

  ExprAst base() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) throw ParseError(pos_, "variable, number or '('");
    if (accept('(')) {
      ExprAst inner = expr();
      if (!accept(')')) throw ParseError(pos_, "')'");
      return inner;
    }
    if (at_digit()) {
      std::string num = digits();
      std::string den = "1";
      if (accept('/')) {
        skip_space();
        if (!at_digit()) throw ParseError(pos_, "positive integer denominator");
        const std::size_t dpos = pos_;
        den = digits();
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError(dpos, "positive integer denominator");
      }
      ExprAst lit;
      lit.kind = ExprAst::Kind::RationalLit;
      lit.position = start;
      lit.value = Rational(mpz_class(num), mpz_class(den));
      lit.value.canonicalize();
      return lit;
    }
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      ExprAst var;
      var.kind = ExprAst::Kind::Var;
      var.position = start;
      var.name = std::string(text_.substr(start, pos_ - start));
      return var;
    }
    throw ParseError(pos_, "variable, number or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool allowed_name(const std::string& name) {
  if (name == "y" || name == "z" || name == "t" || name == "a") return true;
  if (name.size() < 2 || name.size() > 3 || name[0] != 'x' || name[1] == '0') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

}  // namespace

ExprAst parse_ast(std::string_view text) { return Parser(text).run(); }

Polynomial to_polynomial(const ExprAst& ast, const VarContext& context) {
  switch (ast.kind) {
    case ExprAst::Kind::RationalLit:
      return Polynomial(context, ast.value);
    case ExprAst::Kind::Var: {
      auto index = allowed_name(ast.name) ? context.find(ast.name) : std::nullopt;
      if (!index) throw UnknownVariable(ast.name, ast.position);
      return Polynomial::variable(context, *index);
    }
    case ExprAst::Kind::Negate:
      return -to_polynomial(ast.children.front(), context);
    case ExprAst::Kind::Power:
      return pow(to_polynomial(ast.children.front(), context), ast.exponent);
    case ExprAst::Kind::Product: {
      Polynomial p(context, Rational(1));
      for (const auto& c : ast.children) p = p * to_polynomial(c, context);
      return p;
    }
    case ExprAst::Kind::Sum: {
      std::vector<Polynomial> parts;
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        Polynomial c = to_polynomial(ast.children[i], context);
        parts.push_back(ast.subtracted[i] ? -c : std::move(c));
      }
      return sum(context, parts);
    }
  }
  throw std::logic_error("unhandled syntax node");
}

Polynomial parse(std::string_view text, const VarContext& context) { return to_polynomial(parse_ast(text), context); }

}  // namespace hypcomp
