#include "hypcomp/textio.hpp"

namespace hypcomp {

namespace {

std::string monomial_text(const VarContext& ctx, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string print_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& term : p.terms()) {
    const bool negative = term.coefficient < 0;
    const Rational magnitude = abs(term.coefficient);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string mono = monomial_text(p.context(), term.monomial);
    if (mono.empty())
      out += to_string(magnitude);
    else if (magnitude == 1)
      out += mono;
    else
      out += to_string(magnitude) + "*" + mono;
  }
  return out;
}

std::string print_rational_function(const RationalFunction& r) {
  const Polynomial num = r.numerator();
  if (r.is_polynomial()) return print_poly(num);
  auto wrap = [](const Polynomial& p) {
    const std::string s = print_poly(p);
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num) + " / " + wrap(r.denominator());
}

}  // namespace hypcomp
