#include "hypcomp/rational.hpp"

#include "hypcomp/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace hypcomp {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (i < s.size()) {
    if (s[i] != '/') throw std::invalid_argument("malformed rational '" + s + "'");
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != s.size()) throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational value(s, 10);
  if (value.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero("negative power of zero");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace hypcomp
