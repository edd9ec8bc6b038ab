#include "hypcomp/monomial.hpp"

#include <cassert>

namespace hypcomp {

Monomial Monomial::unit(std::size_t arity, std::size_t index, Exponent power) {
  Monomial m(arity);
  m.exponents_[index] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  assert(divides(other));
  Monomial q(other);
  for (std::size_t i = 0; i < exponents_.size(); ++i) q.exponents_[i] -= exponents_[i];
  q.degree_ -= degree_;
  return q;
}

Monomial Monomial::with_exponent(std::size_t i, Exponent e) const {
  Monomial m(*this);
  m.degree_ = m.degree_ - m.exponents_[i] + e;
  m.exponents_[i] = e;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.arity() == b.arity());
  Monomial m(a);
  for (std::size_t i = 0; i < m.exponents_.size(); ++i) m.exponents_[i] += b.exponents_[i];
  m.degree_ += b.degree_;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i)
    if (auto c = a.exponents_[i] <=> b.exponents_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exponents_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hypcomp
