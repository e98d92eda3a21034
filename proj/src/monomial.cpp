#include "hfg/monomial.hpp"

#include "hfg/error.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace hfg {

namespace {

std::uint16_t checked_exponent(unsigned e) {
  if (e > std::numeric_limits<std::uint16_t>::max())
    throw DomainError("exponent " + std::to_string(e) + " out of range");
  return static_cast<std::uint16_t>(e);
}

} // namespace

Monomial::Monomial(std::size_t arity) {
  if (arity > kMaxVariables)
    throw DomainError("variable block of arity " + std::to_string(arity) + " exceeds the supported maximum");
  arity_ = static_cast<std::uint8_t>(arity);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  assert(i < arity_);
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = checked_exponent(e);
}

unsigned Monomial::partial_degree(std::size_t first, std::size_t last) const {
  unsigned d = 0;
  for (std::size_t i = first; i < last; ++i) d += exp_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < arity_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::is_coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < arity_; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  assert(arity_ == other.arity_);
  Monomial r = *this;
  for (std::size_t i = 0; i < arity_; ++i)
    r.exp_[i] = checked_exponent(unsigned(exp_[i]) + other.exp_[i]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial r = *this;
  for (std::size_t i = 0; i < arity_; ++i) r.exp_[i] = exp_[i] - divisor.exp_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  assert(arity_ == other.arity_);
  Monomial r(arity_);
  for (std::size_t i = 0; i < arity_; ++i) r.set(i, std::max(exp_[i], other.exp_[i]));
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = arity_;
  for (std::size_t i = 0; i < arity_; ++i) h = h * 1000003u ^ exp_[i];
  return h;
}

} // namespace hfg
