#ifndef HFG_MONOMIAL_HPP
#define HFG_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

namespace hfg {

/// Largest variable block supported (x, y, z blocks of the plane plus room
/// for auxiliary elimination variables).
inline constexpr std::size_t kMaxVariables = 12;

/// Exponent vector X^I over a variable block of fixed arity.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const unsigned> exponents);

  std::size_t arity() const { return arity_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);

  /// Sum of exponents over variables [first, last).
  unsigned partial_degree(std::size_t first, std::size_t last) const;

  bool divides(const Monomial& other) const;
  bool is_coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

  std::size_t hash() const;

private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t arity_ = 0;
};

} // namespace hfg

template <>
struct std::hash<hfg::Monomial> {
  std::size_t operator()(const hfg::Monomial& m) const noexcept { return m.hash(); }
};

#endif
