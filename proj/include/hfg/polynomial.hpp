#ifndef HFG_POLYNOMIAL_HPP
#define HFG_POLYNOMIAL_HPP

#include "hfg/monomial.hpp"
#include "hfg/rational.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hfg {

/// Ordered list of variable names. Extended blocks used for elimination
/// always start with the x-block.
class VariableBlock {
public:
  explicit VariableBlock(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VariableBlock& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
};

using BlockPtr = std::shared_ptr<const VariableBlock>;

BlockPtr make_block(std::vector<std::string> names);
/// The shared x0, x1, x2 block of the projective plane.
const BlockPtr& plane_block();
bool same_block(const BlockPtr& a, const BlockPtr& b);
/// Throws BlockMismatch unless the blocks agree.
void require_same_block(const BlockPtr& a, const BlockPtr& b, std::string_view what);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// in descending graded-reverse-lex order with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal.
class Polynomial {
public:
  Polynomial() : Polynomial(plane_block()) {}
  explicit Polynomial(BlockPtr block);

  static Polynomial from_terms(BlockPtr block, std::vector<Term> terms);
  static Polynomial constant(BlockPtr block, const Rational& c);
  static Polynomial variable(BlockPtr block, std::size_t index);
  static Polynomial monomial(BlockPtr block, const Monomial& m, const Rational& c = 1);
  /// Linear form sum_i coeffs[i] * x_i.
  static Polynomial linear_form(BlockPtr block, std::span<const Rational> coeffs);

  const BlockPtr& block() const { return block_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Largest total degree; 0 for the zero polynomial.
  unsigned total_degree() const;
  bool is_homogeneous() const;
  /// Coefficient of m (zero when absent).
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial pow(unsigned e) const;
  /// Divides by the grevlex-leading coefficient (zero stays zero).
  Polynomial monic() const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Rewrites this polynomial in `target`, sending variable i to variable
  /// var_map[i].
  Polynomial embed(const BlockPtr& target, std::span<const std::size_t> var_map) const;

  /// Human-readable text form, e.g. "x0^2 - 1/2*x1*x2 + 3".
  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

private:
  BlockPtr block_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// Product of all factors; the empty product is the constant 1 over `block`.
Polynomial product(const BlockPtr& block, std::span<const Polynomial> factors);

} // namespace hfg

#endif
