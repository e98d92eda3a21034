#ifndef HFG_IDEAL_HPP
#define HFG_IDEAL_HPP

#include "hfg/groebner.hpp"
#include "hfg/order.hpp"
#include "hfg/polynomial.hpp"

#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace hfg {

/// Work limits for elimination-based operations (join, Hadamard product).
struct GroebnerBudget {
  std::size_t max_variables = 9;
  unsigned max_input_degree = 12;

  static GroebnerBudget unlimited() { return {kMaxVariables, ~0u}; }
  /// Throws BudgetExceeded when an elimination over `variables` variables with
  /// inputs of degree up to `degree` is out of bounds.
  void check(std::size_t variables, unsigned degree, const char* what) const;
};

/// A finite generating set of an ideal together with a lazily computed,
/// write-once reduced Groebner basis per monomial order. Copies share the
/// cache, which is safe because generators never change after construction.
class IdealPresentation {
public:
  explicit IdealPresentation(BlockPtr block, std::vector<Polynomial> gens = {});

  const BlockPtr& block() const { return block_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_homogeneous() const;
  unsigned max_degree() const;

  /// Reduced monic Groebner basis; computed once per order and cached.
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  bool contains(const Polynomial& f) const;
  /// True iff other is a subset of this ideal.
  bool contains(const IdealPresentation& other) const;
  bool is_zero() const;
  bool is_unit() const;

private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>>> bases;
  };

  BlockPtr block_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Canonical-form comparison of reduced grevlex bases.
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b);

IdealPresentation ideal_sum(const IdealPresentation& a, const IdealPresentation& b);
IdealPresentation ideal_product(const IdealPresentation& a, const IdealPresentation& b);
/// Generators are all m-fold products of the input generators; m = 0 throws.
IdealPresentation ideal_power(const IdealPresentation& ideal, unsigned m);
/// I intersect J via t*I + (1-t)*J with t eliminated.
IdealPresentation ideal_intersection(const IdealPresentation& a, const IdealPresentation& b);
/// Left fold of ideal_intersection over a non-empty list.
IdealPresentation intersect_all(std::span<const IdealPresentation> ideals);

/// Restricts `gens` (over a block whose first `keep` variables form `target`)
/// to the elimination ideal in the first `keep` variables.
IdealPresentation eliminate(std::span<const Polynomial> gens, std::size_t keep, const BlockPtr& target);

/// Join I * J: eliminate y, z from I(y) + J(z) + <x_i - y_i - z_i>.
IdealPresentation join_ideals(const IdealPresentation& a, const IdealPresentation& b,
                              const GroebnerBudget& budget = {});
/// Hadamard product I (star) J: eliminate y, z from I(y) + J(z) + <x_i - y_i z_i>.
IdealPresentation hadamard_ideals(const IdealPresentation& a, const IdealPresentation& b,
                                  const GroebnerBudget& budget = {});

/// Coefficient of X^I in f divided by P^I. Requires f homogeneous and every
/// coordinate nonzero; throws DomainError otherwise.
Polynomial hadamard_transform(const Polynomial& f, std::span<const Rational> coords);
/// Ideal generated by the transforms of the generators of `ideal`.
IdealPresentation hadamard_transform(const IdealPresentation& ideal, std::span<const Rational> coords);

/// All monomials of degree t over `block`; t = 0 throws.
IdealPresentation irrelevant_power(unsigned t, const BlockPtr& block = plane_block());

} // namespace hfg

#endif
