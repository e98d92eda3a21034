#ifndef HFG_ORDER_HPP
#define HFG_ORDER_HPP

#include "hfg/monomial.hpp"

#include <cstddef>
#include <string>

namespace hfg {

enum class OrderKind { GradedReverseLex, Lex, BlockElimination };

/// A monomial order on a block x_0 > x_1 > ... > x_{n-1}.
///
/// BlockElimination keeps the first `keep` variables (the x-block) and
/// eliminates the rest: the trailing segment is compared first by grevlex,
/// ties are broken by grevlex on the kept segment. Any monomial that involves
/// an eliminated variable is therefore larger than every monomial in the kept
/// variables alone.
struct MonomialOrder {
  OrderKind kind = OrderKind::GradedReverseLex;
  std::size_t keep = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t keep) { return {OrderKind::BlockElimination, keep}; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;
  std::string name() const;
};

} // namespace hfg

#endif
