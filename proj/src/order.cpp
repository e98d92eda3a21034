#include "hfg/order.hpp"

#include <cassert>

namespace hfg {

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t first, std::size_t last) {
  const unsigned da = a.partial_degree(first, last);
  const unsigned db = b.partial_degree(first, last);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = last; i-- > first;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  assert(a.arity() == b.arity());
  const std::size_t n = a.arity();
  switch (kind) {
  case OrderKind::GradedReverseLex: {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  case OrderKind::Lex:
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  case OrderKind::BlockElimination: {
    const std::size_t k = keep < n ? keep : n;
    if (int c = grevlex_range(a, b, k, n)) return c;
    return grevlex_range(a, b, 0, k);
  }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
  case OrderKind::GradedReverseLex: return "grevlex";
  case OrderKind::Lex: return "lex";
  case OrderKind::BlockElimination: return "elim(" + std::to_string(keep) + ")";
  }
  return "?";
}

} // namespace hfg
