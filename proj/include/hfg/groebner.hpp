#ifndef HFG_GROEBNER_HPP
#define HFG_GROEBNER_HPP

#include "hfg/order.hpp"
#include "hfg/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hfg {

/// Counters from one Buchberger run.
struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced, monic Groebner basis of the ideal generated by `gens`.
///
/// Buchberger's algorithm with the Gebauer-Moeller form of the two Buchberger
/// criteria and sugar-degree pair selection. The result is sorted by
/// descending leading monomial under `order` and is unique for the ideal and
/// order. Zero generators are ignored; an empty input yields an empty basis.
/// Throws BlockMismatch when the generators live over different blocks.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                                   GroebnerStats* stats = nullptr);

/// Remainder of f after full reduction by `basis`. When `basis` is a
/// Groebner basis for `order` the result is zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order);

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

} // namespace hfg

#endif
