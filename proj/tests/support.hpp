// Test-only oracles and a small generator-driven property harness.
#ifndef HFG_TESTS_SUPPORT_HPP
#define HFG_TESTS_SUPPORT_HPP

#include "hfg/fatgrid.hpp"
#include "hfg/polynomial.hpp"
#include "hfg/projective.hpp"
#include "hfg/rational.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hfg::testing {

inline Polynomial x(std::size_t i) { return Polynomial::variable(plane_block(), i); }
inline Polynomial c(long v) { return Polynomial::constant(plane_block(), Rational(v)); }
inline Polynomial lin(long a, long b, long c) {
  const Rational coeffs[3] = {a, b, c};
  return Polynomial::linear_form(plane_block(), coeffs);
}

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Partial derivative of f with respect to x_v.
inline Polynomial derivative(const Polynomial& f, std::size_t v) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    if (t.monomial[v] == 0) continue;
    Monomial m = t.monomial;
    m.set(v, m[v] - 1);
    terms.push_back({m, t.coeff * t.monomial[v]});
  }
  return Polynomial::from_terms(f.block(), std::move(terms));
}

/// Order of vanishing by brute force: the least k such that some k-th
/// partial derivative is nonzero at p.
inline unsigned derivative_order(const Polynomial& f, const Point& p) {
  std::vector<Polynomial> level{f};
  for (unsigned k = 0;; ++k) {
    for (const auto& g : level)
      if (g.evaluate(p.span()) != 0) return k;
    std::vector<Polynomial> next;
    for (const auto& g : level)
      for (std::size_t v = 0; v < 3; ++v) {
        Polynomial d = derivative(g, v);
        if (!d.is_zero()) next.push_back(std::move(d));
      }
    if (next.empty()) return ~0u;
    level = std::move(next);
  }
}

/// Rank over the rationals by plain Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

using Rng = std::mt19937_64;

inline unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

inline long uniform_long(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational nonzero_rational(Rng& rng, long bound = 9) {
  long num = 0;
  while (num == 0) num = uniform_long(rng, -bound, bound);
  return make_rational(num, uniform_long(rng, 1, bound));
}

inline Point random_point_off_lines(Rng& rng) {
  return Point(1, nonzero_rational(rng), nonzero_rational(rng));
}

inline std::vector<unsigned> random_multiplicities(Rng& rng, unsigned count, unsigned max) {
  std::vector<unsigned> out(count);
  for (auto& v : out) v = uniform(rng, 1, max);
  return out;
}

inline std::string show(const std::vector<unsigned>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

/// Runs `property(rng, case_index)` for `cases` seeds derived from `seed`.
/// The property reports failures through doctest checks; the failing seed is
/// attached as context.
template <class Property>
void for_all(const char* name, unsigned cases, std::uint64_t seed, Property&& property) {
  for (unsigned i = 0; i < cases; ++i) {
    const std::uint64_t case_seed = seed * 1000003u + i;
    Rng rng(case_seed);
    INFO(name << " case " << i << " seed " << case_seed);
    property(rng);
  }
}

} // namespace hfg::testing

#endif
