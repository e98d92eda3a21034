#include "hfg/invariants.hpp"

#include "hfg/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hfg {

namespace {

unsigned positive_part(long v) { return v > 0 ? static_cast<unsigned>(v) : 0u; }

bool dominated(const IntTuple& a, const IntTuple& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

} // namespace

std::vector<IntTuple> s_tuples(const MultiplicityMatrix& mult) {
  std::vector<IntTuple> out;
  for (const auto& row : mult) {
    const unsigned top = row.empty() ? 0 : *std::max_element(row.begin(), row.end());
    for (unsigned h = 0; h < top; ++h) {
      IntTuple t;
      for (unsigned w : row) t.push_back(positive_part(long(w) - long(h)));
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<IntTuple> s_tuples(const FatGrid& grid) { return s_tuples(grid.multiplicity_matrix()); }

bool is_totally_ordered(std::span<const IntTuple> tuples) {
  std::vector<IntTuple> distinct(tuples.begin(), tuples.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t a = 0; a < distinct.size(); ++a)
    for (std::size_t b = a + 1; b < distinct.size(); ++b)
      if (!dominated(distinct[a], distinct[b]) && !dominated(distinct[b], distinct[a])) return false;
  return true;
}

AlphaTuple alpha_tuple(const FatGrid& grid) {
  AlphaTuple out;
  const unsigned ns = grid.n().back();
  for (unsigned mi : grid.m()) {
    for (unsigned h = 0; h + 1 < mi + ns; ++h) {
      unsigned a = 0;
      for (unsigned ne : grid.n()) a += positive_part(long(mi) + long(ne) - 1 - long(h));
      out.entries.push_back(a);
    }
  }
  std::sort(out.entries.begin(), out.entries.end(), std::greater<>());
  return out;
}

CornerSets corner_sets(const AlphaTuple& alpha) {
  const auto& a = alpha.entries;
  if (a.empty()) throw DomainError("corner_sets: empty tuple");
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] > a[i - 1]) throw DomainError("corner_sets: tuple is not non-increasing");
  const unsigned m = static_cast<unsigned>(a.size());
  CornerSets cs;
  cs.C.push_back({0, a.front()});
  // 1-based position i has a[i-1]; a descent at i contributes (i-1, alpha_i)
  // to C and (i-1, alpha_{i-1}) to V.
  for (unsigned i = 2; i <= m; ++i) {
    if (a[i - 1] < a[i - 2]) {
      cs.C.push_back({i - 1, a[i - 1]});
      cs.V.push_back({i - 1, a[i - 2]});
    }
  }
  cs.C.push_back({m, 0});
  cs.V.push_back({m, a.back()});
  return cs;
}

ResolutionShifts shifts_from_corners(const CornerSets& corners) {
  ResolutionShifts r;
  for (const auto& [c1, c2] : corners.C) r.generator_twists.push_back(c1 + c2);
  for (const auto& [v1, v2] : corners.V) r.syzygy_twists.push_back(v1 + v2);
  std::sort(r.generator_twists.begin(), r.generator_twists.end());
  std::sort(r.syzygy_twists.begin(), r.syzygy_twists.end());
  return r;
}

ResolutionShifts resolution(const FatGrid& grid) { return shifts_from_corners(corner_sets(alpha_tuple(grid))); }

std::vector<GeneratorPattern> generator_patterns(const FatGrid& grid) {
  const std::size_t r = grid.r(), s = grid.s();
  const auto& m = grid.m();
  const auto& n = grid.n();
  std::vector<long> a(r), b(s);
  for (std::size_t i = 0; i < r; ++i) a[i] = long(m[r - 1 - i]) + long(n[s - 1]) - 1;
  for (std::size_t j = 0; j < s; ++j) b[j] = long(n[s - 1 - j]) - long(n[s - 1]);
  const unsigned count = m[r - 1] + n[s - 1];
  std::vector<GeneratorPattern> out;
  for (unsigned k = 0; k < count; ++k) {
    GeneratorPattern p;
    p.k = k;
    for (long ai : a) p.h_exponents.push_back(positive_part(ai - long(k)));
    for (long bj : b) p.v_exponents.push_back(positive_part(bj + long(k)));
    out.push_back(std::move(p));
  }
  return out;
}

unsigned alpha_degree(const FatGrid& grid) {
  const std::size_t r = grid.r(), s = grid.s();
  unsigned sum = 0;
  for (std::size_t i = 0; i < r; ++i) sum += grid.m()[i] + grid.n()[s - 1 - i];
  return sum - static_cast<unsigned>(r);
}

unsigned beta_degree(const FatGrid& grid) {
  const unsigned mr = grid.m().back(), ns = grid.n().back();
  unsigned by_cols = 0, by_rows = 0;
  for (unsigned nj : grid.n()) by_cols += mr + nj - 1;
  for (unsigned mi : grid.m()) by_rows += ns + mi - 1;
  return std::max(by_cols, by_rows);
}

Rational waldschmidt(const FatGrid& grid) { return Rational(alpha_degree(grid)); }

std::int64_t hilbert_from_resolution(const ResolutionShifts& shifts, unsigned d) {
  auto binom2 = [d](unsigned twist) -> std::int64_t {
    if (d < twist) return 0;
    const std::int64_t k = std::int64_t(d - twist) + 2;
    return k * (k - 1) / 2;
  };
  std::int64_t total = 0;
  for (unsigned c : shifts.generator_twists) total += binom2(c);
  for (unsigned v : shifts.syzygy_twists) total -= binom2(v);
  return total;
}

namespace {

GeneratorPattern product_pattern(const std::vector<GeneratorPattern>& base, const std::vector<unsigned>& idx) {
  GeneratorPattern p;
  p.h_exponents.assign(base.front().h_exponents.size(), 0);
  p.v_exponents.assign(base.front().v_exponents.size(), 0);
  for (unsigned k : idx) {
    p.k += base[k].k;
    for (std::size_t i = 0; i < p.h_exponents.size(); ++i) p.h_exponents[i] += base[k].h_exponents[i];
    for (std::size_t j = 0; j < p.v_exponents.size(); ++j) p.v_exponents[j] += base[k].v_exponents[j];
  }
  return p;
}

// Calls visit on every non-decreasing index tuple of length t over [0, count).
template <class Visit>
void for_each_multiset(unsigned count, unsigned t, Visit&& visit) {
  std::vector<unsigned> idx(t, 0);
  while (true) {
    if (!visit(idx)) return;
    std::size_t pos = t;
    while (pos > 0 && idx[pos - 1] == count - 1) --pos;
    if (pos == 0) return;
    const unsigned v = idx[pos - 1] + 1;
    for (std::size_t q = pos - 1; q < t; ++q) idx[q] = v;
  }
}

ResurgenceStep certify_step(const FatGrid& grid, const std::vector<GeneratorPattern>& base, unsigned t) {
  ResurgenceStep step;
  step.t = t;
  const FatGrid sym = symbolic_grid(grid, t);
  step.symbolic_patterns = generator_patterns(sym);

  // Scaled exponents t*a_i and t*b_j with k = 0 .. t(m_r + n_s - 1).
  const std::size_t r = grid.r(), s = grid.s();
  const auto& m = grid.m();
  const auto& n = grid.n();
  step.matches_scaled_formula = step.symbolic_patterns.size() == t * (m[r - 1] + n[s - 1] - 1) + 1;
  for (std::size_t k = 0; k < step.symbolic_patterns.size() && step.matches_scaled_formula; ++k) {
    const auto& p = step.symbolic_patterns[k];
    for (std::size_t i = 0; i < r; ++i)
      if (p.h_exponents[i] != positive_part(long(t) * (long(m[r - 1 - i]) + long(n[s - 1]) - 1) - long(k)))
        step.matches_scaled_formula = false;
    for (std::size_t j = 0; j < s; ++j)
      if (p.v_exponents[j] != positive_part(long(t) * (long(n[s - 1 - j]) - long(n[s - 1])) + long(k)))
        step.matches_scaled_formula = false;
  }

  const unsigned count = static_cast<unsigned>(base.size());
  bool all_factored = true;
  for (const auto& target : step.symbolic_patterns) {
    std::vector<unsigned> found;
    for_each_multiset(count, t, [&](const std::vector<unsigned>& idx) {
      if (std::accumulate(idx.begin(), idx.end(), 0u) != target.k) return true;
      GeneratorPattern prod = product_pattern(base, idx);
      if (prod.h_exponents == target.h_exponents && prod.v_exponents == target.v_exponents) {
        found = idx;
        return false;
      }
      return true;
    });
    if (found.empty()) all_factored = false;
    step.factorizations.push_back(std::move(found));
  }

  step.products_in_symbolic = true;
  for_each_multiset(count, t, [&](const std::vector<unsigned>& idx) {
    const GeneratorPattern prod = product_pattern(base, idx);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        const unsigned order = prod.h_exponents[grid.h_index(i)] + prod.v_exponents[grid.v_index(j)];
        if (order < t * grid.multiplicity(i, j)) {
          step.products_in_symbolic = false;
          return false;
        }
      }
    }
    return true;
  });

  step.passed = step.matches_scaled_formula && all_factored && step.products_in_symbolic;
  return step;
}

} // namespace

ResurgenceCertificate resurgence_certificate(const FatGrid& grid, unsigned t_max) {
  if (t_max == 0) throw DomainError("resurgence_certificate: t_max must be at least 1");
  const std::vector<GeneratorPattern> base = generator_patterns(grid);
  ResurgenceCertificate cert;
  cert.steps.resize(t_max);
#pragma omp parallel for schedule(dynamic)
  for (unsigned t = 1; t <= t_max; ++t) cert.steps[t - 1] = certify_step(grid, base, t);
  cert.passed = std::all_of(cert.steps.begin(), cert.steps.end(), [](const ResurgenceStep& s) { return s.passed; });
  cert.resurgence = cert.passed ? Rational(1) : Rational(0);
  return cert;
}

} // namespace hfg
