#ifndef HFG_INVARIANTS_HPP
#define HFG_INVARIANTS_HPP

#include "hfg/fatgrid.hpp"
#include "hfg/rational.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hfg {

using IntTuple = std::vector<unsigned>;
using MultiplicityMatrix = std::vector<std::vector<unsigned>>;

/// Tuples (t_i1(h), ..., t_is(h)) with t_ij(h) = (mult_ij - h)_+ for every row
/// i and h = 0 .. max_j mult_ij - 1 (for a grid: h = 0 .. m_i + n_s - 2).
std::vector<IntTuple> s_tuples(const MultiplicityMatrix& mult);
std::vector<IntTuple> s_tuples(const FatGrid& grid);

/// True iff the distinct tuples form a chain under the componentwise order.
bool is_totally_ordered(std::span<const IntTuple> tuples);

/// The partial multiplicity sums a_{i,h}, sorted descending.
struct AlphaTuple {
  std::vector<unsigned> entries;
};

AlphaTuple alpha_tuple(const FatGrid& grid);

using Corner = std::pair<unsigned, unsigned>;

struct CornerSets {
  std::vector<Corner> C; ///< sorted by first coordinate
  std::vector<Corner> V; ///< sorted by first coordinate
};

/// With A = (alpha_1, ..., alpha_m):
///   C = {(m, 0), (0, alpha_1)} + {(i-1, alpha_i) : alpha_i < alpha_{i-1}}
///   V = {(m, alpha_m)}         + {(i-1, alpha_{i-1}) : alpha_i < alpha_{i-1}}
/// Throws DomainError on an empty or increasing tuple.
CornerSets corner_sets(const AlphaTuple& alpha);

/// Total-degree twists of 0 -> (+) R(-v) -> (+) R(-c) -> I -> 0, as sorted
/// multisets.
struct ResolutionShifts {
  std::vector<unsigned> generator_twists;
  std::vector<unsigned> syzygy_twists;
};

ResolutionShifts shifts_from_corners(const CornerSets& corners);
ResolutionShifts resolution(const FatGrid& grid);

/// The m_r + n_s minimal generator patterns, k = 0 .. m_r + n_s - 1.
std::vector<GeneratorPattern> generator_patterns(const FatGrid& grid);

/// sum_i m_i + sum_{i<=r} n_{s-i+1} - r.
unsigned alpha_degree(const FatGrid& grid);
/// max { sum_j (m_r + n_j - 1), sum_i (n_s + m_i - 1) }.
unsigned beta_degree(const FatGrid& grid);
Rational waldschmidt(const FatGrid& grid);

/// dim I_d = sum_C binom(d - c + 2, 2) - sum_V binom(d - v + 2, 2), with
/// terms for d < c (resp. d < v) omitted.
std::int64_t hilbert_from_resolution(const ResolutionShifts& shifts, unsigned d);

struct ResurgenceStep {
  unsigned t = 0;
  /// Symbolic-power patterns obtained from the grid with multiplicities
  /// t*m_i - (t-1), t*n_j.
  std::vector<GeneratorPattern> symbolic_patterns;
  /// True iff symbolic_patterns have exponents (t a_i - k)_+, (t b_j + k)_+.
  bool matches_scaled_formula = false;
  /// For each symbolic pattern, the indices of t ordinary patterns whose
  /// product equals it (empty when none was found).
  std::vector<std::vector<unsigned>> factorizations;
  /// Every t-fold product of ordinary patterns vanishes to order >= t*m_ij.
  bool products_in_symbolic = false;
  bool passed = false;
};

struct ResurgenceCertificate {
  std::vector<ResurgenceStep> steps;
  bool passed = false;
  /// 1 when every step passes.
  Rational resurgence;
};

/// Checks I^(t) = I^t on generator patterns for t = 1 .. t_max. Steps are
/// computed in parallel and reported in increasing t.
ResurgenceCertificate resurgence_certificate(const FatGrid& grid, unsigned t_max);

} // namespace hfg

#endif
