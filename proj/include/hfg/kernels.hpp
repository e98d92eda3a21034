#ifndef HFG_KERNELS_HPP
#define HFG_KERNELS_HPP

#include "hfg/rational.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace hfg {

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination, single-threaded.
std::size_t exact_rank_serial(IntMatrix m);
/// Same elimination with the row updates of each pivot step run in parallel.
std::size_t exact_rank(IntMatrix m);

/// A point with integer coordinates that must vanish to the given order.
struct FatPoint {
  std::array<Integer, 3> coords;
  unsigned multiplicity = 1;
};

/// Exponent vectors of the degree-d monomials in three variables, in
/// descending lex order.
std::vector<std::array<unsigned, 3>> degree_monomials(unsigned d);

/// Linear conditions on the coefficients of a degree-d form for vanishing to
/// order m at each point: one row per gamma with |gamma| = min(m - 1, d),
/// entry prod_j binom(e_j, gamma_j) p_j^(e_j - gamma_j) at monomial x^e.
IntMatrix condition_matrix(std::span<const FatPoint> points, unsigned d);
std::size_t condition_rows(std::span<const FatPoint> points, unsigned d);

} // namespace hfg

#endif
