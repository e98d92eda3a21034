#include "hfg/kernels.hpp"

#include <algorithm>
#include <utility>

namespace hfg {

namespace {

// Moves a row with a nonzero entry in column `col` (at or below `top`) into
// position `top`. Returns false when the column is zero there.
bool bring_pivot(IntMatrix& m, std::size_t top, std::size_t col) {
  for (std::size_t i = top; i < m.rows(); ++i) {
    if (sgn(m(i, col)) != 0) {
      if (i != top)
        for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(i, j), m(top, j));
      return true;
    }
  }
  return false;
}

void eliminate_row(IntMatrix& m, std::size_t top, std::size_t col, std::size_t i, const Integer& prev) {
  const Integer& pivot = m(top, col);
  const Integer factor = m(i, col);
  Integer tmp;
  for (std::size_t j = col + 1; j < m.cols(); ++j) {
    tmp = pivot * m(i, j) - factor * m(top, j);
    mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
  }
  m(i, col) = 0;
}

} // namespace

std::size_t exact_rank_serial(IntMatrix m) {
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    if (!bring_pivot(m, rank, col)) continue;
    for (std::size_t i = rank + 1; i < m.rows(); ++i) eliminate_row(m, rank, col, i, prev);
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

std::size_t exact_rank(IntMatrix m) {
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    if (!bring_pivot(m, rank, col)) continue;
    const long first = static_cast<long>(rank + 1), last = static_cast<long>(m.rows());
#pragma omp parallel for schedule(static)
    for (long i = first; i < last; ++i) eliminate_row(m, rank, col, static_cast<std::size_t>(i), prev);
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

std::vector<std::array<unsigned, 3>> degree_monomials(unsigned d) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned a = d + 1; a-- > 0;)
    for (unsigned b = d - a + 1; b-- > 0;) out.push_back({a, b, d - a - b});
  return out;
}

std::size_t condition_rows(std::span<const FatPoint> points, unsigned d) {
  std::size_t rows = 0;
  for (const auto& p : points) {
    const std::size_t o = std::min(p.multiplicity - 1, d);
    rows += (o + 1) * (o + 2) / 2;
  }
  return rows;
}

IntMatrix condition_matrix(std::span<const FatPoint> points, unsigned d) {
  const auto monomials = degree_monomials(d);
  IntMatrix out(condition_rows(points, d), monomials.size());
  std::size_t row = 0;
  for (const auto& p : points) {
    if (p.multiplicity == 0) continue;
    const unsigned order = std::min(p.multiplicity - 1, d);
    for (const auto& gamma : degree_monomials(order)) {
      for (std::size_t c = 0; c < monomials.size(); ++c) {
        const auto& e = monomials[c];
        Integer entry = 1;
        for (int v = 0; v < 3 && sgn(entry) != 0; ++v) {
          if (e[v] < gamma[v]) {
            entry = 0;
            break;
          }
          Integer b, pw;
          mpz_bin_uiui(b.get_mpz_t(), e[v], gamma[v]);
          mpz_pow_ui(pw.get_mpz_t(), p.coords[v].get_mpz_t(), e[v] - gamma[v]);
          entry *= b * pw;
        }
        out(row, c) = entry;
      }
      ++row;
    }
  }
  return out;
}

} // namespace hfg
