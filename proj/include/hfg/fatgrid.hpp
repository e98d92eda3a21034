#ifndef HFG_FATGRID_HPP
#define HFG_FATGRID_HPP

#include "hfg/ideal.hpp"
#include "hfg/projective.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hfg {

/// Collinear points off the coordinate lines with positive multiplicities,
/// sorted by non-decreasing multiplicity (points permuted in tandem).
struct WeightedPointSet {
  std::vector<Point> points;
  std::vector<unsigned> multiplicities;
  /// Supporting line. Derived from the points when there are at least two;
  /// a singleton set may carry one explicitly or have one chosen at build.
  std::optional<Line> line;

  /// Validates and sorts. Throws InvalidGrid on empty or mismatched input,
  /// zero multiplicities, repeated points, points on a coordinate line, or
  /// non-collinear points.
  static WeightedPointSet make(std::vector<Point> points, std::vector<unsigned> multiplicities,
                               std::optional<Line> line = std::nullopt);

  std::size_t size() const { return points.size(); }
};

/// H_1^{h_1} ... H_r^{h_r} V_1^{v_1} ... V_s^{v_s} with
/// h_i = (a_i - k)_+, v_j = (b_j + k)_+, a_i = m_{r-i+1} + n_s - 1 and
/// b_j = n_{s-j+1} - n_s.
struct GeneratorPattern {
  unsigned k = 0;
  std::vector<unsigned> h_exponents;
  std::vector<unsigned> v_exponents;

  unsigned degree() const;
  bool operator==(const GeneratorPattern&) const = default;
};

/// A Hadamard fat grid HFG(P_M, Q_N) with r <= s.
///
/// Rows are indexed by the points of P_M and columns by Q_N (0-based here).
/// Grid point (i, j) = P_i * Q_j carries multiplicity m_i + n_j - 1 and lies on
/// H_{r-i} and V_{s-j} (0-based), where H_{r-1-i} = l_Q * P_i and
/// V_{s-1-j} = l_P * Q_j.
class FatGrid {
public:
  std::size_t r() const { return rows_.size(); }
  std::size_t s() const { return cols_.size(); }
  const WeightedPointSet& rows() const { return rows_; }
  const WeightedPointSet& cols() const { return cols_; }
  const std::vector<unsigned>& m() const { return rows_.multiplicities; }
  const std::vector<unsigned>& n() const { return cols_.multiplicities; }

  const Point& point(std::size_t i, std::size_t j) const { return points_[i * s() + j]; }
  unsigned multiplicity(std::size_t i, std::size_t j) const { return m()[i] + n()[j] - 1; }
  std::vector<std::vector<unsigned>> multiplicity_matrix() const;
  unsigned total_multiplicity() const;

  const std::vector<Line>& h_lines() const { return h_lines_; }
  const std::vector<Line>& v_lines() const { return v_lines_; }
  std::size_t h_index(std::size_t row) const { return r() - 1 - row; }
  std::size_t v_index(std::size_t col) const { return s() - 1 - col; }

  /// True when the inputs had more row points than column points and the
  /// roles were exchanged.
  bool swapped() const { return swapped_; }

private:
  friend FatGrid build_grid(WeightedPointSet, WeightedPointSet);
  friend FatGrid symbolic_grid(const FatGrid&, unsigned);

  WeightedPointSet rows_;
  WeightedPointSet cols_;
  std::vector<Point> points_;
  std::vector<Line> h_lines_;
  std::vector<Line> v_lines_;
  bool swapped_ = false;
};

/// Throws InvalidGrid when the Hadamard products are not pairwise distinct or
/// the grid lines do not form an (r, s) complete intersection.
FatGrid build_grid(WeightedPointSet row_set, WeightedPointSet col_set);

/// Grid with default points P_i = [1 : 1 : i+1] on x0 - x1 = 0 and
/// Q_j = [1 : j+1 : 1] on x0 - x2 = 0 (1-based i, j).
FatGrid abstract_grid(std::vector<unsigned> m, std::vector<unsigned> n);

/// Same points with multiplicities t*m_i - (t-1) and t*n_j, whose ideal is the
/// t-th symbolic power. Throws DomainError for t = 0.
FatGrid symbolic_grid(const FatGrid& grid, unsigned t);

/// Product of H and V forms with the pattern's exponents. Throws DomainError
/// on a pattern with no factors or of the wrong shape.
Polynomial expand_pattern(const FatGrid& grid, const GeneratorPattern& pattern);
IdealPresentation pattern_ideal(const FatGrid& grid, std::span<const GeneratorPattern> patterns);

struct OracleBudget {
  /// Upper bound on the sum of all grid multiplicities.
  unsigned max_total_multiplicity = 24;
};

/// Intersection of I(P_i * Q_j)^{m_ij} over the grid, folded in row-major
/// order or in `fold_order` (a permutation of 0 .. r*s-1) when given. The
/// point-ideal powers and their bases are prepared in parallel.
IdealPresentation grid_ideal_intersection(const FatGrid& grid, const OracleBudget& budget = {},
                                          std::span<const std::size_t> fold_order = {});

} // namespace hfg

#endif
